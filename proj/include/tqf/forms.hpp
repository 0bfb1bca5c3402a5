#ifndef TQF_FORMS_HPP
#define TQF_FORMS_HPP

#include <array>
#include <functional>
#include <optional>

#include "tqf/scalar.hpp"

namespace tqf {

class Vec3 {
 public:
  Vec3(Scalar a, Scalar b, Scalar c);
  static Vec3 zero(const Ring& r);
  static Vec3 unit(const Ring& r, int i);  // e_i, i in 0..2

  const Ring& ring() const { return ring_; }
  const Scalar& operator[](int i) const { return v_[static_cast<std::size_t>(i)]; }
  Scalar& operator[](int i) { return v_[static_cast<std::size_t>(i)]; }
  Vec3 operator+(const Vec3& o) const;
  Vec3 operator*(const Scalar& c) const;
  bool operator==(const Vec3& o) const { return v_ == o.v_; }

 private:
  Ring ring_;
  std::array<Scalar, 3> v_;
};

/// 3x3 matrix of scalars, row-major. Doubles as the matrix (b_ij) of a
/// bilinear form b(x,x') = sum b_ij x_i x'_j.
class Mat3 {
 public:
  explicit Mat3(const Ring& r);  // zero matrix
  static Mat3 identity(const Ring& r);
  static Mat3 from_rows(const std::array<Scalar, 9>& entries);
  static Mat3 diagonal(Scalar a, Scalar b, Scalar c);

  const Ring& ring() const { return ring_; }
  const Scalar& at(int i, int j) const { return m_[static_cast<std::size_t>(3 * i + j)]; }
  Scalar& at(int i, int j) { return m_[static_cast<std::size_t>(3 * i + j)]; }

  Mat3 operator+(const Mat3& o) const;
  Mat3 operator-(const Mat3& o) const;
  Mat3 operator*(const Mat3& o) const;
  Mat3 operator*(const Scalar& c) const;
  Mat3 operator-() const;
  Vec3 operator*(const Vec3& v) const;
  bool operator==(const Mat3& o) const { return m_ == o.m_; }

  Mat3 transpose() const;
  Scalar det() const;
  Mat3 adjugate() const;
  /// Exact inverse via adjugate / det; throws std::domain_error unless det is a unit.
  Mat3 inverse() const;
  Vec3 column(int j) const;
  Vec3 row(int i) const;

 private:
  Ring ring_;
  std::array<Scalar, 9> m_;
};

/// Ternary quadratic form sum_i l_i x_i^2 + sum_{i<j} l_ij x_i x_j.
class TernaryForm {
 public:
  TernaryForm(Scalar l1, Scalar l2, Scalar l3, Scalar l12, Scalar l13, Scalar l23);
  static TernaryForm zero(const Ring& r);
  /// q1 = x1*x2 + x3^2, the semiregular normal form.
  static TernaryForm q1(const Ring& r);

  const Ring& ring() const { return ring_; }
  const Scalar& l1() const { return c_[0]; }
  const Scalar& l2() const { return c_[1]; }
  const Scalar& l3() const { return c_[2]; }
  const Scalar& l12() const { return c_[3]; }
  const Scalar& l13() const { return c_[4]; }
  const Scalar& l23() const { return c_[5]; }
  const std::array<Scalar, 6>& coeffs() const { return c_; }

  Scalar evaluate(const Vec3& v) const;
  bool operator==(const TernaryForm& o) const { return c_ == o.c_; }
  bool operator!=(const TernaryForm& o) const { return !(*this == o); }
  bool is_zero() const;
  std::string to_string() const;

 private:
  Ring ring_;
  std::array<Scalar, 6> c_;  // l1,l2,l3,l12,l13,l23
};

/// Symmetric matrix of b_q(x,x') = q(x+x') - q(x) - q(x').
Mat3 assoc_bilinear(const TernaryForm& q);

/// Quadratic form x -> b(x,x) of a (not necessarily symmetric) bilinear form.
TernaryForm induced_quadratic(const Mat3& b);

/// Fixed section of induced_quadratic: diagonal l_i with b21 = l12,
/// b32 = l23, b13 = l13, all other entries zero.
Mat3 canonical_lift(const TernaryForm& q);

/// The half-discriminant 4*l1*l2*l3 + l12*l13*l23
/// - (l1*l23^2 + l2*l13^2 + l3*l12^2).
Scalar half_discriminant(const TernaryForm& q);
bool is_semiregular(const TernaryForm& q);

/// (g.q)(v) = q(g^-1 v); requires det(g) to be a unit.
TernaryForm act(const Mat3& g, const TernaryForm& q);

/// Multiplies every coefficient by the unit u.
TernaryForm scale(const Scalar& u, const TernaryForm& q);

struct SimilarityWitness {
  Mat3 g;
  Scalar multiplier;
};

/// Exhaustive search over GL3(field) x units for act(g,q) = scale(u^-1, q').
/// Deterministic: g lexicographic over entries, then u in element order.
std::optional<SimilarityWitness> similar_bruteforce(const TernaryForm& q, const TernaryForm& qp);

/// Calls fn for every invertible 3x3 matrix over the finite field, in
/// lexicographic order over row-major entries. Stops early when fn
/// returns false.
void for_each_gl3(const Ring& field, const std::function<bool(const Mat3&)>& fn);

}  // namespace tqf

#endif
