#ifndef TQF_ALGEBRA4_HPP
#define TQF_ALGEBRA4_HPP

#include <array>
#include <optional>
#include <vector>

#include "tqf/forms.hpp"
#include "tqf/scalar.hpp"

namespace tqf {

/// 4x4 matrix of scalars, row-major.
class Mat4 {
 public:
  explicit Mat4(const Ring& r);  // zero
  static Mat4 identity(const Ring& r);
  const Ring& ring() const { return ring_; }
  const Scalar& at(int i, int j) const { return m_[static_cast<std::size_t>(4 * i + j)]; }
  Scalar& at(int i, int j) { return m_[static_cast<std::size_t>(4 * i + j)]; }
  Mat4 operator*(const Mat4& o) const;
  bool operator==(const Mat4& o) const { return m_ == o.m_; }
  Scalar det() const;
  /// Exact inverse; throws std::domain_error unless det is a unit.
  Mat4 inverse() const;

 private:
  Ring ring_;
  std::array<Scalar, 16> m_;
};

/// Element of a rank-4 algebra in coordinates over the basis (w, e1, e2, e3).
class Element4 {
 public:
  explicit Element4(const Ring& r);  // zero
  Element4(Scalar c0, Scalar c1, Scalar c2, Scalar c3);
  static Element4 basis(const Ring& r, int i);
  const Ring& ring() const { return ring_; }
  const Scalar& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  Scalar& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }
  Element4 operator+(const Element4& o) const;
  Element4 operator-(const Element4& o) const;
  Element4 operator*(const Scalar& s) const;
  bool operator==(const Element4& o) const { return c_ == o.c_; }
  bool is_zero() const;

 private:
  Ring ring_;
  std::array<Scalar, 4> c_;
};

/// Unital rank-4 algebra by structure constants: basis_i * basis_j =
/// sum_k c[i][j][k] basis_k, with the unit w fixed at index 0.
class Algebra4 {
 public:
  explicit Algebra4(const Ring& r);  // all products zero (not unital yet)
  /// Structure constants of the even exterior algebra: unit products only.
  static Algebra4 even_exterior(const Ring& r);

  const Ring& ring() const { return ring_; }
  const Scalar& c(int i, int j, int k) const {
    return c_[static_cast<std::size_t>(16 * i + 4 * j + k)];
  }
  Scalar& c(int i, int j, int k) { return c_[static_cast<std::size_t>(16 * i + 4 * j + k)]; }
  /// Installs unit products c[0][j][k] = delta_jk, c[i][0][k] = delta_ik.
  void set_unital();

  Element4 multiply(const Element4& x, const Element4& y) const;
  Element4 basis_product(int i, int j) const;

  bool is_unital() const;
  bool is_associative() const;
  Algebra4 opposite() const;
  bool operator==(const Algebra4& o) const { return ring_ == o.ring_ && c_ == o.c_; }
  bool operator!=(const Algebra4& o) const { return !(*this == o); }

 private:
  Ring ring_;
  std::vector<Scalar> c_;  // 64 entries, index 16i + 4j + k
};

/// Matrix of a (x) b^op |-> (x |-> a x b) in the product basis:
/// entry [4k+l][4i+j] is the e_k-coefficient of e_i * e_l * e_j.
std::vector<std::vector<Scalar>> sandwich_matrix(const Algebra4& a);

/// Azumaya iff the sandwich map is invertible, i.e. its determinant is a unit.
/// Throws std::invalid_argument on non-associative or non-unital input.
bool is_azumaya(const Algebra4& a);

/// Determinant of an n x n scalar matrix: Gaussian elimination over fields,
/// fraction-free Bareiss over the integral domains Z and ZPoly.
Scalar det_matrix(std::vector<std::vector<Scalar>> m);

/// Trace functional of the standard involution sigma(x) = t(x) w - x.
struct StdInvolution {
  std::array<Scalar, 4> t;  // t[0] = 2
  Scalar trace_of(const Element4& x) const;
  Element4 apply(const Element4& x) const;  // sigma
};

/// Solves the linear constraints forced by x*sigma(x) in R.w and verifies
/// the result is an anti-automorphism; nullopt when no standard involution
/// exists.
std::optional<StdInvolution> standard_involution(const Algebra4& a);

/// Norm n(x) with x*sigma(x) = n(x) w; throws std::domain_error when the
/// algebra has no standard involution.
Scalar alg_norm(const Algebra4& a, const Element4& x);
Scalar alg_trace(const Algebra4& a, const Element4& x);

/// Exhaustive search over invertible unit-fixing 4x4 maps h with
/// h(x y) = h(x) h(y); first witness in lexicographic order over the 12
/// free entries (row-major, unit column fixed). Finite fields only.
std::optional<Mat4> isomorphic_bruteforce(const Algebra4& a, const Algebra4& b);

}  // namespace tqf

#endif
