#ifndef TQF_CLIFFORD_HPP
#define TQF_CLIFFORD_HPP

#include <array>
#include <optional>

#include "tqf/algebra4.hpp"
#include "tqf/forms.hpp"

namespace tqf {

/// Invertible 4x4 map fixing the algebra unit w: first column (1,0,0,0)^T.
class StabW {
 public:
  explicit StabW(Mat4 m);  // validates the fixed first column
  static StabW identity(const Ring& r);
  /// Block-diagonal map (1, B).
  static StabW block(const Mat3& b);
  /// Unipotent translation with first row (1, t1, t2, t3).
  static StabW unipotent(const std::array<Scalar, 3>& t);

  const Mat4& matrix() const { return m_; }
  const Ring& ring() const { return m_.ring(); }
  StabW operator*(const StabW& o) const { return StabW(m_ * o.m_); }
  bool operator==(const StabW& o) const { return m_ == o.m_; }
  StabW inverse() const { return StabW(m_.inverse()); }
  Scalar det() const { return m_.det(); }

 private:
  Mat4 m_;
};

/// Unique factorizations h = h_s h_l and h = h_l' h_s with h_s = block(1,B)
/// and h_l, h_l' unipotent. row_lprime requires B invertible.
struct StabWFactors {
  Mat3 block;
  std::array<Scalar, 3> row_l;
  std::array<Scalar, 3> row_lprime;
};
StabWFactors decompose(const StabW& h);

/// The algebra structure attached to a bilinear form: the nine-product
/// multiplication table on the basis (w, e1, e2, e3), where M_ij(B) is the
/// unsigned minor obtained by deleting row i and column j.
Algebra4 upsilon(const Mat3& b);

/// The same algebra built from first principles: the rank-8 Clifford algebra
/// of the induced quadratic form, normal-ordered, restricted to its even
/// part and re-coordinatized along e_i e_j |-> e_i ^ e_j + b_ij w.
Algebra4 clifford_product_oracle(const Mat3& b);

/// Recovers B from an algebra in the image of upsilon; nullopt otherwise.
std::optional<Mat3> upsilon_inverse(const Algebra4& a);

/// A point (q, t) of the quadratic-form coordinatization.
struct ThetaPoint {
  TernaryForm q;
  std::array<Scalar, 3> t;
};
ThetaPoint theta_point(const TernaryForm& q);  // t = 0

/// The nine-product table of the algebra at (q, t).
Algebra4 theta(const ThetaPoint& p);

Mat3 theta_to_bilinear(const ThetaPoint& p);
ThetaPoint bilinear_to_theta(const Mat3& b);

/// Checks opposite(upsilon(B)) = upsilon(-B^t) together with its translation
/// (q, t) |-> (-q, (t1 - l12, t2 - l23, t3 - l13)).
bool opposite_involution_check(const Mat3& b);

/// Transport of structure: (h.A)(x, y) = h(A(h^-1 x, h^-1 y)).
Algebra4 act_stabw(const StabW& h, const Algebra4& a);

}  // namespace tqf

#endif
