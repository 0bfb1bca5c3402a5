#ifndef TQF_LIFTING_HPP
#define TQF_LIFTING_HPP

#include <optional>

#include "tqf/clifford.hpp"
#include "tqf/forms.hpp"

namespace tqf {

/// A similarity (g, l): valid for (q, q') when act(g, q) = scale(l^-1, q').
struct Similarity {
  Mat3 g;
  Scalar multiplier;
};

bool is_valid_similarity(const Similarity& s, const TernaryForm& q, const TernaryForm& qp);

/// Action on the wedge basis (e1^e2, e2^e3, e3^e1):
/// det(g) E12 E23 (g^-1)^t E23 E12, computed division-free via the adjugate.
Mat3 lambda2(const Mat3& g);

/// Permutation matrices swapping basis vectors 1,2 and 2,3.
Mat3 perm_e12(const Ring& r);
Mat3 perm_e23(const Ring& r);

/// The algebra isomorphism theta(q,0) -> theta(q',0) induced by a valid
/// similarity: block l^-1 Lambda^2(g), first row from the canonical lifts.
/// Throws std::invalid_argument when (g, l) is not a similarity for (q, q').
StabW induced_iso(const Similarity& s, const TernaryForm& q, const TernaryForm& qp);

/// Lower-right 3x3 block of h (the matrix of phi_Lambda2).
Mat3 phi_lambda2(const StabW& h);

/// The multiplicative section s^+_{2k+1}: from an algebra isomorphism h
/// recovers the similarity with g = det(B)^{k+1} E23 E12 (B^t)^-1 E12 E23
/// and l = det(B)^{2k+1}, where B = phi_lambda2(h). Verifies that h is an
/// isomorphism theta(q,0) -> theta(q',0) and that the result induces h.
Similarity section_s_plus(const StabW& h, const TernaryForm& q, const TernaryForm& qp, long k);

/// The section s': multiplier 1, scalar factor sqrt(det B); nullopt when the
/// ring has no square root of det B.
std::optional<Similarity> section_s_prime(const StabW& h, const TernaryForm& q,
                                          const TernaryForm& qp);

/// Scans every unit-fixing algebra automorphism of theta(q,0) over the finite
/// field and reports whether all have determinant 1. nullopt when q is not
/// semiregular (the statement's hypothesis fails).
std::optional<bool> automorphism_determinant_check(const TernaryForm& q);

/// Collects every unit-fixing invertible map h with h(xy) = h(x)h(y) from a
/// to b, in enumeration order. Finite fields only.
std::vector<StabW> all_isomorphisms(const Algebra4& a, const Algebra4& b);
std::vector<StabW> all_automorphisms(const Algebra4& a);

/// If induced_iso(s, q, q) is the identity, checks g = l^-1 det(g) Id and,
/// when l = 1, det(g)^2 = 1; vacuously true otherwise.
bool kernel_check(const Similarity& s, const TernaryForm& q);

/// The unique unipotent h_l'(g, q) with
/// h_l' . (Lambda_even(g) . Theta(q,t)) = Theta(g.q, g.t); nullopt if the
/// transported algebra does not land at the expected point.
std::optional<std::array<Scalar, 3>> twisted_unipotent_row(const Mat3& g, const ThetaPoint& p);

/// Existence + uniqueness + verification of h_l'(g, q) at one point.
bool twisted_equivariance_check(const Mat3& g, const ThetaPoint& p);

}  // namespace tqf

#endif
