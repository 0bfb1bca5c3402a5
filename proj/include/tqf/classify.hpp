#ifndef TQF_CLASSIFY_HPP
#define TQF_CLASSIFY_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "tqf/clifford.hpp"
#include "tqf/forms.hpp"

namespace tqf {

struct NotSemiregularError : std::domain_error {
  using std::domain_error::domain_error;
};
struct NoSquareRootError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Orbit type of a ternary form over a field:
/// 1 semiregular, 2 rank-2 boundary, 3 nonzero perfect square, 4 zero.
enum class Stratum : int {
  Semiregular = 1,
  Rank2 = 2,
  PerfectSquare = 3,
  Zero = 4,
};

/// Labeling rule: 4 if q = 0; 3 on perfect squares (char 2: all l_ij = 0;
/// otherwise: all 2x2 minors of the associated bilinear matrix vanish);
/// 1 when the half-discriminant is nonzero; else 2.
Stratum stratum(const TernaryForm& q);

/// Constructive single-orbit statement: returns g with act(g, q) = q1.
/// Self-checking; throws NotSemiregularError or NoSquareRootError.
Mat3 normalize_semiregular(const TernaryForm& q);

struct OrbitInfo {
  std::uint64_t rep_index;
  TernaryForm rep;
  std::uint64_t size;
  Stratum stratum;
  std::size_t iso_class;  // index of the algebra-isomorphism class
};

struct CensusReport {
  Ring ring;
  std::vector<OrbitInfo> orbits;                     // sorted by rep_index
  std::array<std::uint64_t, 4> stratum_form_counts;  // forms per stratum 1..4
  std::size_t similarity_classes = 0;
  std::size_t algebra_iso_classes = 0;
  bool bijection_verified = false;
};

/// Dense index of a form over a finite field (l1 most significant digit).
std::uint64_t form_index(const TernaryForm& q);
TernaryForm form_from_index(const Ring& field, std::uint64_t index);

/// Exhaustive orbit census over a finite field with |F| <= 4: similarity
/// orbits by generator closure, stratum bookkeeping, and (unless skipped)
/// the pairwise algebra-isomorphism partition of orbit representatives.
/// Throws std::invalid_argument when the field is too large.
CensusReport orbit_census(const Ring& field, bool with_algebra_classes = true);

/// Over a finite 2-perfect field (characteristic 2, |F| <= 4): whether every
/// Azumaya algebra theta(q,0), q semiregular, is isomorphic to theta(q1,0),
/// shown constructively by normalizing q and transporting along the induced
/// isomorphism. nullopt when the 2-perfect hypothesis fails.
std::optional<bool> azumaya_uniqueness_check(const Ring& field);

}  // namespace tqf

#endif
