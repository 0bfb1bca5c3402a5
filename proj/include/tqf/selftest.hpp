#ifndef TQF_SELFTEST_HPP
#define TQF_SELFTEST_HPP

#include <string>
#include <vector>

namespace tqf {

struct CheckResult {
  std::string name;
  bool passed;
};

/// The symbolic identity suite over polynomial rings: the multiplication
/// table against the Clifford-product construction, associativity and
/// unitality of the table, the (q,t) <-> B translation, the opposite-algebra
/// involution, and the wedge-action determinant identity.
std::vector<CheckResult> run_symbolic_selftest();

}  // namespace tqf

#endif
