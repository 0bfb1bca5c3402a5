#ifndef TQF_PARSE_HPP
#define TQF_PARSE_HPP

#include <string>

#include "tqf/forms.hpp"

namespace tqf {

/// Parses the form grammar `term ("+" term)*` with
/// `term := [coeff "*"] mono | coeff` and `mono := xD | xD^2 | xD*xD`,
/// D in {1,2,3}. Coefficients use the ring's literal syntax; parenthesized
/// literals are accepted (needed for polynomial coefficients). Repeated
/// monomials accumulate. Throws std::invalid_argument with a position on
/// syntax errors.
TernaryForm parse_form(const std::string& text, const Ring& ring);

/// Canonical printer; parse_form(form_to_string(q)) == q.
std::string form_to_string(const TernaryForm& q);

}  // namespace tqf

#endif
