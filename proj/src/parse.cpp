#include "tqf/parse.hpp"

#include <cctype>
#include <stdexcept>
#include <vector>

namespace tqf {

namespace {

[[noreturn]] void fail(const std::string& what, std::size_t pos) {
  throw std::invalid_argument("form syntax error at position " + std::to_string(pos) + ": " +
                              what);
}

// Splits on a separator at parenthesis depth 0; records the start offset of
// each piece.
std::vector<std::pair<std::string, std::size_t>> split_top(const std::string& s, char sep) {
  std::vector<std::pair<std::string, std::size_t>> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i < s.size() && s[i] == '(') ++depth;
    if (i < s.size() && s[i] == ')') {
      if (--depth < 0) fail("unbalanced ')'", i);
    }
    if (i == s.size() || (s[i] == sep && depth == 0)) {
      out.push_back({s.substr(start, i - start), start});
      start = i + 1;
    }
  }
  if (depth != 0) fail("unbalanced '('", s.size());
  return out;
}

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

// A factor "xD", "xD^1" or "xD^2" of the monomial part; returns the pair
// (variable index 0..2, power).
bool match_form_var(const std::string& tok, int& var, int& pow) {
  if (tok.size() < 2 || tok[0] != 'x') return false;
  if (tok[1] < '1' || tok[1] > '3') return false;
  var = tok[1] - '1';
  pow = 1;
  if (tok.size() == 2) return true;
  if (tok[2] != '^') return false;
  if (tok.size() != 4 || (tok[3] != '1' && tok[3] != '2')) {
    if (tok.size() > 3 && std::isdigit(static_cast<unsigned char>(tok[3])))
      throw std::invalid_argument("form syntax error: monomial degree above 2 in '" + tok + "'");
    return false;
  }
  pow = tok[3] - '0';
  return true;
}

}  // namespace

TernaryForm parse_form(const std::string& text, const Ring& ring) {
  if (ring.kind() == RingKind::Polynomials)
    for (const char* v : {"x1", "x2", "x3"})
      if (ring.has_variable(v))
        throw std::invalid_argument(
            "form variables x1,x2,x3 collide with a coefficient-ring variable");

  if (trim(text).empty()) fail("empty form expression", 0);
  std::array<Scalar, 6> coeff = {Scalar::zero(ring), Scalar::zero(ring), Scalar::zero(ring),
                                 Scalar::zero(ring), Scalar::zero(ring), Scalar::zero(ring)};
  // slots: l1 l2 l3 l12 l13 l23
  auto slot_of = [](int v, int w) {  // product x_{v+1} x_{w+1}, v <= w
    if (v == w) return v;
    if (v == 0 && w == 1) return 3;
    if (v == 0 && w == 2) return 4;
    return 5;
  };

  for (const auto& [raw_term, term_pos] : split_top(text, '+')) {
    const std::string term = trim(raw_term);
    if (term.empty()) fail("empty term", term_pos);
    int deg = 0, v0 = -1, v1 = -1;
    Scalar c = Scalar::one(ring);
    bool saw_coeff = false;
    for (const auto& [raw_factor, factor_pos] : split_top(term, '*')) {
      const std::string tok = trim(raw_factor);
      if (tok.empty()) fail("empty factor", term_pos + factor_pos);
      int var = 0, pow = 0;
      if (match_form_var(tok, var, pow)) {
        for (int rep = 0; rep < pow; ++rep) {
          if (deg == 0) v0 = var;
          else if (deg == 1) v1 = var;
          else fail("monomial degree above 2", term_pos + factor_pos);
          ++deg;
        }
      } else if (tok[0] == 'x' && tok.size() >= 2 &&
                 std::isdigit(static_cast<unsigned char>(tok[1])) &&
                 !ring.has_variable(tok)) {
        fail("unknown variable '" + tok + "'", term_pos + factor_pos);
      } else {
        std::string lit = tok;
        if (lit.size() >= 2 && lit.front() == '(' && lit.back() == ')')
          lit = trim(lit.substr(1, lit.size() - 2));
        try {
          c *= Scalar::parse(lit, ring);
        } catch (const std::invalid_argument& e) {
          fail(std::string("bad coefficient '") + tok + "': " + e.what(),
               term_pos + factor_pos);
        }
        saw_coeff = true;
      }
    }
    if (deg == 0) {
      if (!saw_coeff || !c.is_zero())
        fail("constant term in a quadratic form (only 0 allowed)", term_pos);
      continue;
    }
    if (deg != 2) fail("term is not of degree 2", term_pos);
    if (v0 > v1) std::swap(v0, v1);
    coeff[static_cast<std::size_t>(slot_of(v0, v1))] += c;
  }
  return TernaryForm(coeff[0], coeff[1], coeff[2], coeff[3], coeff[4], coeff[5]);
}

std::string form_to_string(const TernaryForm& q) {
  static const char* monos[6] = {"x1^2", "x2^2", "x3^2", "x1*x2", "x1*x3", "x2*x3"};
  std::string s;
  for (int i = 0; i < 6; ++i) {
    const Scalar& c = q.coeffs()[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    if (!s.empty()) s += " + ";
    if (c.is_one()) {
      s += monos[i];
      continue;
    }
    const std::string lit = c.to_string();
    const bool needs_parens = lit.find_first_of("+- ") != std::string::npos && lit[0] != '-';
    const bool neg_composite =
        lit[0] == '-' && lit.find_first_of("+- ", 1) != std::string::npos;
    if (needs_parens || neg_composite) s += "(" + lit + ")*";
    else s += lit + "*";
    s += monos[i];
  }
  return s.empty() ? "0" : s;
}

}  // namespace tqf
