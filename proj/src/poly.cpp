#include "tqf/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace tqf {

std::uint64_t Monomial::total_degree() const {
  std::uint64_t d = 0;
  for (auto e : exps) d += e;
  return d;
}

int mono_cmp(const Monomial& a, const Monomial& b) {
  const std::uint64_t da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = 0; i < a.exps.size(); ++i)
    if (a.exps[i] != b.exps[i]) return a.exps[i] < b.exps[i] ? -1 : 1;
  return 0;
}

Poly Poly::constant(std::size_t nvars, mpz_class c) {
  Poly p(nvars);
  if (c != 0) p.terms_.push_back({Monomial{std::vector<std::uint32_t>(nvars, 0)}, std::move(c)});
  return p;
}

Poly Poly::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw std::invalid_argument("variable index out of range");
  Poly p(nvars);
  Monomial m{std::vector<std::uint32_t>(nvars, 0)};
  m.exps[index] = 1;
  p.terms_.push_back({std::move(m), mpz_class(1)});
  return p;
}

Poly Poly::from_terms(std::size_t nvars, std::vector<Term> terms) {
  for (const auto& t : terms)
    if (t.first.exps.size() != nvars)
      throw std::invalid_argument("monomial arity mismatch");
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return mono_cmp(a.first, b.first) > 0;
  });
  Poly p(nvars);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first)
      p.terms_.back().second += t.second;
    else
      p.terms_.push_back(std::move(t));
    if (p.terms_.back().second == 0) p.terms_.pop_back();
  }
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first.total_degree() == 0);
}

const mpz_class& Poly::constant_value() const {
  static const mpz_class zero(0);
  if (terms_.empty()) return zero;
  if (!is_constant()) throw std::domain_error("polynomial is not constant");
  return terms_[0].second;
}

std::uint64_t Poly::degree() const {
  return terms_.empty() ? 0 : terms_[0].first.total_degree();
}

Poly Poly::operator+(const Poly& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("polynomial arity mismatch");
  Poly r(nvars_);
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    int c;
    if (i == terms_.size()) c = -1;
    else if (j == o.terms_.size()) c = 1;
    else c = mono_cmp(terms_[i].first, o.terms_[j].first);
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      mpz_class s = terms_[i].second + o.terms_[j].second;
      if (s != 0) r.terms_.push_back({terms_[i].first, std::move(s)});
      ++i, ++j;
    }
  }
  return r;
}

Poly Poly::operator-() const {
  Poly r(nvars_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.first, -t.second});
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("polynomial arity mismatch");
  std::vector<Term> prod;
  prod.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) {
      Monomial m{std::vector<std::uint32_t>(nvars_)};
      for (std::size_t v = 0; v < nvars_; ++v) m.exps[v] = a.first.exps[v] + b.first.exps[v];
      prod.push_back({std::move(m), a.second * b.second});
    }
  }
  return from_terms(nvars_, std::move(prod));
}

namespace {

// Whether monomial d divides monomial m; writes the quotient exponents.
bool mono_divides(const Monomial& d, const Monomial& m, Monomial& out) {
  out.exps.resize(m.exps.size());
  for (std::size_t i = 0; i < m.exps.size(); ++i) {
    if (d.exps[i] > m.exps[i]) return false;
    out.exps[i] = m.exps[i] - d.exps[i];
  }
  return true;
}

}  // namespace

std::optional<Poly> Poly::exact_divide(const Poly& divisor) const {
  if (nvars_ != divisor.nvars_) throw std::invalid_argument("polynomial arity mismatch");
  if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
  Poly rem = *this;
  std::vector<Term> quot;
  const Term& lead = divisor.terms_[0];
  while (!rem.is_zero()) {
    Monomial qm;
    if (!mono_divides(lead.first, rem.terms_[0].first, qm)) return std::nullopt;
    mpz_class qc, r;
    mpz_tdiv_qr(qc.get_mpz_t(), r.get_mpz_t(), rem.terms_[0].second.get_mpz_t(),
                lead.second.get_mpz_t());
    if (r != 0) return std::nullopt;
    Poly step(nvars_);
    step.terms_.push_back({qm, qc});
    quot.push_back({std::move(qm), std::move(qc)});
    rem = rem - step * divisor;
  }
  return from_terms(nvars_, std::move(quot));
}

std::optional<Poly> Poly::sqrt() const {
  if (is_zero()) return Poly(nvars_);
  // Leading term of a square has even exponents and square coefficient.
  const Term& lead = terms_[0];
  Monomial rm{std::vector<std::uint32_t>(nvars_)};
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (lead.first.exps[i] % 2) return std::nullopt;
    rm.exps[i] = lead.first.exps[i] / 2;
  }
  if (lead.second < 0) return std::nullopt;
  mpz_class rc;
  mpz_sqrt(rc.get_mpz_t(), lead.second.get_mpz_t());
  if (rc * rc != lead.second) return std::nullopt;
  // Root chosen with positive leading coefficient.
  Poly root(nvars_);
  root.terms_.push_back({rm, rc});
  Poly two_lead(nvars_);
  two_lead.terms_.push_back({rm, 2 * rc});
  Poly rem = *this - root * root;
  while (!rem.is_zero()) {
    // Next root term t satisfies lt(rem) = 2*lt(root)*t.
    Monomial qm;
    if (!mono_divides(two_lead.terms_[0].first, rem.terms_[0].first, qm)) return std::nullopt;
    mpz_class qc, r;
    mpz_tdiv_qr(qc.get_mpz_t(), r.get_mpz_t(), rem.terms_[0].second.get_mpz_t(),
                two_lead.terms_[0].second.get_mpz_t());
    if (r != 0) return std::nullopt;
    Poly t(nvars_);
    t.terms_.push_back({qm, qc});
    if (mono_cmp(qm, rm) >= 0) return std::nullopt;  // no progress: not a square
    Poly next = root + t;
    rem = *this - next * next;
    root = std::move(next);
  }
  return root;
}

std::string Poly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& [m, c] = terms_[i];
    mpz_class a = abs(c);
    if (i == 0) {
      if (c < 0) s += "-";
    } else {
      s += (c < 0) ? " - " : " + ";
    }
    const bool has_vars = m.total_degree() > 0;
    if (a != 1 || !has_vars) s += a.get_str();
    bool first = (a == 1 && has_vars);
    for (std::size_t v = 0; v < m.exps.size(); ++v) {
      if (m.exps[v] == 0) continue;
      if (!first || a != 1) s += "*";
      s += names[v];
      if (m.exps[v] > 1) s += "^" + std::to_string(m.exps[v]);
      first = false;
    }
  }
  return s;
}

}  // namespace tqf
