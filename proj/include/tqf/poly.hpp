#ifndef TQF_POLY_HPP
#define TQF_POLY_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tqf {

/// Exponent vector of one monomial; size equals the ring's variable count.
struct Monomial {
  std::vector<std::uint32_t> exps;

  std::uint64_t total_degree() const;
  bool operator==(const Monomial& o) const { return exps == o.exps; }
};

/// Graded lexicographic comparison over the declared variable order
/// (earlier variables rank higher). Returns <0, 0 or >0.
int mono_cmp(const Monomial& a, const Monomial& b);

/// Sparse multivariate polynomial with integer coefficients.
///
/// Terms are kept sorted descending in graded lex order with no zero
/// coefficients, so equal polynomials have equal representations.
class Poly {
 public:
  using Term = std::pair<Monomial, mpz_class>;

  explicit Poly(std::size_t nvars) : nvars_(nvars) {}
  static Poly constant(std::size_t nvars, mpz_class c);
  static Poly variable(std::size_t nvars, std::size_t index);
  /// Takes an arbitrary term list, merges duplicates, drops zeros, sorts.
  static Poly from_terms(std::size_t nvars, std::vector<Term> terms);

  std::size_t nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  const mpz_class& constant_value() const;  // requires is_constant()
  std::uint64_t degree() const;             // total degree; 0 for the zero poly

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  bool operator==(const Poly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

  /// Exact division; returns nothing when the divisor does not divide *this.
  std::optional<Poly> exact_divide(const Poly& divisor) const;
  /// Exact square root when *this is a perfect square.
  std::optional<Poly> sqrt() const;

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  std::size_t nvars_;
  std::vector<Term> terms_;
};

}  // namespace tqf

#endif
