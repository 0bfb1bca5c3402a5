#ifndef TQF_SCALAR_HPP
#define TQF_SCALAR_HPP

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>

#include "tqf/poly.hpp"
#include "tqf/ring.hpp"

namespace tqf {

struct FpElem {
  std::uint64_t v;
  bool operator==(const FpElem& o) const { return v == o.v; }
};

struct F2kElem {
  std::uint32_t bits;
  bool operator==(const F2kElem& o) const { return bits == o.bits; }
};

/// One exact element of a coefficient ring, tagged with its ring.
///
/// Values are kept canonical: fractions reduced with positive denominator,
/// residues in [0,p), binary-field elements as bit vectors, polynomials
/// sorted graded-lex with no zero terms. Equality is representation equality.
class Scalar {
 public:
  Scalar() : ring_(Ring::integers()), v_(mpz_class(0)) {}

  static Scalar zero(const Ring& r);
  static Scalar one(const Ring& r);
  static Scalar from_int(const Ring& r, long n);
  static Scalar from_mpz(const Ring& r, const mpz_class& n);
  static Scalar from_mpq(const mpq_class& q);              // Rationals
  static Scalar fp(const Ring& r, std::uint64_t residue);  // PrimeField
  static Scalar f2k(const Ring& r, std::uint32_t bits);    // BinaryField
  static Scalar variable(const Ring& r, const std::string& name);
  static Scalar from_poly(const Ring& r, Poly p);

  /// Parses a literal in the ring's syntax: decimal for Z and Fp, "a/b" for Q,
  /// decimal bit-pattern for F2k, and a sum of integer monomials for ZPoly.
  static Scalar parse(const std::string& text, const Ring& r);

  const Ring& ring() const { return ring_; }
  bool is_zero() const;
  bool is_one() const;
  bool is_unit() const;
  Scalar invert() const;  // throws std::domain_error on a non-unit
  std::optional<Scalar> sqrt() const;
  /// Exact division in the ring; throws std::domain_error when not divisible.
  Scalar exact_div(const Scalar& d) const;
  Scalar pow(long e) const;  // negative exponent requires a unit base

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  std::string to_string() const;

  /// Ring homomorphism ZPoly -> target ring determined by the assignment.
  /// Every variable must be assigned; all values must share one ring.
  Scalar substitute(const std::map<std::string, Scalar>& assignment) const;

  const mpz_class& as_mpz() const;
  const mpq_class& as_mpq() const;
  std::uint64_t fp_value() const { return std::get<FpElem>(v_).v; }
  std::uint32_t f2k_bits() const { return std::get<F2kElem>(v_).bits; }
  const Poly& poly() const { return std::get<Poly>(v_); }

 private:
  Ring ring_;
  std::variant<mpz_class, mpq_class, FpElem, F2kElem, Poly> v_;
};

/// The i-th element of a finite field in canonical enumeration order
/// (residues 0..p-1, or bit patterns 0..2^k-1).
Scalar finite_element(const Ring& r, std::uint64_t index);
std::uint64_t finite_index(const Scalar& s);

void ensure_same_ring(const Scalar& a, const Scalar& b);

}  // namespace tqf

#endif
