#ifndef TQF_RING_HPP
#define TQF_RING_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace tqf {

enum class RingKind { Integers, Rationals, PrimeField, BinaryField, Polynomials };

/// Descriptor of one of the five supported exact coefficient rings.
///
/// Cheap to copy and compare. Capability flags (is_field, is_two_perfect,
/// characteristic) are derived from the kind, never stored.
class Ring {
 public:
  Ring() : kind_(RingKind::Integers) {}

  static Ring integers();
  static Ring rationals();
  static Ring prime_field(std::uint64_t p);
  static Ring binary_field(unsigned k);
  static Ring polynomials(std::vector<std::string> variables);

  /// Parses "Z", "Q", "Fp:<p>", "F2k:<k>" or "ZPoly:<v1,v2,...>".
  static Ring parse(const std::string& descriptor);

  RingKind kind() const { return kind_; }
  std::uint64_t prime() const { return p_; }
  unsigned degree() const { return k_; }
  /// Bit pattern of the fixed reduction polynomial of a binary field
  /// (bit i = coefficient of x^i).
  std::uint32_t reduction_bits() const { return red_; }
  const std::vector<std::string>& variables() const;
  bool has_variable(const std::string& name) const;
  std::size_t variable_index(const std::string& name) const;

  bool is_field() const;
  bool is_two_perfect() const { return kind_ == RingKind::BinaryField; }
  std::uint64_t characteristic() const;
  bool is_finite() const;
  std::uint64_t cardinality() const;  // finite fields only

  std::string to_string() const;
  bool operator==(const Ring& o) const;
  bool operator!=(const Ring& o) const { return !(*this == o); }

 private:
  RingKind kind_;
  std::uint64_t p_ = 0;   // PrimeField modulus
  unsigned k_ = 0;        // BinaryField degree
  std::uint32_t red_ = 0; // BinaryField reduction polynomial
  std::shared_ptr<const std::vector<std::string>> vars_;
};

bool is_prime_u64(std::uint64_t n);

}  // namespace tqf

#endif
