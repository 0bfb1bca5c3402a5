#include "tqf/ring.hpp"

#include <algorithm>
#include <stdexcept>

namespace tqf {

namespace {

// Fixed irreducible reduction polynomials over F2, one per supported degree.
// Chosen once so that binary-field output is bit-exact across runs.
std::uint32_t reduction_for_degree(unsigned k) {
  switch (k) {
    case 1: return 0b11;      // x + 1
    case 2: return 0b111;     // x^2 + x + 1
    case 3: return 0b1011;    // x^3 + x + 1
    case 4: return 0b10011;   // x^4 + x + 1
    default:
      throw std::invalid_argument("binary field degree must be in 1..4");
  }
}

const std::vector<std::string>& empty_vars() {
  static const std::vector<std::string> none;
  return none;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Ring Ring::integers() {
  Ring r;
  r.kind_ = RingKind::Integers;
  return r;
}

Ring Ring::rationals() {
  Ring r;
  r.kind_ = RingKind::Rationals;
  return r;
}

Ring Ring::prime_field(std::uint64_t p) {
  if (p >= (1ull << 31))
    throw std::invalid_argument("prime field modulus must be < 2^31");
  if (!is_prime_u64(p))
    throw std::invalid_argument("prime field modulus must be prime");
  Ring r;
  r.kind_ = RingKind::PrimeField;
  r.p_ = p;
  return r;
}

Ring Ring::binary_field(unsigned k) {
  Ring r;
  r.kind_ = RingKind::BinaryField;
  r.k_ = k;
  r.red_ = reduction_for_degree(k);
  return r;
}

Ring Ring::polynomials(std::vector<std::string> variables) {
  if (variables.empty())
    throw std::invalid_argument("polynomial ring needs at least one variable");
  for (const auto& v : variables) {
    if (v.empty()) throw std::invalid_argument("empty variable name");
    if (std::count(variables.begin(), variables.end(), v) != 1)
      throw std::invalid_argument("duplicate variable name: " + v);
  }
  Ring r;
  r.kind_ = RingKind::Polynomials;
  r.vars_ = std::make_shared<const std::vector<std::string>>(std::move(variables));
  return r;
}

Ring Ring::parse(const std::string& d) {
  if (d == "Z") return integers();
  if (d == "Q") return rationals();
  if (d.rfind("Fp:", 0) == 0) {
    const std::string num = d.substr(3);
    if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("bad prime in ring descriptor: " + d);
    return prime_field(std::stoull(num));
  }
  if (d.rfind("F2k:", 0) == 0) {
    const std::string num = d.substr(4);
    if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("bad degree in ring descriptor: " + d);
    return binary_field(static_cast<unsigned>(std::stoul(num)));
  }
  if (d.rfind("ZPoly:", 0) == 0) {
    std::vector<std::string> vars;
    std::string rest = d.substr(6);
    std::size_t pos = 0;
    while (pos <= rest.size()) {
      std::size_t comma = rest.find(',', pos);
      if (comma == std::string::npos) comma = rest.size();
      vars.push_back(rest.substr(pos, comma - pos));
      pos = comma + 1;
    }
    return polynomials(std::move(vars));
  }
  throw std::invalid_argument("unknown ring descriptor: " + d);
}

const std::vector<std::string>& Ring::variables() const {
  return vars_ ? *vars_ : empty_vars();
}

bool Ring::has_variable(const std::string& name) const {
  const auto& vs = variables();
  return std::find(vs.begin(), vs.end(), name) != vs.end();
}

std::size_t Ring::variable_index(const std::string& name) const {
  const auto& vs = variables();
  auto it = std::find(vs.begin(), vs.end(), name);
  if (it == vs.end()) throw std::invalid_argument("unknown variable: " + name);
  return static_cast<std::size_t>(it - vs.begin());
}

bool Ring::is_field() const {
  return kind_ == RingKind::Rationals || kind_ == RingKind::PrimeField ||
         kind_ == RingKind::BinaryField;
}

std::uint64_t Ring::characteristic() const {
  switch (kind_) {
    case RingKind::PrimeField: return p_;
    case RingKind::BinaryField: return 2;
    default: return 0;
  }
}

bool Ring::is_finite() const {
  return kind_ == RingKind::PrimeField || kind_ == RingKind::BinaryField;
}

std::uint64_t Ring::cardinality() const {
  if (kind_ == RingKind::PrimeField) return p_;
  if (kind_ == RingKind::BinaryField) return 1ull << k_;
  throw std::domain_error("cardinality of an infinite ring");
}

std::string Ring::to_string() const {
  switch (kind_) {
    case RingKind::Integers: return "Z";
    case RingKind::Rationals: return "Q";
    case RingKind::PrimeField: return "Fp:" + std::to_string(p_);
    case RingKind::BinaryField: return "F2k:" + std::to_string(k_);
    case RingKind::Polynomials: {
      std::string s = "ZPoly:";
      const auto& vs = variables();
      for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) s += ',';
        s += vs[i];
      }
      return s;
    }
  }
  return "?";
}

bool Ring::operator==(const Ring& o) const {
  if (kind_ != o.kind_) return false;
  switch (kind_) {
    case RingKind::PrimeField: return p_ == o.p_;
    case RingKind::BinaryField: return k_ == o.k_ && red_ == o.red_;
    case RingKind::Polynomials: return variables() == o.variables();
    default: return true;
  }
}

}  // namespace tqf
