#include "tqf/scalar.hpp"

#include <cctype>
#include <stdexcept>

namespace tqf {

namespace {

std::uint64_t fp_add(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t s = a + b;
  return s >= p ? s - p : s;
}

std::uint64_t fp_neg(std::uint64_t a, std::uint64_t p) { return a == 0 ? 0 : p - a; }

std::uint64_t fp_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t fp_pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  while (e) {
    if (e & 1) r = fp_mul(r, a, p);
    a = fp_mul(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t fp_inv(std::uint64_t a, std::uint64_t p) {
  // extended Euclid on (a, p)
  std::int64_t t = 0, newt = 1;
  std::int64_t r = static_cast<std::int64_t>(p), newr = static_cast<std::int64_t>(a);
  while (newr != 0) {
    std::int64_t q = r / newr;
    std::int64_t tmp = t - q * newt;
    t = newt; newt = tmp;
    tmp = r - q * newr;
    r = newr; newr = tmp;
  }
  if (r != 1) throw std::domain_error("not invertible mod p");
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

// Tonelli-Shanks; p odd prime, a in [0,p). Returns the smaller of the two roots.
std::optional<std::uint64_t> fp_sqrt(std::uint64_t a, std::uint64_t p) {
  if (a == 0) return 0;
  if (p == 2) return a;
  if (fp_pow(a, (p - 1) / 2, p) != 1) return std::nullopt;  // non-residue
  std::uint64_t s = 0, q = p - 1;
  while ((q & 1) == 0) { q >>= 1; ++s; }
  std::uint64_t root;
  if (s == 1) {
    root = fp_pow(a, (p + 1) / 4, p);
  } else {
    std::uint64_t z = 2;
    while (fp_pow(z, (p - 1) / 2, p) != p - 1) ++z;
    std::uint64_t m = s;
    std::uint64_t c = fp_pow(z, q, p);
    std::uint64_t t = fp_pow(a, q, p);
    root = fp_pow(a, (q + 1) / 2, p);
    while (t != 1) {
      std::uint64_t i = 0, tt = t;
      while (tt != 1) { tt = fp_mul(tt, tt, p); ++i; }
      std::uint64_t b = c;
      for (std::uint64_t j = 0; j + i + 1 < m; ++j) b = fp_mul(b, b, p);
      m = i;
      c = fp_mul(b, b, p);
      t = fp_mul(t, c, p);
      root = fp_mul(root, b, p);
    }
  }
  return std::min(root, p - root);
}

int bit_degree(std::uint32_t v) {
  int d = -1;
  while (v) { v >>= 1; ++d; }
  return d;
}

std::uint32_t gf2k_mul(std::uint32_t a, std::uint32_t b, unsigned k, std::uint32_t red) {
  std::uint32_t prod = 0;
  while (b) {
    if (b & 1) prod ^= a;
    b >>= 1;
    a <<= 1;
  }
  // reduce modulo the degree-k polynomial
  for (int d = bit_degree(prod); d >= static_cast<int>(k); d = bit_degree(prod))
    prod ^= red << (d - k);
  return prod;
}

std::uint32_t gf2k_pow(std::uint32_t a, std::uint64_t e, unsigned k, std::uint32_t red) {
  std::uint32_t r = 1;
  while (e) {
    if (e & 1) r = gf2k_mul(r, a, k, red);
    a = gf2k_mul(a, a, k, red);
    e >>= 1;
  }
  return r;
}

mpz_class parse_mpz(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty integer literal");
  std::size_t i = (text[0] == '+' || text[0] == '-') ? 1 : 0;
  if (i == text.size() || text.find_first_not_of("0123456789", i) != std::string::npos)
    throw std::invalid_argument("bad integer literal: " + text);
  return mpz_class(text);
}

// Polynomial literal: sum of signed integer monomials, e.g. "b11*b22 - 2*b12^3".
Poly parse_poly(const std::string& text, const Ring& ring) {
  const std::size_t nv = ring.variables().size();
  std::vector<Poly::Term> terms;
  std::size_t i = 0;
  auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
  skip_ws();
  if (i == text.size()) throw std::invalid_argument("empty polynomial literal");
  bool first = true;
  while (true) {
    skip_ws();
    if (i == text.size()) {
      if (first) throw std::invalid_argument("empty polynomial literal");
      break;
    }
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      if (first && text[i] == '+') throw std::invalid_argument("bad polynomial literal: " + text);
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip_ws();
    } else if (!first) {
      throw std::invalid_argument("expected '+' or '-' at position " + std::to_string(i) +
                                  " in: " + text);
    }
    first = false;
    // one monomial: factors separated by '*'
    mpz_class coeff(sign);
    Monomial mono{std::vector<std::uint32_t>(nv, 0)};
    bool any_factor = false;
    while (true) {
      skip_ws();
      std::size_t start = i;
      if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        coeff *= mpz_class(text.substr(start, i - start));
      } else if (i < text.size() &&
                 (std::isalpha(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
        while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
          ++i;
        const std::string name = text.substr(start, i - start);
        std::uint32_t exp = 1;
        skip_ws();
        if (i < text.size() && text[i] == '^') {
          ++i;
          skip_ws();
          std::size_t es = i;
          while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
          if (es == i) throw std::invalid_argument("missing exponent in: " + text);
          exp = static_cast<std::uint32_t>(std::stoul(text.substr(es, i - es)));
        }
        mono.exps[ring.variable_index(name)] += exp;
      } else {
        throw std::invalid_argument("bad factor at position " + std::to_string(i) + " in: " + text);
      }
      any_factor = true;
      skip_ws();
      if (i < text.size() && text[i] == '*') { ++i; continue; }
      break;
    }
    if (!any_factor) throw std::invalid_argument("empty monomial in: " + text);
    terms.push_back({std::move(mono), std::move(coeff)});
  }
  return Poly::from_terms(nv, std::move(terms));
}

}  // namespace

void ensure_same_ring(const Scalar& a, const Scalar& b) {
  if (a.ring() != b.ring())
    throw std::invalid_argument("ring mismatch: " + a.ring().to_string() + " vs " +
                                b.ring().to_string());
}

Scalar Scalar::zero(const Ring& r) { return from_int(r, 0); }
Scalar Scalar::one(const Ring& r) { return from_int(r, 1); }

Scalar Scalar::from_int(const Ring& r, long n) { return from_mpz(r, mpz_class(n)); }

Scalar Scalar::from_mpz(const Ring& r, const mpz_class& n) {
  Scalar s;
  s.ring_ = r;
  switch (r.kind()) {
    case RingKind::Integers:
      s.v_ = n;
      break;
    case RingKind::Rationals:
      s.v_ = mpq_class(n);
      break;
    case RingKind::PrimeField: {
      mpz_class m = n % static_cast<unsigned long>(r.prime());
      if (m < 0) m += static_cast<unsigned long>(r.prime());
      s.v_ = FpElem{m.get_ui()};
      break;
    }
    case RingKind::BinaryField: {
      mpz_class m = n % 2;
      s.v_ = F2kElem{m != 0 ? 1u : 0u};
      break;
    }
    case RingKind::Polynomials:
      s.v_ = Poly::constant(r.variables().size(), n);
      break;
  }
  return s;
}

Scalar Scalar::from_mpq(const mpq_class& q) {
  Scalar s;
  s.ring_ = Ring::rationals();
  mpq_class c = q;
  c.canonicalize();
  s.v_ = std::move(c);
  return s;
}

Scalar Scalar::fp(const Ring& r, std::uint64_t residue) {
  if (r.kind() != RingKind::PrimeField) throw std::invalid_argument("fp: not a prime field");
  Scalar s;
  s.ring_ = r;
  s.v_ = FpElem{residue % r.prime()};
  return s;
}

Scalar Scalar::f2k(const Ring& r, std::uint32_t bits) {
  if (r.kind() != RingKind::BinaryField) throw std::invalid_argument("f2k: not a binary field");
  if (bits >= (1u << r.degree())) throw std::invalid_argument("f2k: bit pattern out of range");
  Scalar s;
  s.ring_ = r;
  s.v_ = F2kElem{bits};
  return s;
}

Scalar Scalar::variable(const Ring& r, const std::string& name) {
  if (r.kind() != RingKind::Polynomials)
    throw std::invalid_argument("variable: not a polynomial ring");
  Scalar s;
  s.ring_ = r;
  s.v_ = Poly::variable(r.variables().size(), r.variable_index(name));
  return s;
}

Scalar Scalar::from_poly(const Ring& r, Poly p) {
  if (r.kind() != RingKind::Polynomials)
    throw std::invalid_argument("from_poly: not a polynomial ring");
  if (p.nvars() != r.variables().size()) throw std::invalid_argument("polynomial arity mismatch");
  Scalar s;
  s.ring_ = r;
  s.v_ = std::move(p);
  return s;
}

Scalar Scalar::parse(const std::string& text, const Ring& r) {
  switch (r.kind()) {
    case RingKind::Integers:
      return from_mpz(r, parse_mpz(text));
    case RingKind::Rationals: {
      const auto slash = text.find('/');
      if (slash == std::string::npos) return from_mpz(r, parse_mpz(text));
      mpz_class num = parse_mpz(text.substr(0, slash));
      mpz_class den = parse_mpz(text.substr(slash + 1));
      if (den == 0) throw std::invalid_argument("zero denominator: " + text);
      return from_mpq(mpq_class(num, den));
    }
    case RingKind::PrimeField:
      return from_mpz(r, parse_mpz(text));
    case RingKind::BinaryField: {
      mpz_class n = parse_mpz(text);
      if (n < 0 || n >= (1l << r.degree()))
        throw std::invalid_argument("binary field literal out of range: " + text);
      return f2k(r, static_cast<std::uint32_t>(n.get_ui()));
    }
    case RingKind::Polynomials:
      return from_poly(r, parse_poly(text, r));
  }
  throw std::logic_error("unreachable");
}

bool Scalar::is_zero() const {
  switch (ring_.kind()) {
    case RingKind::Integers: return as_mpz() == 0;
    case RingKind::Rationals: return as_mpq() == 0;
    case RingKind::PrimeField: return fp_value() == 0;
    case RingKind::BinaryField: return f2k_bits() == 0;
    case RingKind::Polynomials: return poly().is_zero();
  }
  return false;
}

bool Scalar::is_one() const { return *this == one(ring_); }

bool Scalar::is_unit() const {
  switch (ring_.kind()) {
    case RingKind::Integers: return as_mpz() == 1 || as_mpz() == -1;
    case RingKind::Rationals:
    case RingKind::PrimeField:
    case RingKind::BinaryField: return !is_zero();
    case RingKind::Polynomials: {
      const Poly& p = poly();
      return p.is_constant() && (p.constant_value() == 1 || p.constant_value() == -1);
    }
  }
  return false;
}

Scalar Scalar::invert() const {
  if (!is_unit()) throw std::domain_error("invert: not a unit: " + to_string());
  Scalar s;
  s.ring_ = ring_;
  switch (ring_.kind()) {
    case RingKind::Integers:
      s.v_ = as_mpz();  // 1 and -1 are self-inverse
      break;
    case RingKind::Rationals: {
      mpq_class q = 1 / as_mpq();
      q.canonicalize();
      s.v_ = std::move(q);
      break;
    }
    case RingKind::PrimeField:
      s.v_ = FpElem{fp_inv(fp_value(), ring_.prime())};
      break;
    case RingKind::BinaryField:
      s.v_ = F2kElem{gf2k_pow(f2k_bits(), (1ull << ring_.degree()) - 2, ring_.degree(),
                              ring_.reduction_bits())};
      break;
    case RingKind::Polynomials:
      s.v_ = poly();  // constant 1 or -1
      break;
  }
  return s;
}

std::optional<Scalar> Scalar::sqrt() const {
  switch (ring_.kind()) {
    case RingKind::Integers: {
      if (as_mpz() < 0) return std::nullopt;
      mpz_class r;
      mpz_sqrt(r.get_mpz_t(), as_mpz().get_mpz_t());
      if (r * r != as_mpz()) return std::nullopt;
      return from_mpz(ring_, r);
    }
    case RingKind::Rationals: {
      mpz_class num = as_mpq().get_num(), den = as_mpq().get_den();
      if (num < 0) return std::nullopt;
      mpz_class rn, rd;
      mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
      mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
      if (rn * rn != num || rd * rd != den) return std::nullopt;
      return from_mpq(mpq_class(rn, rd));
    }
    case RingKind::PrimeField: {
      auto r = fp_sqrt(fp_value(), ring_.prime());
      if (!r) return std::nullopt;
      return fp(ring_, *r);
    }
    case RingKind::BinaryField: {
      // Frobenius: squaring is bijective, the root is a^(2^(k-1)).
      const std::uint32_t r =
          gf2k_pow(f2k_bits(), 1ull << (ring_.degree() - 1), ring_.degree(), ring_.reduction_bits());
      return f2k(ring_, r);
    }
    case RingKind::Polynomials: {
      auto r = poly().sqrt();
      if (!r) return std::nullopt;
      Scalar s;
      s.ring_ = ring_;
      s.v_ = std::move(*r);
      return s;
    }
  }
  return std::nullopt;
}

Scalar Scalar::exact_div(const Scalar& d) const {
  ensure_same_ring(*this, d);
  if (d.is_zero()) throw std::domain_error("exact_div: division by zero");
  switch (ring_.kind()) {
    case RingKind::Integers: {
      mpz_class q, r;
      mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), as_mpz().get_mpz_t(), d.as_mpz().get_mpz_t());
      if (r != 0) throw std::domain_error("exact_div: not divisible");
      return from_mpz(ring_, q);
    }
    case RingKind::Rationals:
    case RingKind::PrimeField:
    case RingKind::BinaryField:
      return *this * d.invert();
    case RingKind::Polynomials: {
      auto q = poly().exact_divide(d.poly());
      if (!q) throw std::domain_error("exact_div: not divisible");
      Scalar s;
      s.ring_ = ring_;
      s.v_ = std::move(*q);
      return s;
    }
  }
  throw std::logic_error("unreachable");
}

Scalar Scalar::pow(long e) const {
  Scalar base = *this;
  if (e < 0) {
    base = invert();
    e = -e;
  }
  Scalar r = one(ring_);
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
  ensure_same_ring(*this, o);
  Scalar s;
  s.ring_ = ring_;
  switch (ring_.kind()) {
    case RingKind::Integers: s.v_ = mpz_class(as_mpz() + o.as_mpz()); break;
    case RingKind::Rationals: s.v_ = mpq_class(as_mpq() + o.as_mpq()); break;
    case RingKind::PrimeField: s.v_ = FpElem{fp_add(fp_value(), o.fp_value(), ring_.prime())}; break;
    case RingKind::BinaryField: s.v_ = F2kElem{f2k_bits() ^ o.f2k_bits()}; break;
    case RingKind::Polynomials: s.v_ = poly() + o.poly(); break;
  }
  return s;
}

Scalar Scalar::operator-() const {
  Scalar s;
  s.ring_ = ring_;
  switch (ring_.kind()) {
    case RingKind::Integers: s.v_ = mpz_class(-as_mpz()); break;
    case RingKind::Rationals: s.v_ = mpq_class(-as_mpq()); break;
    case RingKind::PrimeField: s.v_ = FpElem{fp_neg(fp_value(), ring_.prime())}; break;
    case RingKind::BinaryField: s.v_ = F2kElem{f2k_bits()}; break;
    case RingKind::Polynomials: s.v_ = -poly(); break;
  }
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  ensure_same_ring(*this, o);
  Scalar s;
  s.ring_ = ring_;
  switch (ring_.kind()) {
    case RingKind::Integers: s.v_ = mpz_class(as_mpz() * o.as_mpz()); break;
    case RingKind::Rationals: {
      mpq_class q = as_mpq() * o.as_mpq();
      q.canonicalize();
      s.v_ = std::move(q);
      break;
    }
    case RingKind::PrimeField: s.v_ = FpElem{fp_mul(fp_value(), o.fp_value(), ring_.prime())}; break;
    case RingKind::BinaryField:
      s.v_ = F2kElem{gf2k_mul(f2k_bits(), o.f2k_bits(), ring_.degree(), ring_.reduction_bits())};
      break;
    case RingKind::Polynomials: s.v_ = poly() * o.poly(); break;
  }
  return s;
}

bool Scalar::operator==(const Scalar& o) const {
  if (ring_ != o.ring_) return false;
  switch (ring_.kind()) {
    case RingKind::Integers: return as_mpz() == o.as_mpz();
    case RingKind::Rationals: return as_mpq() == o.as_mpq();
    case RingKind::PrimeField: return fp_value() == o.fp_value();
    case RingKind::BinaryField: return f2k_bits() == o.f2k_bits();
    case RingKind::Polynomials: return poly() == o.poly();
  }
  return false;
}

std::string Scalar::to_string() const {
  switch (ring_.kind()) {
    case RingKind::Integers: return as_mpz().get_str();
    case RingKind::Rationals: return as_mpq().get_str();
    case RingKind::PrimeField: return std::to_string(fp_value());
    case RingKind::BinaryField: return std::to_string(f2k_bits());
    case RingKind::Polynomials: return poly().to_string(ring_.variables());
  }
  return "?";
}

Scalar Scalar::substitute(const std::map<std::string, Scalar>& assignment) const {
  if (ring_.kind() != RingKind::Polynomials)
    throw std::invalid_argument("substitute: source is not a polynomial");
  const auto& vars = ring_.variables();
  std::vector<const Scalar*> values(vars.size(), nullptr);
  const Ring* target = nullptr;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    auto it = assignment.find(vars[i]);
    if (it == assignment.end())
      throw std::invalid_argument("substitute: missing variable " + vars[i]);
    values[i] = &it->second;
    if (!target) target = &it->second.ring();
    else if (*target != it->second.ring())
      throw std::invalid_argument("substitute: mixed target rings");
  }
  Scalar acc = Scalar::zero(*target);
  for (const auto& [mono, coeff] : poly().terms()) {
    Scalar term = Scalar::from_mpz(*target, coeff);
    for (std::size_t v = 0; v < vars.size(); ++v)
      if (mono.exps[v]) term *= values[v]->pow(static_cast<long>(mono.exps[v]));
    acc += term;
  }
  return acc;
}

const mpz_class& Scalar::as_mpz() const { return std::get<mpz_class>(v_); }
const mpq_class& Scalar::as_mpq() const { return std::get<mpq_class>(v_); }

Scalar finite_element(const Ring& r, std::uint64_t index) {
  if (r.kind() == RingKind::PrimeField) return Scalar::fp(r, index % r.prime());
  if (r.kind() == RingKind::BinaryField)
    return Scalar::f2k(r, static_cast<std::uint32_t>(index % r.cardinality()));
  throw std::invalid_argument("finite_element: not a finite field");
}

std::uint64_t finite_index(const Scalar& s) {
  if (s.ring().kind() == RingKind::PrimeField) return s.fp_value();
  if (s.ring().kind() == RingKind::BinaryField) return s.f2k_bits();
  throw std::invalid_argument("finite_index: not a finite field");
}

}  // namespace tqf
