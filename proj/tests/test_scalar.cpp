#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tqf/scalar.hpp"

using namespace tqf;

namespace {

Scalar random_scalar(const Ring& r, std::mt19937& rng) {
  switch (r.kind()) {
    case RingKind::Integers:
      return Scalar::from_int(r, static_cast<long>(rng() % 2001) - 1000);
    case RingKind::Rationals: {
      const long num = static_cast<long>(rng() % 2001) - 1000;
      const long den = static_cast<long>(rng() % 50) + 1;
      return Scalar::from_mpq(mpq_class(num, den));
    }
    case RingKind::PrimeField:
    case RingKind::BinaryField:
      return finite_element(r, rng());
    case RingKind::Polynomials: {
      std::vector<Poly::Term> terms;
      const std::size_t nv = r.variables().size();
      for (int t = 0; t < 3; ++t) {
        Monomial m{std::vector<std::uint32_t>(nv, 0)};
        for (std::size_t v = 0; v < nv; ++v) m.exps[v] = rng() % 3;
        terms.push_back({m, mpz_class(static_cast<long>(rng() % 11) - 5)});
      }
      return Scalar::from_poly(r, Poly::from_terms(nv, std::move(terms)));
    }
  }
  return Scalar::zero(r);
}

void check_ring_axioms(const Ring& r, std::mt19937& rng) {
  for (int trial = 0; trial < 50; ++trial) {
    const Scalar a = random_scalar(r, rng), b = random_scalar(r, rng), c = random_scalar(r, rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * Scalar::one(r) == a);
    CHECK(a + Scalar::zero(r) == a);
    CHECK(a - a == Scalar::zero(r));
  }
}

}  // namespace

TEST_CASE("ring descriptor parsing round-trips") {
  for (const char* d : {"Z", "Q", "Fp:5", "F2k:3", "ZPoly:a,b,c"}) {
    const Ring r = Ring::parse(d);
    CHECK(r.to_string() == d);
    CHECK(Ring::parse(r.to_string()) == r);
  }
  CHECK_THROWS_AS(Ring::parse("Fp:4"), std::invalid_argument);
  CHECK_THROWS_AS(Ring::parse("F2k:5"), std::invalid_argument);
  CHECK_THROWS_AS(Ring::parse("bogus"), std::invalid_argument);
}

TEST_CASE("capability flags") {
  CHECK(!Ring::integers().is_field());
  CHECK(Ring::rationals().is_field());
  CHECK(Ring::prime_field(7).is_field());
  CHECK(Ring::binary_field(2).is_field());
  CHECK(!Ring::polynomials({"a"}).is_field());
  CHECK(Ring::binary_field(3).is_two_perfect());
  CHECK(!Ring::prime_field(2).is_two_perfect());
  CHECK(Ring::prime_field(2).characteristic() == 2);
  CHECK(Ring::binary_field(4).characteristic() == 2);
  CHECK(Ring::rationals().characteristic() == 0);
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937 rng(12345);
  for (const char* d :
       {"Z", "Q", "Fp:2", "Fp:7", "F2k:1", "F2k:2", "F2k:3", "F2k:4", "ZPoly:a,b"})
    check_ring_axioms(Ring::parse(d), rng);
}

TEST_CASE("exact division") {
  const Ring z = Ring::integers();
  CHECK(Scalar::from_int(z, 12).exact_div(Scalar::from_int(z, -3)) == Scalar::from_int(z, -4));
  CHECK_THROWS_AS(Scalar::from_int(z, 5).exact_div(Scalar::from_int(z, 2)), std::domain_error);
  CHECK_THROWS_AS(Scalar::one(z).exact_div(Scalar::zero(z)), std::domain_error);

  const Ring zp = Ring::parse("ZPoly:a,b");
  const Scalar a = Scalar::variable(zp, "a"), b = Scalar::variable(zp, "b");
  const Scalar prod = (a + b) * (a - b);
  CHECK(prod.exact_div(a + b) == a - b);
  CHECK_THROWS_AS(prod.exact_div(a * a), std::domain_error);
}

TEST_CASE("exact rational and prime-field arithmetic") {
  const Ring q = Ring::rationals();
  CHECK(Scalar::parse("1/2", q) + Scalar::parse("1/3", q) == Scalar::parse("5/6", q));
  const Ring f5 = Ring::prime_field(5);
  CHECK(Scalar::from_int(f5, 3) * Scalar::from_int(f5, 4) == Scalar::from_int(f5, 2));
}

TEST_CASE("polynomial product") {
  const Ring zp = Ring::parse("ZPoly:b11,b12,b21,b22");
  const Scalar b11 = Scalar::variable(zp, "b11"), b12 = Scalar::variable(zp, "b12");
  const Scalar b21 = Scalar::variable(zp, "b21"), b22 = Scalar::variable(zp, "b22");
  const Scalar det = b11 * b22 - b12 * b21;
  CHECK(det.to_string() == "b11*b22 - b12*b21");
  CHECK(Scalar::parse("b11*b22 - b12*b21", zp) == det);
}

TEST_CASE("units and inversion") {
  const Ring z = Ring::integers();
  CHECK(Scalar::from_int(z, -1).is_unit());
  CHECK(!Scalar::from_int(z, 4).is_unit());
  CHECK(Scalar::from_int(z, -1).invert() == Scalar::from_int(z, -1));
  CHECK_THROWS_AS(Scalar::from_int(z, 2).invert(), std::domain_error);

  // GF(8) with reduction x^3 + x + 1: x^-1 = x^2 + 1, by extended-Euclid
  // arithmetic done by hand (x * (x^2+1) = x^3 + x = 1 mod x^3+x+1).
  const Ring f8 = Ring::binary_field(3);
  const Scalar x = Scalar::f2k(f8, 0b010);
  CHECK(x.invert() == Scalar::f2k(f8, 0b101));
  for (std::uint32_t bits = 1; bits < 8; ++bits) {
    const Scalar a = Scalar::f2k(f8, bits);
    CHECK(a * a.invert() == Scalar::one(f8));
  }

  const Ring zp = Ring::parse("ZPoly:a");
  CHECK(Scalar::parse("-1", zp).is_unit());
  CHECK(!Scalar::variable(zp, "a").is_unit());
}

TEST_CASE("square roots") {
  const Ring z = Ring::integers();
  CHECK(!Scalar::from_int(z, 2).sqrt().has_value());
  CHECK(Scalar::from_int(z, 49).sqrt() == Scalar::from_int(z, 7));

  // exhaustive search in F7: 3^2 = 2 and 4^2 = 2; the smaller root is chosen
  const Ring f7 = Ring::prime_field(7);
  CHECK(Scalar::from_int(f7, 2).sqrt() == Scalar::from_int(f7, 3));
  CHECK(!Scalar::from_int(f7, 3).sqrt().has_value());

  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
    const Ring fp = Ring::prime_field(p);
    for (std::uint64_t v = 0; v < p; ++v) {
      const Scalar a = finite_element(fp, v);
      const auto root = a.sqrt();
      bool has = false;
      Scalar smallest = Scalar::zero(fp);
      for (std::uint64_t s = 0; s < p; ++s) {
        const Scalar cand = finite_element(fp, s);
        if (cand * cand == a) {
          if (!has) smallest = cand;
          has = true;
          break;  // enumeration is ascending; the first hit is the smallest
        }
      }
      CHECK(root.has_value() == has);
      if (root) CHECK(*root == smallest);
    }
  }

  // Frobenius roots exist everywhere in binary fields; exhaustive k <= 4.
  for (unsigned k = 1; k <= 4; ++k) {
    const Ring f = Ring::binary_field(k);
    std::vector<bool> hit(f.cardinality(), false);
    for (std::uint64_t v = 0; v < f.cardinality(); ++v) {
      const Scalar a = finite_element(f, v);
      const auto root = a.sqrt();
      REQUIRE(root.has_value());
      CHECK((*root) * (*root) == a);
      hit[finite_index(*root)] = true;
    }
    // squaring is a bijection
    for (bool h : hit) CHECK(h);
  }

  const Ring zp = Ring::parse("ZPoly:a,b");
  const Scalar a = Scalar::variable(zp, "a"), b = Scalar::variable(zp, "b");
  const Scalar square = (a + b) * (a + b);
  CHECK(square.sqrt() == a + b);
  CHECK(!(square + Scalar::one(zp)).sqrt().has_value());
  CHECK(!(a * b).sqrt().has_value());
}

TEST_CASE("substitute is a ring homomorphism") {
  const Ring zp = Ring::parse("ZPoly:b11,b12,b21,b22");
  const Ring q = Ring::rationals();
  std::map<std::string, Scalar> ident = {{"b11", Scalar::one(q)},
                                         {"b12", Scalar::zero(q)},
                                         {"b21", Scalar::zero(q)},
                                         {"b22", Scalar::one(q)}};
  const Scalar det = Scalar::parse("b11*b22 - b12*b21", zp);
  CHECK(det.substitute(ident) == Scalar::one(q));
  CHECK(Scalar::zero(zp).substitute(ident) == Scalar::zero(q));

  std::mt19937 rng(99);
  const Ring f7 = Ring::prime_field(7);
  for (int trial = 0; trial < 30; ++trial) {
    const Scalar pa = random_scalar(zp, rng), pb = random_scalar(zp, rng);
    std::map<std::string, Scalar> assign;
    for (const auto& v : zp.variables()) assign.insert({v, finite_element(f7, rng())});
    CHECK((pa * pb).substitute(assign) == pa.substitute(assign) * pb.substitute(assign));
    CHECK((pa + pb).substitute(assign) == pa.substitute(assign) + pb.substitute(assign));
  }

  std::map<std::string, Scalar> missing = {{"b11", Scalar::one(q)}};
  CHECK_THROWS_AS(det.substitute(missing), std::invalid_argument);
  std::map<std::string, Scalar> mixed = ident;
  mixed.at("b22") = Scalar::one(Ring::integers());
  CHECK_THROWS_AS(det.substitute(mixed), std::invalid_argument);
}

TEST_CASE("P3 of q1 via substitution") {
  // P3 = 4 z1 z2 z3 + z12 z13 z23 - (z1 z23^2 + z2 z13^2 + z3 z12^2),
  // evaluated at l3 = 1, l12 = 1, rest 0, comes to -1.
  const Ring zp = Ring::parse("ZPoly:z1,z2,z3,z12,z13,z23");
  const Scalar p3 = Scalar::parse(
      "4*z1*z2*z3 + z12*z13*z23 - z1*z23^2 - z2*z13^2 - z3*z12^2", zp);
  const Ring q = Ring::rationals();
  std::map<std::string, Scalar> at = {{"z1", Scalar::zero(q)},  {"z2", Scalar::zero(q)},
                                      {"z3", Scalar::one(q)},   {"z12", Scalar::one(q)},
                                      {"z13", Scalar::zero(q)}, {"z23", Scalar::zero(q)}};
  CHECK(p3.substitute(at) == Scalar::from_int(q, -1));
}

TEST_CASE("ring mismatch is rejected") {
  CHECK_THROWS_AS(Scalar::one(Ring::integers()) + Scalar::one(Ring::rationals()),
                  std::invalid_argument);
}

TEST_CASE("canonical forms") {
  const Ring q = Ring::rationals();
  CHECK(Scalar::parse("2/4", q).to_string() == "1/2");
  CHECK(Scalar::parse("3/-6", q).to_string() == "-1/2");
  const Ring f5 = Ring::prime_field(5);
  CHECK(Scalar::parse("-1", f5).to_string() == "4");
  CHECK(Scalar::parse("12", f5).to_string() == "2");
}
