#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tqf/parse.hpp"

using namespace tqf;

TEST_CASE("basic form expressions") {
  const Ring q = Ring::rationals();
  CHECK(parse_form("x1*x2 + x3^2", q) == TernaryForm::q1(q));
  CHECK(parse_form("0", q) == TernaryForm::zero(q));

  // accumulation of repeated monomials
  const Ring z = Ring::integers();
  const TernaryForm f = parse_form("2*x1^2 + x1*x2 + x1*x2", z);
  CHECK(f.l1() == Scalar::from_int(z, 2));
  CHECK(f.l12() == Scalar::from_int(z, 2));
  CHECK(f.l2().is_zero());

  // x1*x1 is x1^2
  CHECK(parse_form("x1*x1", z) == parse_form("x1^2", z));
}

TEST_CASE("syntax errors carry a position") {
  const Ring q = Ring::rationals();
  CHECK_THROWS_WITH_AS(parse_form("x4^2", q),
                       doctest::Contains("unknown variable"), std::invalid_argument);
  CHECK_THROWS_AS(parse_form("x1^3", q), std::invalid_argument);
  CHECK_THROWS_AS(parse_form("x1", q), std::invalid_argument);          // degree 1
  CHECK_THROWS_AS(parse_form("x1*x2*x3", q), std::invalid_argument);    // degree 3
  CHECK_THROWS_AS(parse_form("5", q), std::invalid_argument);           // constant
  CHECK_THROWS_AS(parse_form("", q), std::invalid_argument);
  CHECK_THROWS_AS(parse_form("x1^2 + ", q), std::invalid_argument);
  CHECK_THROWS_AS(parse_form("(x1^2", q), std::invalid_argument);
  CHECK_THROWS_AS(parse_form("1/0*x1^2", q), std::invalid_argument);
}

TEST_CASE("coefficients in each ring's literal syntax") {
  const Ring q = Ring::rationals();
  CHECK(parse_form("1/2*x1^2 + -3*x2*x3", q).l1() == Scalar::parse("1/2", q));
  CHECK(parse_form("1/2*x1^2 + -3*x2*x3", q).l23() == Scalar::from_int(q, -3));

  const Ring f5 = Ring::prime_field(5);
  CHECK(parse_form("7*x1^2", f5).l1() == Scalar::from_int(f5, 2));

  const Ring f8 = Ring::binary_field(3);  // literals are bit patterns
  CHECK(parse_form("6*x1*x3", f8).l13() == Scalar::f2k(f8, 6));
  CHECK_THROWS_AS(parse_form("9*x1^2", f8), std::invalid_argument);

  const Ring zp = Ring::parse("ZPoly:a,b");
  const TernaryForm sym = parse_form("a*x1^2 + (a + 2*b)*x1*x2", zp);
  CHECK(sym.l1() == Scalar::variable(zp, "a"));
  CHECK(sym.l12() == Scalar::variable(zp, "a") + Scalar::from_int(zp, 2) * Scalar::variable(zp, "b"));

  // coefficient-ring variables may not shadow the form variables
  CHECK_THROWS_AS(parse_form("x1^2", Ring::parse("ZPoly:x1")), std::invalid_argument);
}

TEST_CASE("print then parse is the identity") {
  std::mt19937 rng(137);
  for (const char* spec : {"Z", "Q", "Fp:7", "F2k:3"}) {
    const Ring r = Ring::parse(spec);
    for (int trial = 0; trial < 40; ++trial) {
      std::array<Scalar, 6> c = {Scalar::zero(r), Scalar::zero(r), Scalar::zero(r),
                                 Scalar::zero(r), Scalar::zero(r), Scalar::zero(r)};
      for (auto& s : c) {
        if (r.is_finite()) s = finite_element(r, rng());
        else s = Scalar::from_int(r, static_cast<long>(rng() % 21) - 10);
      }
      const TernaryForm f(c[0], c[1], c[2], c[3], c[4], c[5]);
      CHECK(parse_form(form_to_string(f), r) == f);
    }
  }
  // symbolic coefficients need the parenthesized literal path
  const Ring zp = Ring::parse("ZPoly:a,b");
  const Scalar a = Scalar::variable(zp, "a"), b = Scalar::variable(zp, "b");
  const TernaryForm sym(a + b, -a, Scalar::from_int(zp, 3) * b, a * b - Scalar::one(zp),
                        Scalar::zero(zp), -(a + b));
  CHECK(parse_form(form_to_string(sym), zp) == sym);
}
