#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tqf/forms.hpp"

using namespace tqf;

namespace {

TernaryForm form(const Ring& r, long l1, long l2, long l3, long l12, long l13, long l23) {
  return TernaryForm(Scalar::from_int(r, l1), Scalar::from_int(r, l2), Scalar::from_int(r, l3),
                     Scalar::from_int(r, l12), Scalar::from_int(r, l13),
                     Scalar::from_int(r, l23));
}

Mat3 random_gl3(const Ring& field, std::mt19937& rng) {
  while (true) {
    Mat3 g(field);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) g.at(i, j) = finite_element(field, rng());
    if (g.det().is_unit()) return g;
  }
}

TernaryForm random_form(const Ring& field, std::mt19937& rng) {
  return TernaryForm(finite_element(field, rng()), finite_element(field, rng()),
                     finite_element(field, rng()), finite_element(field, rng()),
                     finite_element(field, rng()), finite_element(field, rng()));
}

}  // namespace

TEST_CASE("evaluate") {
  const Ring q = Ring::rationals();
  const TernaryForm q1 = TernaryForm::q1(q);
  const Scalar one = Scalar::one(q);
  CHECK(q1.evaluate(Vec3(one, one, one)) == Scalar::from_int(q, 2));
  CHECK(TernaryForm::zero(q).evaluate(Vec3(one, one, one)) == Scalar::zero(q));

  // q = x1^2 sees only the first coordinate
  const TernaryForm sq = form(q, 1, 0, 0, 0, 0, 0);
  const Scalar a = Scalar::parse("7/3", q), b = Scalar::from_int(q, -4), c = Scalar::one(q);
  CHECK(sq.evaluate(Vec3(a, b, c)) == a * a);

  // coefficients are recoverable from values
  const TernaryForm f = form(q, 2, -1, 5, 3, -2, 7);
  for (int i = 0; i < 3; ++i)
    CHECK(f.evaluate(Vec3::unit(q, i)) == f.coeffs()[static_cast<std::size_t>(i)]);
  CHECK(f.evaluate(Vec3::unit(q, 0) + Vec3::unit(q, 1)) - f.l1() - f.l2() == f.l12());
  CHECK(f.evaluate(Vec3::unit(q, 0) + Vec3::unit(q, 2)) - f.l1() - f.l3() == f.l13());
  CHECK(f.evaluate(Vec3::unit(q, 1) + Vec3::unit(q, 2)) - f.l2() - f.l3() == f.l23());
}

TEST_CASE("associated bilinear form") {
  const Ring q = Ring::rationals();
  const Mat3 b = assoc_bilinear(TernaryForm::q1(q));
  Mat3 expect(q);
  expect.at(0, 1) = Scalar::one(q);
  expect.at(1, 0) = Scalar::one(q);
  expect.at(2, 2) = Scalar::from_int(q, 2);
  CHECK(b == expect);
  CHECK(assoc_bilinear(TernaryForm::zero(q)) == Mat3(q));

  // characteristic 2: the diagonal 2*l_i dies, the matrix is alternating
  const Ring f2 = Ring::prime_field(2);
  std::mt19937 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    const Mat3 m = assoc_bilinear(random_form(f2, rng));
    for (int i = 0; i < 3; ++i) CHECK(m.at(i, i).is_zero());
    CHECK(m == m.transpose());
  }
}

TEST_CASE("induced quadratic form") {
  const Ring r = Ring::rationals();
  CHECK(induced_quadratic(Mat3::identity(r)) == form(r, 1, 1, 1, 0, 0, 0));
  Mat3 b(r);
  b.at(1, 0) = Scalar::one(r);  // b21 only
  CHECK(induced_quadratic(b) == form(r, 0, 0, 0, 1, 0, 0));
  CHECK(induced_quadratic(-Mat3::identity(r).transpose()) == form(r, -1, -1, -1, 0, 0, 0));
}

TEST_CASE("canonical lift") {
  const Ring r = Ring::rationals();
  Mat3 expect(r);
  expect.at(1, 0) = Scalar::one(r);  // l12 at (2,1)
  expect.at(2, 2) = Scalar::one(r);  // l3 on the diagonal
  CHECK(canonical_lift(TernaryForm::q1(r)) == expect);
  CHECK(canonical_lift(TernaryForm::zero(r)) == Mat3(r));

  // symbolic: the matrix of variables lands exactly where stated
  const Ring zp = Ring::parse("ZPoly:l1,l2,l3,l12,l13,l23");
  const TernaryForm gen(Scalar::variable(zp, "l1"), Scalar::variable(zp, "l2"),
                        Scalar::variable(zp, "l3"), Scalar::variable(zp, "l12"),
                        Scalar::variable(zp, "l13"), Scalar::variable(zp, "l23"));
  const Mat3 lift = canonical_lift(gen);
  CHECK(lift.at(0, 0) == Scalar::variable(zp, "l1"));
  CHECK(lift.at(1, 0) == Scalar::variable(zp, "l12"));
  CHECK(lift.at(2, 1) == Scalar::variable(zp, "l23"));
  CHECK(lift.at(0, 2) == Scalar::variable(zp, "l13"));
  CHECK(lift.at(0, 1).is_zero());
  CHECK(lift.at(1, 2).is_zero());
  CHECK(lift.at(2, 0).is_zero());

  // induced_quadratic . canonical_lift = id, symbolically
  CHECK(induced_quadratic(lift) == gen);
  // assoc_bilinear = C + C^t for C = canonical_lift
  CHECK(assoc_bilinear(gen) == lift + lift.transpose());
}

TEST_CASE("half-discriminant and semiregularity") {
  const Ring q = Ring::rationals();
  CHECK(half_discriminant(TernaryForm::q1(q)) == Scalar::from_int(q, -1));
  CHECK(is_semiregular(TernaryForm::q1(q)));

  const TernaryForm sum_sq = form(q, 1, 1, 1, 0, 0, 0);
  CHECK(half_discriminant(sum_sq) == Scalar::from_int(q, 4));
  CHECK(is_semiregular(sum_sq));
  const Ring f2 = Ring::prime_field(2);
  CHECK(!is_semiregular(form(f2, 1, 1, 1, 0, 0, 0)));

  CHECK(half_discriminant(TernaryForm::zero(q)).is_zero());
  CHECK(!is_semiregular(TernaryForm::zero(q)));

  // over Z the half-discriminant must be +-1 to be a unit
  const Ring z = Ring::integers();
  CHECK(is_semiregular(TernaryForm::q1(z)));
  CHECK(!is_semiregular(form(z, 1, 1, 1, 0, 0, 0)));  // P3 = 4, not a unit in Z
}

TEST_CASE("group action on forms") {
  const Ring q = Ring::rationals();
  const TernaryForm xy = form(q, 0, 0, 0, 1, 0, 0);
  CHECK(act(Mat3::identity(q), xy) == xy);
  const Mat3 d =
      Mat3::diagonal(Scalar::from_int(q, -1), Scalar::from_int(q, -1), Scalar::one(q));
  CHECK(act(d, xy) == xy);

  Mat3 swap13(q);  // x1 <-> x3
  swap13.at(0, 2) = Scalar::one(q);
  swap13.at(1, 1) = Scalar::one(q);
  swap13.at(2, 0) = Scalar::one(q);
  CHECK(act(swap13, form(q, 1, 0, 0, 0, 0, 0)) == form(q, 0, 0, 1, 0, 0, 0));

  Mat3 singular(q);
  singular.at(0, 0) = Scalar::one(q);
  CHECK_THROWS_AS(act(singular, xy), std::domain_error);

  const Ring f5 = Ring::prime_field(5);
  std::mt19937 rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    const Mat3 g = random_gl3(f5, rng), h = random_gl3(f5, rng);
    const TernaryForm f = random_form(f5, rng);
    CHECK(act(g * h, f) == act(g, act(h, f)));
    // P3(g.q) = det(g)^-2 P3(q)
    const Scalar dinv = g.det().invert();
    CHECK(half_discriminant(act(g, f)) == dinv * dinv * half_discriminant(f));
  }
}

TEST_CASE("unit scaling") {
  const Ring q = Ring::rationals();
  const TernaryForm q1 = TernaryForm::q1(q);
  CHECK(scale(Scalar::one(q), q1) == q1);
  CHECK(scale(Scalar::from_int(q, -1), q1) == form(q, 0, 0, -1, -1, 0, 0));
  CHECK_THROWS_AS(scale(Scalar::zero(q), q1), std::domain_error);
  CHECK_THROWS_AS(scale(Scalar::from_int(Ring::integers(), 2), TernaryForm::q1(Ring::integers())),
                  std::domain_error);

  // P3(u q) = u^3 P3(q) and semiregularity is preserved
  std::mt19937 rng(23);
  const Ring f7 = Ring::prime_field(7);
  for (int trial = 0; trial < 25; ++trial) {
    const TernaryForm f = random_form(f7, rng);
    const Scalar u = finite_element(f7, 1 + rng() % 6);
    CHECK(half_discriminant(scale(u, f)) == u * u * u * half_discriminant(f));
    CHECK(is_semiregular(scale(u, f)) == is_semiregular(f));
  }
}

TEST_CASE("similarity brute force over F2") {
  const Ring f2 = Ring::prime_field(2);
  const TernaryForm q1 = TernaryForm::q1(f2);

  const auto self = similar_bruteforce(q1, q1);
  REQUIRE(self.has_value());
  CHECK(self->g == Mat3::identity(f2));
  CHECK(self->multiplier.is_one());

  const TernaryForm x3sq = form(f2, 0, 0, 1, 0, 0, 0);
  CHECK(!similar_bruteforce(q1, x3sq).has_value());

  const TernaryForm x1sq = form(f2, 1, 0, 0, 0, 0, 0);
  const auto w = similar_bruteforce(x1sq, x3sq);
  REQUIRE(w.has_value());
  // witness property: act(g, q) = scale(u^-1, q')
  CHECK(act(w->g, x1sq) == scale(w->multiplier.invert(), x3sq));
}

TEST_CASE("exact 3x3 linear algebra") {
  const Ring q = Ring::rationals();
  std::mt19937 rng(5);
  const Ring f7 = Ring::prime_field(7);
  for (int trial = 0; trial < 20; ++trial) {
    const Mat3 g = random_gl3(f7, rng);
    CHECK(g * g.inverse() == Mat3::identity(f7));
    CHECK(g.adjugate() * g == Mat3::identity(f7) * g.det());
  }
  Mat3 m(q);
  m.at(0, 0) = Scalar::parse("1/2", q);
  m.at(1, 2) = Scalar::from_int(q, 3);
  m.at(2, 1) = Scalar::from_int(q, -1);
  CHECK(m.det() == Scalar::parse("3/2", q));
  CHECK(m.inverse() * m == Mat3::identity(q));
}
