#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tqf/clifford.hpp"

using namespace tqf;

namespace {

Mat3 random_mat3(const Ring& field, std::mt19937& rng) {
  Mat3 b(field);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) b.at(i, j) = finite_element(field, rng());
  return b;
}

TernaryForm random_form(const Ring& field, std::mt19937& rng) {
  return TernaryForm(finite_element(field, rng()), finite_element(field, rng()),
                     finite_element(field, rng()), finite_element(field, rng()),
                     finite_element(field, rng()), finite_element(field, rng()));
}

StabW random_stabw(const Ring& field, std::mt19937& rng) {
  while (true) {
    Mat4 m(field);
    m.at(0, 0) = Scalar::one(field);
    for (int j = 1; j < 4; ++j) m.at(0, j) = finite_element(field, rng());
    for (int i = 1; i < 4; ++i)
      for (int j = 1; j < 4; ++j) m.at(i, j) = finite_element(field, rng());
    if (m.det().is_unit()) return StabW(std::move(m));
  }
}

}  // namespace

TEST_CASE("upsilon on special points") {
  const Ring q = Ring::rationals();
  CHECK(upsilon(Mat3(q)) == Algebra4::even_exterior(q));

  const Algebra4 a = upsilon(Mat3::identity(q));
  Element4 minus_w(q), minus_e3(q), plus_e3(q);
  minus_w[0] = Scalar::from_int(q, -1);
  minus_e3[3] = Scalar::from_int(q, -1);
  plus_e3[3] = Scalar::one(q);
  CHECK(a.multiply(Element4::basis(q, 1), Element4::basis(q, 1)) == minus_w);
  CHECK(a.multiply(Element4::basis(q, 1), Element4::basis(q, 2)) == minus_e3);
  CHECK(a.multiply(Element4::basis(q, 2), Element4::basis(q, 1)) == plus_e3);
}

TEST_CASE("the Clifford-product construction agrees with the table") {
  const Ring q = Ring::rationals();
  CHECK(clifford_product_oracle(Mat3(q)) == Algebra4::even_exterior(q));

  std::mt19937 rng(61);
  const Ring f5 = Ring::prime_field(5);
  for (int trial = 0; trial < 20; ++trial) {
    const Mat3 b = random_mat3(f5, rng);
    CHECK(clifford_product_oracle(b) == upsilon(b));
  }

  // worked product: for b = canonical_lift(q1), e2.e1 has w-part
  // -l12*l23 = 0 and reduces to e2 itself
  const Mat3 b1 = canonical_lift(TernaryForm::q1(q));
  const Algebra4 a = clifford_product_oracle(b1);
  const Element4 p = a.basis_product(2, 1);
  CHECK(p[0].is_zero());
  CHECK(p[1].is_zero());
  CHECK(p[2].is_one());
  CHECK(p[3].is_zero());
}

TEST_CASE("theta on special points") {
  const Ring q = Ring::rationals();
  CHECK(theta(theta_point(TernaryForm::zero(q))) == Algebra4::even_exterior(q));

  // (q1, t=0): e1^2 = e1 and e3^2 = 0
  const Algebra4 a = theta(theta_point(TernaryForm::q1(q)));
  CHECK(a.basis_product(1, 1) == Element4::basis(q, 1));
  CHECK(a.basis_product(3, 3).is_zero());

  // (zero form, t = (1,0,0)): e1^2 = -w - 2 e1
  const ThetaPoint p{TernaryForm::zero(q),
                     {Scalar::one(q), Scalar::zero(q), Scalar::zero(q)}};
  Element4 expect(q);
  expect[0] = Scalar::from_int(q, -1);
  expect[1] = Scalar::from_int(q, -2);
  CHECK(theta(p).basis_product(1, 1) == expect);
}

TEST_CASE("translation between the two coordinatizations") {
  const Ring q = Ring::rationals();
  const TernaryForm q1 = TernaryForm::q1(q);
  CHECK(theta_to_bilinear(theta_point(q1)) == canonical_lift(q1));
  CHECK(theta_to_bilinear(theta_point(TernaryForm::zero(q))) == Mat3(q));

  std::mt19937 rng(67);
  const Ring f7 = Ring::prime_field(7);
  for (int trial = 0; trial < 20; ++trial) {
    const ThetaPoint p{random_form(f7, rng),
                       {finite_element(f7, rng()), finite_element(f7, rng()),
                        finite_element(f7, rng())}};
    const Mat3 b = theta_to_bilinear(p);
    CHECK(theta(p) == upsilon(b));
    const ThetaPoint back = bilinear_to_theta(b);
    CHECK(back.q == p.q);
    CHECK(back.t == p.t);
  }
}

TEST_CASE("bilinear_to_theta . theta_to_bilinear = id on matrices") {
  std::mt19937 rng(71);
  const Ring f5 = Ring::prime_field(5);
  for (int trial = 0; trial < 20; ++trial) {
    const Mat3 b = random_mat3(f5, rng);
    CHECK(theta_to_bilinear(bilinear_to_theta(b)) == b);
  }
}

TEST_CASE("opposite-algebra involution") {
  const Ring q = Ring::rationals();
  CHECK(opposite_involution_check(Mat3::identity(q)));
  CHECK(opposite_involution_check(Mat3(q)));
  // both sides have e1 e2 = +e3 after passing to the opposite
  const Algebra4 op = upsilon(Mat3::identity(q)).opposite();
  Element4 plus_e3(q);
  plus_e3[3] = Scalar::one(q);
  CHECK(op.basis_product(1, 2) == plus_e3);
  CHECK(upsilon(-Mat3::identity(q).transpose()).basis_product(1, 2) == plus_e3);

  std::mt19937 rng(73);
  const Ring f3 = Ring::prime_field(3);
  for (int trial = 0; trial < 20; ++trial) CHECK(opposite_involution_check(random_mat3(f3, rng)));
}

TEST_CASE("transport of structure along Stab_w") {
  const Ring q = Ring::rationals();
  const Algebra4 a = theta(theta_point(TernaryForm::q1(q)));
  CHECK(act_stabw(StabW::identity(q), a) == a);

  // the unipotent with row t carries theta(q, 0) to theta(q, t)
  std::mt19937 rng(79);
  const Ring f5 = Ring::prime_field(5);
  for (int trial = 0; trial < 20; ++trial) {
    const TernaryForm f = random_form(f5, rng);
    const std::array<Scalar, 3> t = {finite_element(f5, rng()), finite_element(f5, rng()),
                                     finite_element(f5, rng())};
    CHECK(act_stabw(StabW::unipotent(t), theta(theta_point(f))) == theta(ThetaPoint{f, t}));
  }

  // composition law
  for (int trial = 0; trial < 10; ++trial) {
    const StabW h1 = random_stabw(f5, rng), h2 = random_stabw(f5, rng);
    const Algebra4 b = upsilon(random_mat3(f5, rng));
    CHECK(act_stabw(h1 * h2, b) == act_stabw(h1, act_stabw(h2, b)));
    // associativity and unit are preserved
    const Algebra4 moved = act_stabw(h1, b);
    CHECK(moved.is_unital());
    CHECK(moved.is_associative());
  }
}

TEST_CASE("decomposition h = h_s h_l = h_l' h_s") {
  const Ring q = Ring::rationals();
  const StabWFactors id = decompose(StabW::identity(q));
  CHECK(id.block == Mat3::identity(q));
  for (const auto& c : id.row_l) CHECK(c.is_zero());
  for (const auto& c : id.row_lprime) CHECK(c.is_zero());

  std::mt19937 rng(83);
  const Ring f7 = Ring::prime_field(7);
  for (int trial = 0; trial < 20; ++trial) {
    const StabW h = random_stabw(f7, rng);
    const StabWFactors f = decompose(h);
    CHECK(StabW::block(f.block) * StabW::unipotent(f.row_l) == h);
    CHECK(StabW::unipotent(f.row_lprime) * StabW::block(f.block) == h);
    // uniqueness of the block part: block(1,B) h_l has block B by construction
    CHECK(decompose(StabW::block(f.block) * StabW::unipotent(f.row_l)).block == f.block);
  }

  // symbolic block identity: p' B = p via the adjugate, no division
  const Ring zp = Ring::polynomials(
      {"p1", "p2", "p3", "b11", "b12", "b13", "b21", "b22", "b23", "b31", "b32", "b33"});
  Mat3 b(zp);
  const char* names[3][3] = {{"b11", "b12", "b13"}, {"b21", "b22", "b23"}, {"b31", "b32", "b33"}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) b.at(i, j) = Scalar::variable(zp, names[i][j]);
  std::array<Scalar, 3> p = {Scalar::variable(zp, "p1"), Scalar::variable(zp, "p2"),
                             Scalar::variable(zp, "p3")};
  const Mat3 adj = b.adjugate();
  const Scalar det = b.det();
  for (int j = 0; j < 3; ++j) {
    // (p adj(B)) B = det(B) p, column j
    Scalar lhs = Scalar::zero(zp);
    for (int k = 0; k < 3; ++k) {
      Scalar padj = Scalar::zero(zp);
      for (int i = 0; i < 3; ++i) padj += p[static_cast<std::size_t>(i)] * adj.at(i, k);
      lhs += padj * b.at(k, j);
    }
    CHECK(lhs == det * p[static_cast<std::size_t>(j)]);
  }
}

TEST_CASE("upsilon_inverse recovers the matrix") {
  std::mt19937 rng(89);
  const Ring f5 = Ring::prime_field(5);
  for (int trial = 0; trial < 20; ++trial) {
    const Mat3 b = random_mat3(f5, rng);
    const auto back = upsilon_inverse(upsilon(b));
    REQUIRE(back.has_value());
    CHECK(*back == b);
  }
  // an algebra that is not a specialised structure is rejected
  Algebra4 junk = Algebra4::even_exterior(f5);
  junk.c(1, 1, 0) = Scalar::one(f5);
  junk.c(1, 2, 3) = Scalar::from_int(f5, 2);
  CHECK(!upsilon_inverse(junk).has_value());
}
