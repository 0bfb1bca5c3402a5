#include "tqf/selftest.hpp"

#include "tqf/clifford.hpp"
#include "tqf/lifting.hpp"

namespace tqf {

namespace {

Mat3 generic_bilinear(const Ring& r) {
  Mat3 b(r);
  const char* names[3][3] = {{"b11", "b12", "b13"}, {"b21", "b22", "b23"}, {"b31", "b32", "b33"}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) b.at(i, j) = Scalar::variable(r, names[i][j]);
  return b;
}

ThetaPoint generic_theta_point(const Ring& r) {
  TernaryForm q(Scalar::variable(r, "l1"), Scalar::variable(r, "l2"), Scalar::variable(r, "l3"),
                Scalar::variable(r, "l12"), Scalar::variable(r, "l13"),
                Scalar::variable(r, "l23"));
  return ThetaPoint{q, {Scalar::variable(r, "t1"), Scalar::variable(r, "t2"),
                        Scalar::variable(r, "t3")}};
}

Mat3 generic_matrix(const Ring& r) {
  Mat3 g(r);
  const char* names[3][3] = {{"g11", "g12", "g13"}, {"g21", "g22", "g23"}, {"g31", "g32", "g33"}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) g.at(i, j) = Scalar::variable(r, names[i][j]);
  return g;
}

}  // namespace

std::vector<CheckResult> run_symbolic_selftest() {
  std::vector<CheckResult> results;
  const Ring rb =
      Ring::polynomials({"b11", "b12", "b13", "b21", "b22", "b23", "b31", "b32", "b33"});
  const Mat3 b = generic_bilinear(rb);
  const Algebra4 table = upsilon(b);

  results.push_back({"upsilon equals clifford product oracle (generic B)",
                     table == clifford_product_oracle(b)});
  results.push_back({"upsilon(B) is unital (generic B)", table.is_unital()});
  results.push_back({"upsilon(B) is associative (generic B)", table.is_associative()});
  results.push_back({"opposite(upsilon(B)) = upsilon(-B^t) (generic B)",
                     opposite_involution_check(b)});

  const Ring rq = Ring::polynomials({"l1", "l2", "l3", "l12", "l13", "l23", "t1", "t2", "t3"});
  const ThetaPoint p = generic_theta_point(rq);
  results.push_back({"theta(q,t) = upsilon(theta_to_bilinear(q,t)) (generic)",
                     theta(p) == upsilon(theta_to_bilinear(p))});
  {
    const ThetaPoint back = bilinear_to_theta(theta_to_bilinear(p));
    results.push_back(
        {"bilinear_to_theta . theta_to_bilinear = id (generic)", back.q == p.q && back.t == p.t});
  }
  {
    const Ring rg =
        Ring::polynomials({"g11", "g12", "g13", "g21", "g22", "g23", "g31", "g32", "g33"});
    const Mat3 g = generic_matrix(rg);
    const Scalar d = g.det();
    results.push_back({"det(Lambda^2(g)) = det(g)^2 (generic g)", lambda2(g).det() == d * d});
  }
  return results;
}

}  // namespace tqf
