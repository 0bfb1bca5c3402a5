#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "tqf/classify.hpp"
#include "tqf/json_io.hpp"
#include "tqf/lifting.hpp"
#include "tqf/parse.hpp"
#include "tqf/selftest.hpp"

namespace py = pybind11;
using nlohmann::json;

namespace {

tqf::Ring ring_of(const std::string& spec) { return tqf::Ring::parse(spec); }

tqf::TernaryForm form_of(const std::string& spec, const std::string& text) {
  return tqf::parse_form(text, ring_of(spec));
}

std::array<tqf::Scalar, 3> triple_of(const tqf::Ring& r, const std::vector<std::string>& t) {
  if (t.size() != 3) throw std::invalid_argument("expected three scalars");
  return {tqf::Scalar::parse(t[0], r), tqf::Scalar::parse(t[1], r),
          tqf::Scalar::parse(t[2], r)};
}

tqf::Mat3 mat3_of(const tqf::Ring& r, const std::vector<std::string>& cells) {
  if (cells.size() != 9) throw std::invalid_argument("expected nine scalars row-major");
  std::array<tqf::Scalar, 9> entries = {
      tqf::Scalar::parse(cells[0], r), tqf::Scalar::parse(cells[1], r),
      tqf::Scalar::parse(cells[2], r), tqf::Scalar::parse(cells[3], r),
      tqf::Scalar::parse(cells[4], r), tqf::Scalar::parse(cells[5], r),
      tqf::Scalar::parse(cells[6], r), tqf::Scalar::parse(cells[7], r),
      tqf::Scalar::parse(cells[8], r)};
  return tqf::Mat3::from_rows(entries);
}

std::vector<std::string> mat3_strings(const tqf::Mat3& m) {
  std::vector<std::string> out;
  out.reserve(9);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out.push_back(m.at(i, j).to_string());
  return out;
}

std::string evaluate(const std::string& ring, const std::string& form,
                     const std::vector<std::string>& at) {
  const tqf::Ring r = ring_of(ring);
  const auto v = triple_of(r, at);
  return form_of(ring, form).evaluate(tqf::Vec3(v[0], v[1], v[2])).to_string();
}

std::string half_discriminant(const std::string& ring, const std::string& form) {
  return tqf::half_discriminant(form_of(ring, form)).to_string();
}

bool is_semiregular(const std::string& ring, const std::string& form) {
  return tqf::is_semiregular(form_of(ring, form));
}

std::string classify(const std::string& ring, const std::string& form) {
  const tqf::TernaryForm q = form_of(ring, form);
  const tqf::Scalar p3 = tqf::half_discriminant(q);
  return json{{"stratum", static_cast<int>(tqf::stratum(q))},
              {"P3", p3.to_string()},
              {"semiregular", p3.is_unit()}}
      .dump();
}

std::string clifford(const std::string& ring, const std::string& form,
                     const std::vector<std::string>& t, bool check_table) {
  const tqf::Ring r = ring_of(ring);
  tqf::ThetaPoint p = tqf::theta_point(tqf::parse_form(form, r));
  if (!t.empty()) p.t = triple_of(r, t);
  const tqf::Mat3 b = tqf::theta_to_bilinear(p);
  const tqf::Algebra4 a = tqf::upsilon(b);
  if (check_table && !(a == tqf::clifford_product_oracle(b)))
    throw std::domain_error("multiplication table disagrees with the Clifford product");
  return tqf::algebra_to_json(a).dump();
}

std::string census(const std::string& ring, bool with_algebra_classes) {
  return tqf::census_to_json(tqf::orbit_census(ring_of(ring), with_algebra_classes)).dump();
}

std::vector<std::string> normalize(const std::string& ring, const std::string& form) {
  return mat3_strings(tqf::normalize_semiregular(form_of(ring, form)));
}

std::string act_on_form(const std::string& ring, const std::vector<std::string>& g,
                        const std::string& form) {
  const tqf::Ring r = ring_of(ring);
  return tqf::form_to_string(tqf::act(mat3_of(r, g), tqf::parse_form(form, r)));
}

std::string lift(const std::string& ring, const std::string& q_text, const std::string& qp_text,
                 const std::vector<std::string>& map16, long k) {
  const tqf::Ring r = ring_of(ring);
  if (map16.size() != 16) throw std::invalid_argument("expected sixteen scalars row-major");
  tqf::Mat4 m(r);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      m.at(i, j) = tqf::Scalar::parse(map16[static_cast<std::size_t>(4 * i + j)], r);
  const tqf::Similarity s = tqf::section_s_plus(
      tqf::StabW(m), tqf::parse_form(q_text, r), tqf::parse_form(qp_text, r), k);
  return json{{"g", mat3_strings(s.g)}, {"l", s.multiplier.to_string()}, {"verified", true}}
      .dump();
}

py::object similar(const std::string& ring, const std::string& q_text,
                   const std::string& qp_text) {
  const auto w = tqf::similar_bruteforce(form_of(ring, q_text), form_of(ring, qp_text));
  if (!w) return py::none();
  return py::str(
      json{{"g", mat3_strings(w->g)}, {"multiplier", w->multiplier.to_string()}}.dump());
}

py::object azumaya_uniqueness(const std::string& ring) {
  const auto r = tqf::azumaya_uniqueness_check(ring_of(ring));
  if (!r) return py::none();
  return py::bool_(*r);
}

std::vector<std::pair<std::string, bool>> selftest() {
  std::vector<std::pair<std::string, bool>> out;
  for (const auto& check : tqf::run_symbolic_selftest()) out.push_back({check.name, check.passed});
  return out;
}

}  // namespace

PYBIND11_MODULE(_tqf, m) {
  m.doc() = "Exact computations with ternary quadratic forms and their rank-4 even "
            "Clifford algebras";

  m.def("evaluate", &evaluate, py::arg("ring"), py::arg("form"), py::arg("at"),
        "Evaluate a form at a vector of three scalar literals.");
  m.def("half_discriminant", &half_discriminant, py::arg("ring"), py::arg("form"),
        "The half-discriminant P3 as a string.");
  m.def("is_semiregular", &is_semiregular, py::arg("ring"), py::arg("form"));
  m.def("classify_json", &classify, py::arg("ring"), py::arg("form"),
        "Stratum, P3 and semiregularity as a JSON string (fields only).");
  m.def("clifford_json", &clifford, py::arg("ring"), py::arg("form"),
        py::arg("t") = std::vector<std::string>{}, py::arg("check_table") = false,
        "Structure constants of the algebra at (q, t) as a JSON string.");
  m.def("census_json", &census, py::arg("ring"), py::arg("with_algebra_classes") = true,
        "Exhaustive orbit census over a finite field with |F| <= 4, as JSON.");
  m.def("normalize", &normalize, py::arg("ring"), py::arg("form"),
        "Row-major g with act(g, q) = x1*x2 + x3^2; raises if q is not "
        "semiregular or a square root is missing.");
  m.def("act", &act_on_form, py::arg("ring"), py::arg("g"), py::arg("form"),
        "(g.q)(v) = q(g^-1 v) for a row-major invertible matrix g.");
  m.def("lift_json", &lift, py::arg("ring"), py::arg("q"), py::arg("qp"), py::arg("map"),
        py::arg("k") = 0,
        "Lift an algebra isomorphism (16 scalars row-major) to a similarity.");
  m.def("similar_json", &similar, py::arg("ring"), py::arg("q"), py::arg("qp"),
        "First similarity witness over a finite field, or None.");
  m.def("azumaya_uniqueness", &azumaya_uniqueness, py::arg("ring"),
        "True/False over finite 2-perfect fields, None when not applicable.");
  m.def("selftest", &selftest, "Run the symbolic identity suite; (name, passed) pairs.");
}
