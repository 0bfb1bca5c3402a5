#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "tqf/classify.hpp"
#include "tqf/json_io.hpp"
#include "tqf/lifting.hpp"
#include "tqf/parse.hpp"
#include "tqf/selftest.hpp"

namespace {

// Exit codes: 0 success, 1 verification failure, 2 usage/parse errors.
constexpr int kOk = 0;
constexpr int kVerificationFailure = 1;
constexpr int kUsageError = 2;

struct Output {
  std::string path;  // empty = stdout
  void emit(const nlohmann::json& j) const {
    const std::string text = j.dump(2) + "\n";
    if (path.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(path, std::ios::binary);
      if (!out) throw std::runtime_error("cannot open output file: " + path);
      out << text;
    }
  }
};

std::array<tqf::Scalar, 3> parse_triple(const std::string& text, const tqf::Ring& ring) {
  std::array<std::string, 3> parts;
  std::size_t pos = 0;
  for (int i = 0; i < 3; ++i) {
    std::size_t comma = text.find(',', pos);
    if (i < 2 && comma == std::string::npos)
      throw std::invalid_argument("expected three comma-separated scalars: " + text);
    if (i == 2) comma = text.size();
    parts[static_cast<std::size_t>(i)] = text.substr(pos, comma - pos);
    pos = comma + 1;
  }
  return {tqf::Scalar::parse(parts[0], ring), tqf::Scalar::parse(parts[1], ring),
          tqf::Scalar::parse(parts[2], ring)};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with ternary quadratic forms and their rank-4 "
               "even Clifford algebras"};
  app.require_subcommand(1);

  std::string ring_spec, form_text, form2_text, at_text, t_text, h_text, out_path;
  long section_k = 0;
  bool check_table = false, use_slow = false, json_flag = false;

  auto add_ring = [&](CLI::App* cmd) {
    cmd->add_option("--ring", ring_spec, "ring descriptor: Z, Q, Fp:<p>, F2k:<k>, ZPoly:<v1,...>")
        ->required();
  };
  auto add_out = [&](CLI::App* cmd) {
    cmd->add_option("--out", out_path, "write JSON to this path instead of stdout");
    cmd->add_flag("--json", json_flag, "emit JSON (the default and only format)");
  };

  CLI::App* eval = app.add_subcommand("eval", "evaluate a form at a vector");
  add_ring(eval);
  add_out(eval);
  eval->add_option("form", form_text, "form expression")->required();
  eval->add_option("--at", at_text, "vector, three comma-separated scalars")->required();

  CLI::App* semireg = app.add_subcommand("semiregular", "half-discriminant and semiregularity");
  add_ring(semireg);
  add_out(semireg);
  semireg->add_option("form", form_text, "form expression")->required();

  CLI::App* classify = app.add_subcommand("classify", "stratum of a form over a field");
  add_ring(classify);
  add_out(classify);
  classify->add_option("form", form_text, "form expression")->required();

  CLI::App* clifford = app.add_subcommand(
      "clifford", "structure constants of the algebra attached to a form");
  add_ring(clifford);
  add_out(clifford);
  clifford->add_option("form", form_text, "form expression")->required();
  clifford->add_option("--t", t_text, "translation point t1,t2,t3 (default 0,0,0)");
  clifford->add_flag("--check-table", check_table,
                     "cross-check the table against the Clifford-product construction");

  CLI::App* lift = app.add_subcommand("lift", "lift an algebra isomorphism to a similarity");
  add_ring(lift);
  add_out(lift);
  lift->add_option("form", form_text, "source form q")->required();
  lift->add_option("form2", form2_text, "target form q'")->required();
  lift->add_option("--map", h_text, "isomorphism matrix, 16 comma-separated scalars row-major")
      ->required();
  lift->add_option("--k", section_k, "section index k (multiplier det^(2k+1))");

  CLI::App* census = app.add_subcommand("census", "exhaustive orbit census over a small field");
  add_ring(census);
  add_out(census);
  census->add_flag("--slow", use_slow, "allow the larger gated fields (|F| = 3, 4)");

  CLI::App* selftest = app.add_subcommand("selftest", "run the symbolic identity suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kUsageError;
  }

  const Output output{out_path};
  try {
    if (eval->parsed()) {
      const tqf::Ring ring = tqf::Ring::parse(ring_spec);
      const tqf::TernaryForm q = tqf::parse_form(form_text, ring);
      const auto v = parse_triple(at_text, ring);
      output.emit({{"value", q.evaluate(tqf::Vec3(v[0], v[1], v[2])).to_string()}});
      return kOk;
    }
    if (semireg->parsed()) {
      const tqf::Ring ring = tqf::Ring::parse(ring_spec);
      const tqf::TernaryForm q = tqf::parse_form(form_text, ring);
      const tqf::Scalar p3 = tqf::half_discriminant(q);
      output.emit({{"P3", p3.to_string()}, {"semiregular", p3.is_unit()}});
      return kOk;
    }
    if (classify->parsed()) {
      const tqf::Ring ring = tqf::Ring::parse(ring_spec);
      const tqf::TernaryForm q = tqf::parse_form(form_text, ring);
      const tqf::Scalar p3 = tqf::half_discriminant(q);
      output.emit({{"stratum", static_cast<int>(tqf::stratum(q))},
                   {"P3", p3.to_string()},
                   {"semiregular", p3.is_unit()}});
      return kOk;
    }
    if (clifford->parsed()) {
      const tqf::Ring ring = tqf::Ring::parse(ring_spec);
      const tqf::TernaryForm q = tqf::parse_form(form_text, ring);
      tqf::ThetaPoint p = tqf::theta_point(q);
      if (!t_text.empty()) p.t = parse_triple(t_text, ring);
      const tqf::Mat3 b = tqf::theta_to_bilinear(p);
      const tqf::Algebra4 a = tqf::upsilon(b);
      if (check_table && !(a == tqf::clifford_product_oracle(b))) {
        std::cerr << "check-table: multiplication table disagrees with the Clifford product\n";
        return kVerificationFailure;
      }
      output.emit(tqf::algebra_to_json(a));
      return kOk;
    }
    if (lift->parsed()) {
      const tqf::Ring ring = tqf::Ring::parse(ring_spec);
      const tqf::TernaryForm q = tqf::parse_form(form_text, ring);
      const tqf::TernaryForm qp = tqf::parse_form(form2_text, ring);
      std::vector<std::string> cells;
      std::size_t pos = 0;
      while (pos <= h_text.size()) {
        std::size_t comma = h_text.find(',', pos);
        if (comma == std::string::npos) comma = h_text.size();
        cells.push_back(h_text.substr(pos, comma - pos));
        pos = comma + 1;
      }
      if (cells.size() != 16)
        throw std::invalid_argument("--map needs exactly 16 scalars, got " +
                                    std::to_string(cells.size()));
      tqf::Mat4 m(ring);
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
          m.at(i, j) = tqf::Scalar::parse(cells[static_cast<std::size_t>(4 * i + j)], ring);
      const tqf::StabW h(m);
      const tqf::Similarity s = tqf::section_s_plus(h, q, qp, section_k);
      nlohmann::json g = nlohmann::json::array();
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) g.push_back(s.g.at(i, j).to_string());
      output.emit({{"g", std::move(g)}, {"l", s.multiplier.to_string()}, {"verified", true}});
      return kOk;
    }
    if (census->parsed()) {
      const tqf::Ring ring = tqf::Ring::parse(ring_spec);
      if (!ring.is_finite())
        throw std::invalid_argument("census: ring must be a finite field");
      if (ring.cardinality() > 4)
        throw std::invalid_argument("census: field too large (gate: |F| <= 4)");
      if (ring.cardinality() > 2 && !use_slow)
        throw std::invalid_argument("census over |F| = " + std::to_string(ring.cardinality()) +
                                    " is gated behind --slow");
      output.emit(tqf::census_to_json(tqf::orbit_census(ring)));
      return kOk;
    }
    if (selftest->parsed()) {
      bool all = true;
      for (const auto& check : tqf::run_symbolic_selftest()) {
        std::cout << (check.passed ? "PASS" : "FAIL") << "  " << check.name << "\n";
        all = all && check.passed;
      }
      return all ? kOk : kVerificationFailure;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kVerificationFailure;
  }
  return kUsageError;
}
