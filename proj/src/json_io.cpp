#include "tqf/json_io.hpp"

#include "tqf/parse.hpp"

namespace tqf {

nlohmann::json algebra_to_json(const Algebra4& a) {
  nlohmann::json cs = nlohmann::json::array();
  for (int i = 0; i < 4; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < 4; ++j) {
      nlohmann::json cell = nlohmann::json::array();
      for (int k = 0; k < 4; ++k) cell.push_back(a.c(i, j, k).to_string());
      row.push_back(std::move(cell));
    }
    cs.push_back(std::move(row));
  }
  return nlohmann::json{{"ring", a.ring().to_string()},
                        {"basis", {"w", "e1", "e2", "e3"}},
                        {"c", std::move(cs)}};
}

nlohmann::json census_to_json(const CensusReport& report) {
  const bool with_classes = report.algebra_iso_classes > 0;
  nlohmann::json orbits = nlohmann::json::array();
  for (const auto& orbit : report.orbits) {
    nlohmann::json o{{"representative", form_to_string(orbit.rep)},
                     {"size", orbit.size},
                     {"stratum", static_cast<int>(orbit.stratum)}};
    if (with_classes) o["iso_class"] = orbit.iso_class;
    orbits.push_back(std::move(o));
  }
  nlohmann::json strata;
  for (int s = 1; s <= 4; ++s)
    strata[std::to_string(s)] = report.stratum_form_counts[static_cast<std::size_t>(s - 1)];
  return nlohmann::json{{"ring", report.ring.to_string()},
                        {"similarity_classes", report.similarity_classes},
                        {"algebra_iso_classes", report.algebra_iso_classes},
                        {"bijection_verified", report.bijection_verified},
                        {"stratum_form_counts", std::move(strata)},
                        {"orbits", std::move(orbits)}};
}

}  // namespace tqf
