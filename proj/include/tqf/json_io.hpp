#ifndef TQF_JSON_IO_HPP
#define TQF_JSON_IO_HPP

#include <json.hpp>

#include "tqf/algebra4.hpp"
#include "tqf/classify.hpp"

namespace tqf {

/// {"ring": ..., "basis": ["w","e1","e2","e3"], "c": [[[...4...]x4]x4]}
/// with scalars as strings, index order c[i][j][k].
nlohmann::json algebra_to_json(const Algebra4& a);

nlohmann::json census_to_json(const CensusReport& report);

}  // namespace tqf

#endif
