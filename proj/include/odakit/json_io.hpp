#pragma once

#include "odakit/binrel.hpp"
#include "odakit/oda.hpp"
#include "odakit/poset.hpp"

#include "json.hpp"

#include <string>
#include <utility>
#include <vector>

namespace odakit {

// All loaders throw input_error with a human-readable message on missing
// files, malformed JSON, or schema violations.

nlohmann::json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const nlohmann::json& j);

// {"elements": ["a", ...], "leq": [[i, j], ...]}  reflexive pairs optional
PosetPtr poset_from_json(const nlohmann::json& j);
nlohmann::json poset_to_json(const FinitePoset& p);

// {"base": k, "pairs": [[u, v], ...]}
BinRel relation_from_json(const nlohmann::json& j);
nlohmann::json relation_to_json(const BinRel& r);

// {"base": k, "relations": [[[u, v], ...], ...]}
std::pair<int, std::vector<BinRel>> generators_from_json(const nlohmann::json& j);

// {"elements": [...], "leq": [[i, j], ...], "comp": [[...]], "conv": [...],
//  "dom": [...], "ran": [...], "zero": i, "id": i}
AbstractODA algebra_from_json(const nlohmann::json& j);
nlohmann::json algebra_to_json(const AbstractODA& a);

} // namespace odakit
