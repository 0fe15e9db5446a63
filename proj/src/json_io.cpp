#include "odakit/json_io.hpp"

#include "odakit/errors.hpp"

#include <fstream>
#include <utility>
#include <vector>

namespace odakit {

namespace {

[[noreturn]] void bad(const std::string& what) { throw input_error(what); }

void require(bool cond, const std::string& what) {
    if (!cond) bad(what);
}

int int_field(const nlohmann::json& j, const char* key) {
    require(j.contains(key), std::string("missing field '") + key + "'");
    require(j[key].is_number_integer(), std::string("field '") + key + "' must be an integer");
    return j[key].get<int>();
}

const nlohmann::json& array_field(const nlohmann::json& j, const char* key) {
    require(j.contains(key), std::string("missing field '") + key + "'");
    require(j[key].is_array(), std::string("field '") + key + "' must be an array");
    return j[key];
}

std::vector<std::pair<int, int>> pair_list(const nlohmann::json& arr, const char* what) {
    std::vector<std::pair<int, int>> out;
    out.reserve(arr.size());
    for (const auto& entry : arr) {
        require(entry.is_array() && entry.size() == 2 && entry[0].is_number_integer() &&
                    entry[1].is_number_integer(),
                std::string(what) + " entries must be [int, int] pairs");
        out.emplace_back(entry[0].get<int>(), entry[1].get<int>());
    }
    return out;
}

std::vector<int> int_list(const nlohmann::json& arr, const char* what, int n) {
    require(arr.is_array() && static_cast<int>(arr.size()) == n,
            std::string("field '") + what + "' must be an array of " + std::to_string(n) +
                " integers");
    std::vector<int> out;
    out.reserve(arr.size());
    for (const auto& entry : arr) {
        require(entry.is_number_integer(),
                std::string("field '") + what + "' must contain only integers");
        out.push_back(entry.get<int>());
    }
    return out;
}

std::vector<std::string> name_list(const nlohmann::json& arr) {
    std::vector<std::string> names;
    names.reserve(arr.size());
    for (const auto& entry : arr) {
        require(entry.is_string(), "'elements' must be an array of strings");
        names.push_back(entry.get<std::string>());
    }
    return names;
}

} // namespace

nlohmann::json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) bad("cannot open '" + path + "'");
    nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
    if (j.is_discarded()) bad("'" + path + "' is not valid JSON");
    return j;
}

void save_json_file(const std::string& path, const nlohmann::json& j) {
    std::ofstream out(path);
    if (!out) bad("cannot open '" + path + "' for writing");
    out << j.dump(2) << "\n";
    if (!out) bad("failed writing '" + path + "'");
}

PosetPtr poset_from_json(const nlohmann::json& j) {
    require(j.is_object(), "poset document must be a JSON object");
    auto names = name_list(array_field(j, "elements"));
    const int n = static_cast<int>(names.size());
    require(n > 0, "'elements' must be nonempty");
    auto pairs = pair_list(array_field(j, "leq"), "'leq'");
    std::vector<std::vector<bool>> leq(static_cast<std::size_t>(n),
                                       std::vector<bool>(static_cast<std::size_t>(n), false));
    for (auto [i, k] : pairs) {
        require(i >= 0 && i < n && k >= 0 && k < n, "'leq' index out of range");
        leq[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = true;
    }
    // close reflexively and transitively; the constructor still rejects
    // antisymmetry violations
    for (int i = 0; i < n; ++i) leq[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = true;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if (leq[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)])
                for (int m = 0; m < n; ++m)
                    if (leq[static_cast<std::size_t>(k)][static_cast<std::size_t>(m)])
                        leq[static_cast<std::size_t>(i)][static_cast<std::size_t>(m)] = true;
    std::vector<std::pair<int, int>> closed;
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            if (leq[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)]) closed.emplace_back(i, k);
    return FinitePoset::make(std::move(names), closed);
}

nlohmann::json poset_to_json(const FinitePoset& p) {
    nlohmann::json j;
    j["elements"] = p.names();
    auto leq = nlohmann::json::array();
    for (auto [i, k] : p.leq_pairs()) leq.push_back({i, k});
    j["leq"] = std::move(leq);
    return j;
}

BinRel relation_from_json(const nlohmann::json& j) {
    require(j.is_object(), "relation document must be a JSON object");
    const int base = int_field(j, "base");
    auto pairs = pair_list(array_field(j, "pairs"), "'pairs'");
    for (auto [u, v] : pairs)
        require(u >= 0 && u < base && v >= 0 && v < base, "'pairs' point out of range");
    return BinRel::from_pairs(base, pairs);
}

nlohmann::json relation_to_json(const BinRel& r) {
    nlohmann::json j;
    j["base"] = r.base();
    auto pairs = nlohmann::json::array();
    for (auto [u, v] : r.pairs()) pairs.push_back({u, v});
    j["pairs"] = std::move(pairs);
    return j;
}

std::pair<int, std::vector<BinRel>> generators_from_json(const nlohmann::json& j) {
    require(j.is_object(), "generator document must be a JSON object");
    const int base = int_field(j, "base");
    const auto& rels = array_field(j, "relations");
    std::vector<BinRel> out;
    out.reserve(rels.size());
    for (const auto& entry : rels) {
        require(entry.is_array(), "'relations' must be an array of pair lists");
        auto pairs = pair_list(entry, "'relations'");
        for (auto [u, v] : pairs)
            require(u >= 0 && u < base && v >= 0 && v < base, "'relations' point out of range");
        out.push_back(BinRel::from_pairs(base, pairs));
    }
    return {base, std::move(out)};
}

AbstractODA algebra_from_json(const nlohmann::json& j) {
    require(j.is_object(), "algebra document must be a JSON object");
    auto names = name_list(array_field(j, "elements"));
    const int n = static_cast<int>(names.size());
    require(n > 0, "'elements' must be nonempty");
    auto leq = pair_list(array_field(j, "leq"), "'leq'");
    const auto& comp_rows = array_field(j, "comp");
    require(static_cast<int>(comp_rows.size()) == n, "'comp' must have one row per element");
    std::vector<std::vector<int>> comp;
    comp.reserve(comp_rows.size());
    for (const auto& row : comp_rows) comp.push_back(int_list(row, "comp", n));
    auto conv = int_list(array_field(j, "conv"), "conv", n);
    auto dom = int_list(array_field(j, "dom"), "dom", n);
    auto ran = int_list(array_field(j, "ran"), "ran", n);
    const int zero = int_field(j, "zero");
    const int id = int_field(j, "id");
    return AbstractODA(std::move(names), leq, std::move(comp), std::move(conv), std::move(dom),
                       std::move(ran), zero, id);
}

nlohmann::json algebra_to_json(const AbstractODA& a) {
    nlohmann::json j;
    const int n = a.size();
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) names.push_back(a.name(i));
    j["elements"] = std::move(names);
    auto leq = nlohmann::json::array();
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            if (a.leq(i, k)) leq.push_back({i, k});
    j["leq"] = std::move(leq);
    auto comp = nlohmann::json::array();
    for (int i = 0; i < n; ++i) {
        auto row = nlohmann::json::array();
        for (int k = 0; k < n; ++k) row.push_back(a.comp(i, k));
        comp.push_back(std::move(row));
    }
    j["comp"] = std::move(comp);
    auto unary = [&](auto&& f) {
        auto arr = nlohmann::json::array();
        for (int i = 0; i < n; ++i) arr.push_back(f(i));
        return arr;
    };
    j["conv"] = unary([&](int i) { return a.conv(i); });
    j["dom"] = unary([&](int i) { return a.dom(i); });
    j["ran"] = unary([&](int i) { return a.ran(i); });
    j["zero"] = a.zero();
    j["id"] = a.id();
    return j;
}

} // namespace odakit
