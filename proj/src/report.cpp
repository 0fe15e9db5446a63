#include "odakit/report.hpp"

#include "json.hpp"

#include <sstream>

namespace odakit {

void RunReport::add_fact(std::string key, std::string value) {
    facts.emplace_back(std::move(key), std::move(value));
}

void RunReport::absorb(const AxiomReport& rep) {
    ok = ok && rep.ok();
    laws.insert(laws.end(), rep.laws.begin(), rep.laws.end());
}

void RunReport::absorb(const SuiteReport& rep) {
    add_fact("suite", rep.name);
    add_fact("seed", std::to_string(rep.seed));
    add_fact("trials", std::to_string(rep.trials));
    ok = ok && rep.ok();
    laws.insert(laws.end(), rep.properties.begin(), rep.properties.end());
}

void RunReport::absorb(const ExampleReport& rep) {
    add_fact("example " + rep.name, rep.headline);
    ok = ok && rep.ok();
    laws.insert(laws.end(), rep.checks.begin(), rep.checks.end());
}

namespace {

const char* verdict_of(const LawReport& law) {
    if (law.pass) return "PASS";
    return law.required ? "FAIL" : "NOTE";
}

} // namespace

std::string to_text(const RunReport& r, bool with_timing) {
    std::ostringstream out;
    out << "== odakit " << r.command << "\n";
    for (const auto& [key, value] : r.facts) out << key << ": " << value << "\n";
    for (const auto& law : r.laws) {
        out << verdict_of(law) << " " << law.name << " (" << law.checked << " checks";
        if (law.violations > 0) out << ", " << law.violations << " violations";
        out << ")";
        if (!law.witness.empty()) out << " witness: " << law.witness;
        if (!law.note.empty()) out << " [" << law.note << "]";
        out << "\n";
    }
    if (with_timing) {
        out << "elapsed: " << r.seconds << "s\n";
    }
    out << "RESULT: " << (r.ok ? "OK" : "FAIL") << "\n";
    return out.str();
}

std::string to_json_text(const RunReport& r, bool with_timing) {
    nlohmann::json j;
    j["command"] = r.command;
    j["ok"] = r.ok;
    auto facts = nlohmann::json::array();
    for (const auto& [key, value] : r.facts) facts.push_back({key, value});
    j["facts"] = std::move(facts);
    auto laws = nlohmann::json::array();
    for (const auto& law : r.laws) {
        nlohmann::json entry;
        entry["name"] = law.name;
        entry["pass"] = law.pass;
        entry["required"] = law.required;
        entry["checked"] = law.checked;
        entry["violations"] = law.violations;
        entry["witness"] = law.witness;
        entry["note"] = law.note;
        laws.push_back(std::move(entry));
    }
    j["laws"] = std::move(laws);
    if (with_timing) j["elapsed_seconds"] = r.seconds;
    return j.dump(2) + "\n";
}

} // namespace odakit
