#include "doctest.h"

#include "json.hpp"
#include "odakit/errors.hpp"
#include "odakit/json_io.hpp"
#include "odakit/oda.hpp"
#include "odakit/report.hpp"

#include <cstdio>
#include <fstream>
#include <string>

using namespace odakit;

namespace {

LawReport make_law(std::string name, bool pass, bool required, long long checked,
                   long long violations = 0, std::string witness = "", std::string note = "") {
    LawReport law;
    law.name = std::move(name);
    law.pass = pass;
    law.required = required;
    law.checked = checked;
    law.violations = violations;
    law.witness = std::move(witness);
    law.note = std::move(note);
    return law;
}

} // namespace

TEST_SUITE("io") {

TEST_CASE("poset files may give a partial order sparsely") {
    nlohmann::json j;
    j["elements"] = {"a", "b", "c"};
    j["leq"] = {{0, 1}, {1, 2}}; // no reflexive or transitive pairs provided
    auto p = poset_from_json(j);
    CHECK(p->leq(0, 0));
    CHECK(p->leq(0, 2)); // transitively closed on load
    CHECK_FALSE(p->leq(2, 0));
    auto back = poset_from_json(poset_to_json(*p));
    CHECK(back->same_structure(*p));
    // a cycle cannot be repaired into an order
    j["leq"] = {{0, 1}, {1, 0}};
    CHECK_THROWS_AS(poset_from_json(j), input_error);
}

TEST_CASE("malformed poset documents are rejected") {
    CHECK_THROWS_AS(poset_from_json(nlohmann::json::parse(R"({"leq": []})")), input_error);
    CHECK_THROWS_AS(poset_from_json(nlohmann::json::parse(R"({"elements": "x", "leq": []})")),
                    input_error);
    CHECK_THROWS_AS(
        poset_from_json(nlohmann::json::parse(R"({"elements": ["a"], "leq": [[0, 4]]})")),
        input_error);
    CHECK_THROWS_AS(
        poset_from_json(nlohmann::json::parse(R"({"elements": ["a"], "leq": [[0]]})")),
        input_error);
}

TEST_CASE("relations and generator lists round trip") {
    auto r = BinRel::from_pairs(3, {{0, 2}, {1, 1}});
    auto back = relation_from_json(relation_to_json(r));
    CHECK(back == r);
    CHECK(back.base() == 3);

    nlohmann::json gens;
    gens["base"] = 2;
    gens["relations"] = {{{0, 1}}, {{1, 0}, {0, 0}}};
    auto [base, rels] = generators_from_json(gens);
    CHECK(base == 2);
    REQUIRE(rels.size() == 2);
    CHECK(rels[0] == BinRel::from_pairs(2, {{0, 1}}));
    CHECK(rels[1] == BinRel::from_pairs(2, {{0, 0}, {1, 0}}));

    gens["relations"] = {{{0, 5}}};
    CHECK_THROWS_AS(generators_from_json(gens), input_error);
    gens["base"] = 0;
    CHECK_THROWS_AS(generators_from_json(gens), input_error);
}

TEST_CASE("algebras round trip through their file form") {
    auto a = full_proper_oda(1);
    auto j = algebra_to_json(a);
    auto b = algebra_from_json(j);
    CHECK(algebra_to_json(b) == j);
    CHECK(b.size() == a.size());
    CHECK(b.zero() == a.zero());
    CHECK(b.id() == a.id());
    CHECK(check_axioms(b).ok());

    auto broken = j;
    broken.erase("comp");
    CHECK_THROWS_AS(algebra_from_json(broken), input_error);
    broken = j;
    broken["zero"] = 99;
    CHECK_THROWS_AS(algebra_from_json(broken), input_error);
}

TEST_CASE("file loading distinguishes missing files from bad contents") {
    CHECK_THROWS_AS(load_json_file("/tmp/odakit-no-such-file.json"), input_error);
    const std::string path = "/tmp/odakit-io-test-garbage.json";
    {
        std::ofstream out(path);
        out << "{ not json";
    }
    CHECK_THROWS_AS(load_json_file(path), input_error);
    {
        std::ofstream out(path);
        out << R"({"base": 2, "pairs": [[0, 1]]})";
    }
    auto j = load_json_file(path);
    CHECK(relation_from_json(j) == BinRel::from_pairs(2, {{0, 1}}));
    std::remove(path.c_str());
}

TEST_CASE("run reports render to text with one verdict line per law") {
    RunReport r;
    r.command = "demo";
    r.add_fact("elements", "16");
    auto good = make_law("good-law", true, true, 10);
    auto bad = make_law("bad-law", false, true, 10, 2, "at x");
    auto note = make_law("noted-law", false, false, 5, 1, "at y", "reported only");
    r.laws = {good, bad, note};
    r.ok = false;
    auto text = to_text(r, false);
    CHECK(text.find("== odakit demo\n") == 0);
    CHECK(text.find("elements: 16\n") != std::string::npos);
    CHECK(text.find("PASS good-law (10 checks)\n") != std::string::npos);
    CHECK(text.find("FAIL bad-law (10 checks, 2 violations) witness: at x\n") !=
          std::string::npos);
    CHECK(text.find("NOTE noted-law (5 checks, 1 violations) witness: at y [reported only]\n") !=
          std::string::npos);
    CHECK(text.find("elapsed:") == std::string::npos);
    CHECK(text.rfind("RESULT: FAIL\n") == text.size() - 13);
    auto timed = to_text(r, true);
    CHECK(timed.find("elapsed:") != std::string::npos);
}

TEST_CASE("run reports render to json deterministically") {
    RunReport r;
    r.command = "demo";
    r.add_fact("k", "v");
    r.laws = {make_law("law", true, true, 3)};
    r.ok = true;
    auto text = to_json_text(r, false);
    CHECK(text == to_json_text(r, false));
    auto j = nlohmann::json::parse(text);
    CHECK(j["command"] == "demo");
    CHECK(j["ok"] == true);
    CHECK(j["facts"][0][0] == "k");
    CHECK(j["laws"][0]["name"] == "law");
    CHECK(j["laws"][0]["checked"] == 3);
    CHECK_FALSE(j.contains("elapsed_seconds"));
    auto timed = nlohmann::json::parse(to_json_text(r, true));
    CHECK(timed.contains("elapsed_seconds"));
}

TEST_CASE("absorbing sub-reports folds their verdicts into the run") {
    RunReport r;
    r.command = "x";
    AxiomReport ax;
    ax.laws.push_back(make_law("fails", false, true, 1, 1, "w"));
    r.absorb(ax);
    CHECK_FALSE(r.ok);
    CHECK(r.laws.size() == 1);

    RunReport s;
    s.command = "y";
    SuiteReport suite;
    suite.name = "demo-suite";
    suite.seed = 9;
    suite.trials = 4;
    suite.properties.push_back(make_law("holds", true, true, 4));
    s.absorb(suite);
    CHECK(s.ok);
    bool saw_seed = false;
    for (const auto& [k, v] : s.facts) saw_seed = saw_seed || (k == "seed" && v == "9");
    CHECK(saw_seed);
}

} // TEST_SUITE
