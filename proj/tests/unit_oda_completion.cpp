#include "doctest.h"

#include "odakit/closure.hpp"
#include "odakit/errors.hpp"
#include "odakit/expansion.hpp"
#include "odakit/oda.hpp"
#include "odakit/oda_completion.hpp"

#include <map>
#include <string>
#include <vector>

using namespace odakit;

namespace {

// map an up-set of the proper algebra's element order to the relation level
RelUpSet to_rel(const AbstractODA& a, const UpSet& s) {
    std::vector<BinRel> gens;
    for (int m : s.minimals()) gens.push_back((*a.relations())[static_cast<std::size_t>(m)]);
    return RelUpSet(*a.base(), gens);
}

UpSet from_rel(const AbstractODA& a, const RelUpSet& x) {
    std::vector<int> gens;
    for (const auto& r : x.minimals())
        for (int i = 0; i < a.size(); ++i)
            if ((*a.relations())[static_cast<std::size_t>(i)] == r) gens.push_back(i);
    return UpSet(a.poset(), gens);
}

} // namespace

TEST_SUITE("oda-completion") {

TEST_CASE("golden counts on the base-2 algebra") {
    auto a = full_proper_oda(2);
    CHECK(all_up_sets(a.poset()).size() == 168);
    CHECK(closed_sets(a).size() == 35);
    // base 1: up-sets {}, {id}, everything are all closed
    auto a1 = full_proper_oda(1);
    CHECK(all_up_sets(a1.poset()).size() == 3);
    CHECK(closed_sets(a1).size() == 3);
}

TEST_CASE("relation-level and algebra-level engines agree on base 2") {
    auto a = full_proper_oda(2);
    auto ups = all_up_sets(a.poset());
    for (const auto& s : ups) {
        auto r = to_rel(a, s);
        CHECK(alg_is_closed(a, s) == rel_is_closed(r));
        CHECK(from_rel(a, rel_closure(r)) == alg_closure(a, s));
        CHECK(from_rel(a, rel_dom_c(r)) == alg_dom_c(a, s));
        CHECK(from_rel(a, rel_ran_c(r)) == alg_ran_c(a, s));
        CHECK(from_rel(a, rel_conv_c(r)) == alg_conv_c(a, s));
    }
    auto closed = closed_sets(a);
    for (const auto& x : closed)
        for (const auto& y : closed)
            CHECK(from_rel(a, rel_comp_c(to_rel(a, x), to_rel(a, y))) == alg_comp_c(a, x, y));
}

TEST_CASE("closure basics at the relation level") {
    // the up-set of the empty relation is everything; its antichain is {zero}
    auto zero_up = RelUpSet::zero_up(2);
    CHECK(zero_up.minimals().size() == 1);
    CHECK(zero_up.member(BinRel::full(2)));
    CHECK(rel_is_closed(zero_up));
    // minimalization drops dominated generators
    RelUpSet both(2, {BinRel::identity(2), BinRel::full(2)});
    CHECK(both.minimals() == std::vector<BinRel>{BinRel::identity(2)});
    // principal up-sets of a proper algebra are closed
    for (int mask = 0; mask < 16; ++mask) {
        BinRel r(2);
        for (int u = 0; u < 2; ++u)
            for (int v = 0; v < 2; ++v)
                if ((mask >> (u * 2 + v)) & 1) r.set(u, v);
        CHECK(rel_is_closed(RelUpSet::principal(r)));
    }
    // the empty up-set is closed and absorbing
    auto empty = RelUpSet::empty(2);
    CHECK(rel_is_closed(empty));
    CHECK(rel_comp_c(empty, zero_up).is_empty());
    CHECK(rel_dom_c(empty).is_empty());
    CHECK(rel_conv_c(empty).is_empty());
}

TEST_CASE("closure traces record every growing iterate") {
    // {(a,b)} with {(c,d)} on base 4 compose to zero through mismatched
    // domain and range, so the closure collapses onto the whole algebra
    auto x = BinRel::from_pairs(4, {{0, 1}});
    auto y = BinRel::from_pairs(4, {{2, 3}});
    RelClosureTrace trace;
    auto closed = rel_closure(RelUpSet(4, {x, y}), &trace);
    CHECK(closed == RelUpSet::zero_up(4));
    REQUIRE(trace.steps.size() >= 2);
    CHECK(trace.steps.front() == RelUpSet(4, {x, y}));
    CHECK(trace.steps.back() == closed);
    for (std::size_t i = 0; i + 1 < trace.steps.size(); ++i) {
        CHECK(trace.steps[i].subset_of(trace.steps[i + 1]));
        CHECK(trace.steps[i] != trace.steps[i + 1]);
    }
    // an already closed input records a single step
    RelClosureTrace flat;
    rel_closure(RelUpSet::principal(BinRel::identity(4)), &flat);
    CHECK(flat.steps.size() == 1);
}

TEST_CASE("antichain guard stops runaway closures") {
    auto x = BinRel::from_pairs(4, {{0, 1}, {2, 3}});
    auto y = BinRel::from_pairs(4, {{0, 3}, {2, 1}});
    Guards tight;
    tight.antichain = 1;
    CHECK_THROWS_AS(rel_closure(RelUpSet(4, {x, y}), nullptr, tight), resource_error);
}

TEST_CASE("completion tables index the closed family") {
    auto a = full_proper_oda(2);
    auto t = completion_tables(a);
    REQUIRE(t.size() == 35);
    CHECK(t.empty_idx == t.index_of(alg_empty(a)));
    CHECK(t.zero_idx == t.index_of(alg_zero_up(a)));
    CHECK(t.id_idx == t.index_of(alg_id_up(a)));
    // every principal up-set of a genuine algebra is closed, hence indexed
    for (int i = 0; i < a.size(); ++i)
        CHECK(t.index_of(UpSet::principal(a.poset(), i)) >= 0);
    // order is reverse inclusion; zero-up is least, empty is greatest
    for (int i = 0; i < t.size(); ++i) {
        CHECK(t.leq(t.zero_idx, i));
        CHECK(t.leq(i, t.empty_idx));
        for (int j = 0; j < t.size(); ++j)
            CHECK(t.leq(i, j) == t.closed[static_cast<std::size_t>(i)].superset_of(
                                     t.closed[static_cast<std::size_t>(j)]));
    }
    // tables agree with the direct lifted operations
    for (int i = 0; i < t.size(); ++i) {
        const auto& x = t.closed[static_cast<std::size_t>(i)];
        CHECK(t.dom[static_cast<std::size_t>(i)] == t.index_of(alg_dom_c(a, x)));
        CHECK(t.conv[static_cast<std::size_t>(i)] == t.index_of(alg_conv_c(a, x)));
    }
}

TEST_CASE("completion law report on base 2: required laws hold, known laws fail") {
    auto a = full_proper_oda(2);
    auto rep = check_completion_axioms(a);
    CHECK(rep.ok());
    for (const auto& law : rep.laws)
        if (law.required) {
            INFO(law.name, ": ", law.witness);
            CHECK(law.pass);
        }
    const std::map<std::string, long long> expected_violations = {
        {"D2", 14},        {"D2-dual", 14},      {"D6", 54},           {"D6-dual", 54},
        {"D8", 54},        {"D8-dual", 54},      {"comp-assoc", 972},  {"dom-exchange", 54},
        {"ran-exchange", 54}};
    for (const auto& [name, count] : expected_violations) {
        const auto* law = rep.find(name);
        REQUIRE(law != nullptr);
        CHECK_FALSE(law->required);
        CHECK_FALSE(law->pass);
        CHECK(law->violations == count);
        CHECK_FALSE(law->witness.empty());
    }
    const auto* lifted = rep.find("closed-under-lifted-ops");
    REQUIRE(lifted != nullptr);
    CHECK(lifted->pass);
    CHECK(lifted->checked == 35 * 35 + 3 * 35);
    for (const char* name : {"empty-annihilator", "closure-conv-commute", "union-lemma"}) {
        const auto* law = rep.find(name);
        REQUIRE(law != nullptr);
        CHECK(law->pass);
        CHECK(law->required);
    }
}

TEST_CASE("the completion gate rejects algebras that fail the base axioms") {
    auto a = full_proper_oda(1);
    // break id-identity: id;id = zero
    std::vector<std::vector<int>> comp = {{a.comp(0, 0), a.comp(0, 1)},
                                          {a.comp(1, 0), a.comp(1, 1)}};
    comp[static_cast<std::size_t>(a.id())][static_cast<std::size_t>(a.id())] = a.zero();
    AbstractODA broken({a.name(0), a.name(1)}, a.poset()->leq_pairs(), comp,
                       {a.conv(0), a.conv(1)}, {a.dom(0), a.dom(1)}, {a.ran(0), a.ran(1)},
                       a.zero(), a.id());
    CHECK_THROWS_AS(check_completion_axioms(broken), input_error);
    CHECK_THROWS_AS(partial_star_explore(broken), input_error);
}

TEST_CASE("counterexample reproductions hold and unknown names are rejected") {
    for (const auto& name : example_names()) {
        auto rep = reproduce_example(name);
        CHECK(rep.name == name);
        CHECK_FALSE(rep.headline.empty());
        for (const auto& check : rep.checks) {
            INFO(name, "/", check.name, ": ", check.witness);
            CHECK(check.pass);
        }
    }
    CHECK_THROWS_AS(reproduce_example("bogus"), input_error);
}

TEST_CASE("partial composition scan finds no associativity mismatch on base 2") {
    auto a = full_proper_oda(2);
    auto stats = partial_star_explore(a);
    CHECK(stats.triples == 35LL * 35 * 35);
    CHECK(stats.both_defined > 0);
    CHECK(stats.definedness_mismatches == 0);
    CHECK(stats.value_mismatches == 0);
    CHECK(stats.exhausted);
    CHECK(stats.first_witness.empty());
    auto cut = partial_star_explore(a, 100);
    CHECK(cut.triples == 100);
    CHECK_FALSE(cut.exhausted);
}

TEST_CASE("the ODA closure drives the generic lifting machinery to refute D2") {
    auto a = full_proper_oda(2);
    std::vector<PosetExpansion::Op> ops;
    PosetExpansion::Op comp{"comp", 2, {}};
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < a.size(); ++j) comp.table.push_back(a.comp(i, j));
    PosetExpansion::Op conv{"conv", 1, {}}, dom{"dom", 1, {}};
    for (int i = 0; i < a.size(); ++i) {
        conv.table.push_back(a.conv(i));
        dom.table.push_back(a.dom(i));
    }
    PosetExpansion m(a.poset(), {comp, conv, dom});
    ClosureOperator gamma(a.poset(), [a](const UpSet& s) { return alg_closure(a, s); },
                          "oda-closure");
    CHECK(is_standard_closure(gamma).ok);
    CompletedExpansion completed(m, gamma);
    CHECK(completed.closed().size() == 35);
    // the lifted composition agrees with the dedicated engine
    auto closed = closed_sets(a);
    const int comp_op = m.op_index("comp");
    for (std::size_t i = 0; i < closed.size(); i += 7)
        for (std::size_t j = 0; j < closed.size(); j += 5)
            CHECK(completed.lift_apply(comp_op, {closed[i], closed[j]}) ==
                  alg_comp_c(a, closed[i], closed[j]));
    const std::vector<std::string> vars = {"x"};
    auto phi = Term::parse("(dom x)", vars, m.signature());
    auto psi = Term::parse("(comp x (conv x))", vars, m.signature());
    CHECK(holds_inequality(m, phi, psi).holds);          // D2 holds on relations
    auto lifted = holds_inequality(completed, phi, psi); // but fails in the completion
    CHECK_FALSE(lifted.holds);
    CHECK_FALSE(lifted.witness.empty());
}

} // TEST_SUITE
