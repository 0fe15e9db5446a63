#include "doctest.h"

#include "odakit/closure.hpp"
#include "odakit/completion.hpp"
#include "odakit/errors.hpp"
#include "odakit/poset.hpp"

#include <algorithm>
#include <string>
#include <vector>

using namespace odakit;

namespace {

PosetPtr chain(int n) {
    std::vector<std::string> names;
    std::vector<std::pair<int, int>> leq;
    for (int i = 0; i < n; ++i) {
        names.push_back("c" + std::to_string(i));
        for (int j = i; j < n; ++j) leq.emplace_back(i, j);
    }
    return FinitePoset::make(names, leq);
}

PosetPtr lo_hi() { return FinitePoset::make({"lo", "hi"}, {{0, 0}, {1, 1}, {0, 1}}); }

} // namespace

TEST_SUITE("completion") {

TEST_CASE("map construction validates shapes") {
    auto p = chain(2);
    auto q = chain(3);
    CHECK_THROWS_AS(CompletionMap(p, q, {0}), input_error);    // wrong length
    CHECK_THROWS_AS(CompletionMap(p, q, {0, 7}), input_error); // out of range
}

TEST_CASE("meet-completion checks embedding, completeness and meet-density") {
    auto p = chain(2);
    auto q = chain(3);
    // c2 is the empty meet (the target top), c1 = e(c1), c0 = e(c0)
    CHECK(is_meet_completion(CompletionMap(p, q, {0, 1})).ok);
    // with images {c0, c2} the middle element is the meet of nothing but {c2}
    CHECK_FALSE(is_meet_completion(CompletionMap(p, q, {0, 2})).ok);
    // order collapse is not an embedding
    auto anti = FinitePoset::make({"x", "y"}, {{0, 0}, {1, 1}});
    CHECK_FALSE(is_meet_completion(CompletionMap(anti, q, {0, 1})).ok);
    // incomplete targets are rejected outright
    CHECK_THROWS_AS(is_meet_completion(CompletionMap(anti, anti, {0, 1})), input_error);
}

TEST_CASE("one-point source into a two-chain: top is the empty meet") {
    auto p = FinitePoset::make({"p"}, {{0, 0}});
    CompletionMap e(p, lo_hi(), {0});
    CHECK(is_meet_completion(e).ok);
    CHECK_FALSE(source_top_preserved(e)); // p's top lands below the target top
}

TEST_CASE("power map names and orders tuples componentwise") {
    auto p = FinitePoset::make({"p"}, {{0, 0}});
    CompletionMap e(p, lo_hi(), {0});
    auto e2 = power_map(e, 2);
    CHECK(e2.source->size() == 1);
    CHECK(e2.target->size() == 4);
    CHECK(e2.source->name(0) == "(p,p)");
    CHECK(e2.target->name(0) == "(lo,lo)");
    CHECK(e2.target->name(1) == "(lo,hi)");
    CHECK(e2.target->name(2) == "(hi,lo)");
    CHECK(e2.target->name(3) == "(hi,hi)");
    CHECK(e2.target->leq(0, 3));
    CHECK_FALSE(e2.target->leq(1, 2));
    CHECK(e2.apply(0) == 0);
}

TEST_CASE("powers of a top-preserving completion stay meet-completions") {
    auto q = chain(2);
    CompletionMap e(q, q, {0, 1}); // identity completion
    CHECK(is_meet_completion(e).ok);
    CHECK(source_top_preserved(e));
    for (int n = 2; n <= 3; ++n) {
        auto en = power_map(e, n);
        CHECK(is_meet_completion(en).ok);
        auto restricted = restrict_product(e, n);
        CHECK(restricted.removed.empty()); // nothing to drop when e^n already works
    }
}

TEST_CASE("powers of a top-missing completion fail and restriction repairs them") {
    auto p = FinitePoset::make({"p"}, {{0, 0}});
    CompletionMap e(p, lo_hi(), {0});
    auto e2 = power_map(e, 2);
    auto full = is_meet_completion(e2);
    CHECK_FALSE(full.ok);
    auto restricted = restrict_product(e, 2); // verifies the repaired map internally
    CHECK(is_meet_completion(restricted.map).ok);
    std::vector<std::string> removed = restricted.removed;
    std::sort(removed.begin(), removed.end());
    CHECK(removed == std::vector<std::string>{"(hi,lo)", "(lo,hi)"});
}

TEST_CASE("power guard refuses large products") {
    auto q = chain(9);
    CompletionMap e(q, q, {0, 1, 2, 3, 4, 5, 6, 7, 8});
    Guards tight;
    tight.product = 100;
    CHECK_THROWS_AS(power_map(e, 3, tight), resource_error); // 9^3 > 100
}

TEST_CASE("biconditional across canonical completions of fixed closures") {
    // identity closure: the empty up-set is closed, so the source top cannot
    // be preserved even when the source has one
    auto p = chain(3);
    auto ident = completion_of_closure(ClosureOperator::identity(p));
    CHECK_FALSE(source_top_preserved(ident.map));
    CHECK_FALSE(is_meet_completion(power_map(ident.map, 2)).ok);
    // a family whose members all contain the top makes the top the empty
    // intersection, so it is preserved
    auto family = ClosureOperator::from_family(p, {UpSet::whole(p)});
    auto canonical = completion_of_closure(family);
    CHECK(source_top_preserved(canonical.map));
    CHECK(is_meet_completion(power_map(canonical.map, 2)).ok);
}

} // TEST_SUITE
