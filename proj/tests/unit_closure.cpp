#include "doctest.h"

#include "odakit/closure.hpp"
#include "odakit/errors.hpp"
#include "odakit/poset.hpp"

#include <vector>

using namespace odakit;

namespace {

PosetPtr vee() { // a > c < b, plus d above a and b
    return FinitePoset::make(
        {"c", "a", "b", "d"},
        {{0, 0}, {1, 1}, {2, 2}, {3, 3}, {0, 1}, {0, 2}, {0, 3}, {1, 3}, {2, 3}});
}

PosetPtr two_chain() {
    return FinitePoset::make({"lo", "hi"}, {{0, 0}, {1, 1}, {0, 1}});
}

} // namespace

TEST_SUITE("closure") {

TEST_CASE("the identity closure is standard") {
    auto p = vee();
    auto gamma = ClosureOperator::identity(p);
    auto res = is_standard_closure(gamma);
    CHECK(res.ok);
    CHECK(gamma(UpSet::empty(p)) == UpSet::empty(p));
}

TEST_CASE("family closures are standard for arbitrary seeds") {
    auto p = vee();
    std::vector<std::vector<int>> seeds = {{}, {1, 2}, {3}, {0}};
    std::vector<UpSet> family;
    for (const auto& s : seeds) family.emplace_back(p, s);
    auto gamma = ClosureOperator::from_family(p, family, "test-family");
    CHECK(gamma.label() == "test-family");
    auto res = is_standard_closure(gamma);
    INFO(res.detail);
    CHECK(res.ok);
    // closure of a principal is that principal
    for (int i = 0; i < p->size(); ++i) CHECK(gamma(UpSet::principal(p, i)) == UpSet::principal(p, i));
}

TEST_CASE("a non-extensive map is rejected") {
    auto p = vee();
    ClosureOperator bogus(p, [p](const UpSet&) { return UpSet::empty(p); }, "bogus");
    auto res = is_standard_closure(bogus);
    CHECK_FALSE(res.ok);
    CHECK_FALSE(res.detail.empty());
}

TEST_CASE("completion of a closure is a meet-completion onto closed sets") {
    auto p = vee();
    auto gamma = ClosureOperator::from_family(p, {UpSet(p, {1, 2})});
    auto canonical = completion_of_closure(gamma);
    CHECK(is_meet_completion(canonical.map).ok);
    // the embedding sends p to its principal up-set
    for (int i = 0; i < p->size(); ++i) {
        int image = canonical.map.apply(i);
        CHECK(canonical.closed[static_cast<std::size_t>(image)] == UpSet::principal(p, i));
    }
    for (const auto& s : canonical.closed) CHECK(gamma(s) == s);
    CHECK(canonical.index_of(UpSet::principal(p, 0)) >= 0);
}

TEST_CASE("closure of completion round-trips pointwise") {
    auto p = vee();
    auto gamma = ClosureOperator::from_family(p, {UpSet(p, {1, 2}), UpSet(p, {3})});
    auto canonical = completion_of_closure(gamma);
    auto induced = closure_of_completion(canonical.map);
    for (const auto& s : all_up_sets(p)) CHECK(induced(s) == gamma(s));
}

TEST_CASE("closure of a non-meet-completion is refused") {
    // lo |-> lo embeds a chain into itself but misses meet-density of hi? no:
    // identity embedding is always a meet-completion, so use a proper failure:
    // the one-point source into the two-chain hits only the bottom, and the
    // top is the empty meet, so this one IS a meet-completion; collapse order
    // instead: two incomparable sources onto a chain is not an embedding.
    auto q = two_chain();
    auto p = FinitePoset::make({"x", "y"}, {{0, 0}, {1, 1}});
    CompletionMap e(p, q, {0, 1});
    CHECK_FALSE(is_meet_completion(e).ok);
    CHECK_THROWS_AS(closure_of_completion(e), input_error);
}

TEST_CASE("connecting map is the unique order isomorphism") {
    auto p = vee();
    auto gamma = ClosureOperator::from_family(p, {UpSet(p, {1, 2})});
    auto canonical = completion_of_closure(gamma);
    auto iso = completion_iso(canonical.map); // construction verifies the triangle
    CHECK(iso.h.size() == canonical.closed.size());
    for (std::size_t q = 0; q < iso.h.size(); ++q) CHECK(iso.h_inverse(iso.h[q]) == static_cast<int>(q));
    CHECK(count_connecting_isos(canonical.map, canonical.map) == 1);
}

TEST_CASE("counting refuses oversized targets") {
    auto p = FinitePoset::make({"a", "b", "c", "d"}, {{0, 0}, {1, 1}, {2, 2}, {3, 3}});
    auto gamma = ClosureOperator::identity(p);
    auto canonical = completion_of_closure(gamma); // 16 up-sets
    CHECK_THROWS_AS(count_connecting_isos(canonical.map, canonical.map), resource_error);
}

} // TEST_SUITE
