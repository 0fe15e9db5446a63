#include "doctest.h"

#include "odakit/errors.hpp"
#include "odakit/poset.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

using namespace odakit;

namespace {

// reflexive-transitive chain 0 < 1 < .. < n-1
PosetPtr chain(int n) {
    std::vector<std::string> names;
    std::vector<std::pair<int, int>> leq;
    for (int i = 0; i < n; ++i) {
        names.push_back("c" + std::to_string(i));
        for (int j = i; j < n; ++j) leq.emplace_back(i, j);
    }
    return FinitePoset::make(names, leq);
}

// bot < a, b < top
PosetPtr diamond() {
    return FinitePoset::make({"bot", "a", "b", "top"},
                             {{0, 0}, {1, 1}, {2, 2}, {3, 3}, {0, 1}, {0, 2}, {0, 3}, {1, 3}, {2, 3}});
}

PosetPtr antichain(int n) {
    std::vector<std::string> names;
    std::vector<std::pair<int, int>> leq;
    for (int i = 0; i < n; ++i) {
        names.push_back("v" + std::to_string(i));
        leq.emplace_back(i, i);
    }
    return FinitePoset::make(names, leq);
}

// independent oracle: enumerate up-sets as bitmasks and check up-closure
long long count_up_sets_by_mask(const FinitePoset& p) {
    const int n = p.size();
    long long count = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
            if (!((mask >> i) & 1)) continue;
            for (int j = 0; j < n && ok; ++j)
                if (p.leq(i, j) && !((mask >> j) & 1)) ok = false;
        }
        if (ok) ++count;
    }
    return count;
}

} // namespace

TEST_SUITE("poset") {

TEST_CASE("order accessors on a diamond") {
    auto p = diamond();
    CHECK(p->size() == 4);
    CHECK(p->leq(0, 3));
    CHECK(p->leq(1, 3));
    CHECK_FALSE(p->leq(1, 2));
    CHECK(p->lt(0, 1));
    CHECK_FALSE(p->lt(1, 1));
    CHECK(p->bottom() == 0);
    CHECK(p->top() == 3);
    CHECK(p->meet_of({1, 2}) == 0);
    CHECK(p->join_of({1, 2}) == 3);
    CHECK(p->meet_of({}) == 3);
    CHECK(p->join_of({}) == 0);
    CHECK(p->index_of("a") == 1);
    CHECK(p->index_of("nope") == -1);
}

TEST_CASE("an antichain has no bounds or binary meets") {
    auto p = antichain(3);
    CHECK_FALSE(p->bottom().has_value());
    CHECK_FALSE(p->top().has_value());
    CHECK_FALSE(p->meet_of({0, 1}).has_value());
    CHECK(p->meet_of({2}) == 2);
}

TEST_CASE("construction rejects broken orders") {
    CHECK_THROWS_AS(FinitePoset::make({"a", "b"}, {{0, 0}}), input_error); // missing (1,1)
    CHECK_THROWS_AS(FinitePoset::make({"a", "b"}, {{0, 0}, {1, 1}, {0, 1}, {1, 0}}),
                    input_error); // antisymmetry
    CHECK_THROWS_AS(
        FinitePoset::make({"a", "b", "c"}, {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {1, 2}}),
        input_error); // transitivity
}

TEST_CASE("up-sets minimalize their generators") {
    auto p = diamond();
    UpSet s(p, {3, 1, 0});
    CHECK(s.minimals() == std::vector<int>{0}); // 0 lies below everything given
    CHECK(s.count() == 4);
    UpSet t(p, {1, 2});
    CHECK(t.minimals() == std::vector<int>{1, 2});
    CHECK(t.count() == 3);
    CHECK(t.contains(3));
    CHECK_FALSE(t.contains(0));
    CHECK(t.subset_of(s));
    CHECK_FALSE(s.subset_of(t));
    CHECK(UpSet::principal(p, 3).minimals() == std::vector<int>{3});
    CHECK(UpSet::empty(p).is_empty());
    CHECK(UpSet::whole(p) == UpSet(p, {0}));
    CHECK(t.union_with(UpSet::principal(p, 0)) == s);
    CHECK(t.intersect(UpSet::principal(p, 1)) == UpSet::principal(p, 1));
    CHECK(t.to_string() == "{a,b}");
}

TEST_CASE("up-set enumeration matches the mask oracle") {
    for (auto p : {chain(1), chain(4), diamond(), antichain(3)}) {
        auto all = all_up_sets(p);
        CHECK(static_cast<long long>(all.size()) == count_up_sets_by_mask(*p));
        // ascending mask order starts empty and ends with the whole carrier
        CHECK(all.front().is_empty());
        CHECK(all.back() == UpSet::whole(p));
        auto mask_of = [&](const UpSet& s) {
            unsigned long long m = 0;
            for (int e = 0; e < p->size(); ++e)
                if (s.contains(e)) m |= 1ull << e;
            return m;
        };
        for (std::size_t i = 0; i + 1 < all.size(); ++i)
            CHECK(mask_of(all[i]) < mask_of(all[i + 1]));
        // before() is a strict total key order, not tied to the mask order
        for (std::size_t i = 0; i < all.size(); ++i)
            for (std::size_t j = 0; j < all.size(); ++j) {
                if (i == j) CHECK_FALSE(all[i].before(all[j]));
                else CHECK(all[i].before(all[j]) != all[j].before(all[i]));
            }
    }
    CHECK(all_up_sets(chain(3)).size() == 4);   // chains: n + 1
    CHECK(all_up_sets(diamond()).size() == 6);  // {}, {top}, {a}, {b}, {a,b}, whole
    CHECK(all_up_sets(antichain(3)).size() == 8);
}

TEST_CASE("enumeration guard refuses large posets") {
    Guards tight;
    tight.upset_enum = 4;
    CHECK_THROWS_AS(all_up_sets(antichain(3), tight), resource_error);
}

TEST_CASE("the up-set lattice is a complete lattice under reverse inclusion") {
    auto p = diamond();
    auto star = upsets_poset(p);
    CHECK(star->size() == 6);
    CHECK(is_complete_lattice(*star));
    // reverse inclusion: the empty up-set is the top
    auto all = all_up_sets(p);
    int empty_idx = 0;
    CHECK(star->top() == empty_idx);
    CHECK(star->bottom() == static_cast<int>(all.size()) - 1);
}

TEST_CASE("linear extension lists maximal elements first") {
    auto p = diamond();
    auto ext = p->linear_extension_max_first();
    std::vector<int> pos(4);
    for (int i = 0; i < 4; ++i) pos[static_cast<std::size_t>(ext[static_cast<std::size_t>(i)])] = i;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (p->lt(i, j)) CHECK(pos[static_cast<std::size_t>(j)] < pos[static_cast<std::size_t>(i)]);
}

} // TEST_SUITE
