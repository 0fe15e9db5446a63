#include "doctest.h"

#include "odakit/errors.hpp"
#include "odakit/oda.hpp"

#include <map>
#include <set>
#include <vector>

using namespace odakit;

namespace {

AbstractODA copy_with_comp(const AbstractODA& a, int i, int j, int value) {
    const int n = a.size();
    std::vector<std::string> names;
    std::vector<std::pair<int, int>> leq;
    std::vector<std::vector<int>> comp(static_cast<std::size_t>(n),
                                       std::vector<int>(static_cast<std::size_t>(n)));
    std::vector<int> conv, dom, ran;
    for (int x = 0; x < n; ++x) {
        names.push_back(a.name(x));
        conv.push_back(a.conv(x));
        dom.push_back(a.dom(x));
        ran.push_back(a.ran(x));
        for (int y = 0; y < n; ++y) {
            if (a.leq(x, y)) leq.emplace_back(x, y);
            comp[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = a.comp(x, y);
        }
    }
    comp[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = value;
    return AbstractODA(names, leq, comp, conv, dom, ran, a.zero(), a.id());
}

} // namespace

TEST_SUITE("oda") {

TEST_CASE("the base-1 proper algebra has two elements and passes every law") {
    auto a = full_proper_oda(1);
    CHECK(a.size() == 2);
    CHECK(a.zero() != a.id());
    CHECK(a.base() == 1);
    auto rep = check_axioms(a);
    CHECK(rep.ok());
    for (const auto& law : rep.laws) {
        CHECK(law.pass);
        CHECK(law.required);
        CHECK(law.violations == 0);
        CHECK(law.checked > 0);
    }
}

TEST_CASE("the base-2 proper algebra matches direct relation computation") {
    auto a = full_proper_oda(2);
    REQUIRE(a.size() == 16);
    CHECK(check_axioms(a).ok());
    REQUIRE(a.relations().has_value());
    const auto& rels = *a.relations();
    auto index_of = [&](const BinRel& r) {
        for (int i = 0; i < 16; ++i)
            if (rels[static_cast<std::size_t>(i)] == r) return i;
        return -1;
    };
    CHECK(rels[static_cast<std::size_t>(a.zero())] == BinRel::zero(2));
    CHECK(rels[static_cast<std::size_t>(a.id())] == BinRel::identity(2));
    for (int i = 0; i < 16; ++i) {
        const auto& x = rels[static_cast<std::size_t>(i)];
        CHECK(a.conv(i) == index_of(x.converse()));
        CHECK(a.dom(i) == index_of(x.domain()));
        CHECK(a.ran(i) == index_of(x.range()));
        for (int j = 0; j < 16; ++j) {
            const auto& y = rels[static_cast<std::size_t>(j)];
            CHECK(a.comp(i, j) == index_of(x.compose(y)));
            CHECK(a.leq(i, j) == x.subset_of(y));
        }
    }
}

TEST_CASE("a mutated composition table is caught with a witness") {
    auto a = full_proper_oda(2);
    // make id absorb some element: id;x = zero breaks the identity law
    int victim = (a.zero() + 1 == a.id()) ? a.zero() + 2 : a.zero() + 1;
    auto broken = copy_with_comp(a, a.id(), victim, a.zero());
    auto rep = check_axioms(broken);
    CHECK_FALSE(rep.ok());
    const auto* law = rep.find("id-identity");
    REQUIRE(law != nullptr);
    CHECK_FALSE(law->pass);
    CHECK(law->violations > 0);
    CHECK_FALSE(law->witness.empty());
}

TEST_CASE("constructor rejects out-of-range tables and a non-least zero") {
    CHECK_THROWS_AS(AbstractODA({"a"}, {{0, 0}}, {{5}}, {0}, {0}, {0}, 0, 0), input_error);
    // zero must be the least element; an antichain order has no least
    CHECK_THROWS_AS(AbstractODA({"z", "i"}, {{0, 0}, {1, 1}}, {{0, 0}, {0, 1}}, {0, 1}, {0, 1},
                                {0, 1}, 0, 1),
                    input_error);
}

TEST_CASE("generated subalgebras contain their generators and the constants") {
    auto swap = BinRel::from_pairs(2, {{0, 1}, {1, 0}});
    auto sub = generate_subalgebra(2, {swap});
    CHECK(sub.size() == 3); // zero, id, swap
    REQUIRE(sub.relations().has_value());
    std::set<BinRel> carrier(sub.relations()->begin(), sub.relations()->end());
    CHECK(carrier.count(swap) == 1);
    CHECK(carrier.count(BinRel::zero(2)) == 1);
    CHECK(carrier.count(BinRel::identity(2)) == 1);
    CHECK(check_axioms(sub).ok());
}

TEST_CASE("algebra_of_relations rejects families that are not closed") {
    CHECK_THROWS_AS(algebra_of_relations(2, {BinRel::identity(2)}), input_error); // no zero
    auto swap = BinRel::from_pairs(2, {{0, 1}, {1, 0}});
    CHECK_THROWS_AS(algebra_of_relations(2, {BinRel::zero(2), swap}), input_error); // no id = swap;swap
}

TEST_CASE("distinct small subalgebra counts on bases 1 and 2") {
    // base 1: any generator set yields the full two-element algebra
    std::set<std::vector<BinRel>> seen1;
    for (int m1 = 0; m1 < 2; ++m1)
        for (int m2 = 0; m2 < 2; ++m2) {
            auto r1 = m1 ? BinRel::identity(1) : BinRel::zero(1);
            auto r2 = m2 ? BinRel::identity(1) : BinRel::zero(1);
            auto sub = generate_subalgebra(1, {r1, r2});
            CHECK(sub.size() == 2);
            seen1.insert(*sub.relations());
        }
    CHECK(seen1.size() == 1);

    // base 2: the pair-generated closure yields 27 distinct carriers with a
    // fixed size multiset
    auto rel_of = [](int mask) {
        BinRel r(2);
        for (int u = 0; u < 2; ++u)
            for (int v = 0; v < 2; ++v)
                if ((mask >> (u * 2 + v)) & 1) r.set(u, v);
        return r;
    };
    std::set<std::vector<BinRel>> seen2;
    std::map<int, int> sizes;
    for (int m1 = 0; m1 < 16; ++m1)
        for (int m2 = m1; m2 < 16; ++m2) {
            auto sub = generate_subalgebra(2, {rel_of(m1), rel_of(m2)});
            if (seen2.insert(*sub.relations()).second) sizes[sub.size()]++;
        }
    CHECK(seen2.size() == 27);
    std::map<int, int> expected = {{2, 1}, {3, 4}, {4, 4},  {5, 1},  {6, 5},
                                   {7, 4}, {8, 3}, {11, 1}, {12, 3}, {13, 1}};
    CHECK(sizes == expected);
}

TEST_CASE("guards bound the enumerations") {
    Guards tight;
    tight.subalgebra = 2;
    auto swap = BinRel::from_pairs(2, {{0, 1}, {1, 0}});
    CHECK_THROWS_AS(generate_subalgebra(2, {swap}, tight), resource_error);
    CHECK_THROWS_AS(full_proper_oda(4), resource_error); // 65536 elements by default
    CHECK_THROWS_AS(full_proper_oda(0), input_error);
    CHECK_THROWS_AS(full_proper_oda(6), input_error);
}

} // TEST_SUITE
