#include "doctest.h"

#include "odakit/binrel.hpp"
#include "odakit/errors.hpp"

#include <vector>

using namespace odakit;

namespace {

std::vector<BinRel> all_rels(int base) {
    std::vector<BinRel> out;
    const int bits = base * base;
    for (int mask = 0; mask < (1 << bits); ++mask) {
        BinRel r(base);
        for (int u = 0; u < base; ++u)
            for (int v = 0; v < base; ++v)
                if ((mask >> (u * base + v)) & 1) r.set(u, v);
        out.push_back(r);
    }
    return out;
}

} // namespace

TEST_SUITE("binrel") {

TEST_CASE("pair round trip and printing") {
    auto r = BinRel::from_pairs(4, {{0, 1}, {2, 3}});
    CHECK(r.at(0, 1));
    CHECK(r.at(2, 3));
    CHECK_FALSE(r.at(1, 0));
    CHECK(r.pair_count() == 2);
    CHECK(r.pairs() == std::vector<std::pair<int, int>>{{0, 1}, {2, 3}});
    CHECK(r.to_string() == "{(a,b),(c,d)}");
    CHECK(BinRel(3).to_string() == "{}");
    CHECK(BinRel::identity(2).to_string() == "{(a,a),(b,b)}");
}

TEST_CASE("construction validates the base") {
    CHECK_THROWS_AS(BinRel(0), input_error);
    CHECK_THROWS_AS(BinRel(33), input_error);
    CHECK_THROWS_AS(BinRel::from_pairs(2, {{0, 2}}), input_error);
    CHECK_THROWS_AS(BinRel::identity(2).compose(BinRel::identity(3)), input_error);
}

TEST_CASE("operations on worked examples") {
    auto x = BinRel::from_pairs(3, {{0, 1}, {1, 2}});
    auto y = BinRel::from_pairs(3, {{1, 0}, {2, 2}});
    CHECK(x.compose(y) == BinRel::from_pairs(3, {{0, 0}, {1, 2}}));
    CHECK(x.converse() == BinRel::from_pairs(3, {{1, 0}, {2, 1}}));
    CHECK(x.domain() == BinRel::from_pairs(3, {{0, 0}, {1, 1}}));
    CHECK(x.range() == BinRel::from_pairs(3, {{1, 1}, {2, 2}}));
    CHECK(x.subset_of(BinRel::full(3)));
    CHECK_FALSE(BinRel::full(3).subset_of(x));
    CHECK(BinRel::zero(3).subset_of(x));
    CHECK(BinRel::zero(3).empty());
}

TEST_CASE("algebraic laws hold exhaustively on base 2") {
    auto rels = all_rels(2);
    auto id = BinRel::identity(2);
    for (const auto& x : rels) {
        CHECK(x.compose(id) == x);
        CHECK(id.compose(x) == x);
        CHECK(x.converse().converse() == x);
        CHECK(x.domain().compose(x) == x);   // dom(x);x = x
        CHECK(x.compose(x.range()) == x);    // x;ran(x) = x
        CHECK(x.converse().domain() == x.range());
        for (const auto& y : rels) {
            CHECK(x.compose(y).converse() == y.converse().compose(x.converse()));
            for (const auto& z : rels) CHECK(x.compose(y).compose(z) == x.compose(y.compose(z)));
        }
    }
}

TEST_CASE("canonical order is total and consistent with equality") {
    auto rels = all_rels(2);
    for (std::size_t i = 0; i < rels.size(); ++i)
        for (std::size_t j = 0; j < rels.size(); ++j) {
            CHECK(((rels[i] < rels[j]) || (rels[j] < rels[i]) || rels[i] == rels[j]));
            CHECK((rels[i] == rels[j]) == (i == j));
        }
}

} // TEST_SUITE
