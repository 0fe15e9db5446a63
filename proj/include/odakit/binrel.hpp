#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace odakit {

// Binary relation over a base {0, .., base-1}, base <= 32, stored row-major:
// bit v of rows_[u] is set iff (u,v) is in the relation.  Value type; the
// canonical order (operator<=>) compares base, then rows lexicographically.
class BinRel {
  public:
    static constexpr int max_base = 32;

    explicit BinRel(int base); // empty relation; input_error on bad base
    static BinRel zero(int base) { return BinRel(base); }
    static BinRel identity(int base);
    static BinRel full(int base);
    static BinRel from_pairs(int base, const std::vector<std::pair<int, int>>& pairs);

    int base() const { return base_; }
    bool at(int u, int v) const { return (rows_[static_cast<std::size_t>(u)] >> v) & 1u; }
    void set(int u, int v);
    bool empty() const;
    int pair_count() const;

    BinRel compose(const BinRel& other) const;
    BinRel converse() const;
    BinRel domain() const; // {(u,u) : row u nonempty}
    BinRel range() const;  // {(v,v) : v hit by some row}
    bool subset_of(const BinRel& other) const;

    bool operator==(const BinRel& other) const = default;
    std::strong_ordering operator<=>(const BinRel& other) const = default;

    std::vector<std::pair<int, int>> pairs() const;
    // "{(a,b),(c,d)}" with letter names when base <= 26, else numbers
    std::string to_string() const;

  private:
    int base_;
    std::vector<std::uint32_t> rows_;

    void check_same_base(const BinRel& other) const;
};

// Free-function spellings of the proper-algebra operations.
inline BinRel rel_comp(const BinRel& x, const BinRel& y) { return x.compose(y); }
inline BinRel rel_conv(const BinRel& x) { return x.converse(); }
inline BinRel rel_dom(const BinRel& x) { return x.domain(); }
inline BinRel rel_ran(const BinRel& x) { return x.range(); }
inline BinRel rel_id(int base) { return BinRel::identity(base); }
inline BinRel rel_zero(int base) { return BinRel::zero(base); }
inline bool rel_leq(const BinRel& x, const BinRel& y) { return x.subset_of(y); }

} // namespace odakit
