#pragma once

#include "odakit/guards.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace odakit {

class FinitePoset;
using PosetPtr = std::shared_ptr<const FinitePoset>;

// Finite poset over elements 0..n-1 with display names.  The order matrix is
// validated eagerly: the given pairs must already be reflexive, antisymmetric
// and transitive (no closure is applied; an input_error names the first
// offending pair).  Rows are stored as packed bitsets.
class FinitePoset {
  public:
    FinitePoset(std::vector<std::string> names, const std::vector<std::pair<int, int>>& leq_pairs);

    static PosetPtr make(std::vector<std::string> names,
                         const std::vector<std::pair<int, int>>& leq_pairs);

    int size() const { return n_; }
    const std::string& name(int i) const { return names_[static_cast<std::size_t>(i)]; }
    const std::vector<std::string>& names() const { return names_; }
    int index_of(const std::string& name) const; // -1 when absent

    bool leq(int i, int j) const {
        return (up_[static_cast<std::size_t>(i) * words_ + static_cast<std::size_t>(j >> 6)] >>
                (j & 63)) & 1u;
    }
    bool lt(int i, int j) const { return i != j && leq(i, j); }

    std::optional<int> bottom() const;
    std::optional<int> top() const;
    // greatest lower / least upper bound of a set; empty set yields top / bottom
    std::optional<int> meet_of(const std::vector<int>& xs) const;
    std::optional<int> join_of(const std::vector<int>& xs) const;

    std::vector<int> up_cone(int i) const;   // {j : i <= j}
    std::vector<int> down_cone(int i) const; // {j : j <= i}

    // the strictly-above counts give a linear extension (maximal first)
    std::vector<int> linear_extension_max_first() const;

    std::vector<std::pair<int, int>> leq_pairs() const;

    bool same_structure(const FinitePoset& other) const; // names and order equal

  private:
    int n_;
    std::size_t words_;
    std::vector<std::string> names_;
    std::vector<std::uint64_t> up_;   // row i = {j : i <= j}
    std::vector<std::uint64_t> down_; // row i = {j : j <= i}

    friend class UpSet;
    const std::uint64_t* up_row(int i) const { return up_.data() + static_cast<std::size_t>(i) * words_; }
    const std::uint64_t* down_row(int i) const { return down_.data() + static_cast<std::size_t>(i) * words_; }
    std::optional<int> greatest_of_mask(const std::vector<std::uint64_t>& mask) const;
    std::optional<int> least_of_mask(const std::vector<std::uint64_t>& mask) const;
};

// Up-set of a poset, stored as the antichain of its minimal elements
// (sorted, pairwise incomparable).  The empty antichain is the empty up-set.
// Two up-sets compare equal only over the same parent poset.
class UpSet {
  public:
    UpSet(PosetPtr poset, const std::vector<int>& generators); // minimalizes
    static UpSet empty(PosetPtr poset);
    static UpSet principal(PosetPtr poset, int p);
    static UpSet whole(PosetPtr poset);

    const PosetPtr& poset() const { return poset_; }
    const std::vector<int>& minimals() const { return min_; }
    bool is_empty() const { return min_.empty(); }

    bool contains(int p) const;
    bool subset_of(const UpSet& other) const;   // as sets of elements
    bool superset_of(const UpSet& other) const { return other.subset_of(*this); }
    std::vector<int> elements() const;          // materialized, ascending
    std::size_t count() const;

    UpSet union_with(const UpSet& other) const;
    UpSet intersect(const UpSet& other) const;

    bool operator==(const UpSet& other) const;
    bool operator!=(const UpSet& other) const { return !(*this == other); }
    // canonical order for use as map keys; unrelated to set inclusion
    bool before(const UpSet& other) const;

    std::string to_string() const; // "{a,c}" from minimal names, "{}" when empty

  private:
    PosetPtr poset_;
    std::vector<int> min_;

    void require_same_poset(const UpSet& other) const;
};

UpSet up_closure(PosetPtr poset, const std::vector<int>& generators);

// Every up-set of the poset, in ascending element-mask order (so the empty
// up-set first and the whole carrier last).  Refuses when 2^|P| exceeds the
// guard, and |P| > 62 is always refused.
std::vector<UpSet> all_up_sets(PosetPtr poset, const Guards& guards = global_guards());

bool is_complete_lattice(const FinitePoset& poset);

// The lattice P* of all up-sets ordered by reverse inclusion, as an explicit
// poset (named by minimal antichains).  Mostly useful in tests.
PosetPtr upsets_poset(PosetPtr poset, const Guards& guards = global_guards());

} // namespace odakit
