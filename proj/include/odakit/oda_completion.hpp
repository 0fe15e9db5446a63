#pragma once

#include "odakit/binrel.hpp"
#include "odakit/guards.hpp"
#include "odakit/oda.hpp"
#include "odakit/poset.hpp"

#include <map>
#include <string>
#include <vector>

namespace odakit {

// ---------------------------------------------------------------------------
// Relation-level engine.
//
// Up-sets of the algebra of all relations on a fixed base, represented by the
// antichain of their minimal elements.  Nothing here enumerates the ambient
// algebra, so large bases stay cheap as long as the antichains stay small.

class RelUpSet {
  public:
    RelUpSet(int base, std::vector<BinRel> generators); // minimalizes
    static RelUpSet empty(int base);
    static RelUpSet principal(const BinRel& r);
    static RelUpSet zero_up(int base); // up-set of the empty relation: everything

    int base() const { return base_; }
    const std::vector<BinRel>& minimals() const { return min_; }
    bool is_empty() const { return min_.empty(); }
    bool member(const BinRel& r) const;
    bool subset_of(const RelUpSet& other) const; // as sets of relations
    RelUpSet union_with(const RelUpSet& other) const;
    bool operator==(const RelUpSet& other) const = default;
    std::string to_string() const;

  private:
    int base_;
    std::vector<BinRel> min_; // sorted antichain
};

struct RelClosureTrace {
    std::vector<RelUpSet> steps; // front is the input, back the fixpoint
};

// X is closed when every dom(x);y;ran(z) with x,y,z in X stays in X.  The
// triple map is isotone in all three slots, so minimals suffice, and taking
// x=y=z shows X is always contained in one step of itself.
bool rel_is_closed(const RelUpSet& x);
RelUpSet rel_closure(const RelUpSet& x, RelClosureTrace* trace = nullptr,
                     const Guards& guards = global_guards());

// Lifted operations: close the up-set generated by the element-wise image.
// The image of an empty up-set is empty, so empty is absorbing for all four.
RelUpSet rel_comp_c(const RelUpSet& x, const RelUpSet& y, const Guards& guards = global_guards());
RelUpSet rel_dom_c(const RelUpSet& x, const Guards& guards = global_guards());
RelUpSet rel_ran_c(const RelUpSet& x, const Guards& guards = global_guards());
RelUpSet rel_conv_c(const RelUpSet& x, const Guards& guards = global_guards());
RelUpSet rel_conv_image(const RelUpSet& x); // element-wise converse, no closure pass

// ---------------------------------------------------------------------------
// Algebra-level engine: the same operations on up-sets of a finite
// AbstractODA's element order, suitable for exhaustive enumeration.

bool alg_is_closed(const AbstractODA& a, const UpSet& s);
// trace, when given, receives the iterate sequence starting with s itself
UpSet alg_closure(const AbstractODA& a, const UpSet& s, std::vector<UpSet>* trace = nullptr);
UpSet alg_comp_c(const AbstractODA& a, const UpSet& x, const UpSet& y);
UpSet alg_dom_c(const AbstractODA& a, const UpSet& x);
UpSet alg_ran_c(const AbstractODA& a, const UpSet& x);
UpSet alg_conv_c(const AbstractODA& a, const UpSet& x);
UpSet alg_conv_image(const AbstractODA& a, const UpSet& x);
UpSet alg_empty(const AbstractODA& a);
UpSet alg_zero_up(const AbstractODA& a); // whole carrier, least in the completion
UpSet alg_id_up(const AbstractODA& a);

std::vector<UpSet> closed_sets(const AbstractODA& a, const Guards& guards = global_guards());

// Indexed view of the completion: closed sets get indices and the lifted
// operations become integer tables (throws check_failure if an operation ever
// leaves the closed family, which cannot happen over a genuine input algebra).
struct CompletionTables {
    std::vector<UpSet> closed;
    std::vector<std::vector<int>> comp;
    std::vector<int> conv, dom, ran;
    int empty_idx = -1, zero_idx = -1, id_idx = -1;
    std::map<std::vector<int>, int> index; // antichain of minimals -> position

    int size() const { return static_cast<int>(closed.size()); }
    int index_of(const UpSet& s) const;
    bool leq(int x, int y) const; // completion order is reverse inclusion
};
CompletionTables completion_tables(const AbstractODA& a, const Guards& guards = global_guards());

// View the completion as an algebra in the same signature (order = reverse
// inclusion, zero = the whole carrier, id = the up-set of id).
AbstractODA completion_algebra(const CompletionTables& t);

// Which laws survive the passage to the completion.  Laws that fail there in
// general (D2, D6, D8, associativity, the exchange inequalities, and their
// duals) are reported with counts and first witnesses instead of being
// required; laws involving a lower bound by id or absorption by zero are
// required over nonempty closed sets only, since the empty closed set
// annihilates every lifted operation.  The input must itself pass
// check_axioms, otherwise input_error.
AxiomReport check_completion_axioms(const AbstractODA& a, const Guards& guards = global_guards());

// ---------------------------------------------------------------------------
// Counterexample reproductions.

struct ExampleReport {
    std::string name;
    std::string headline; // what the example demonstrates
    std::vector<LawReport> checks;
    bool ok() const {
        for (const auto& c : checks)
            if (!c.pass)
                return false;
        return true;
    }
};

std::vector<std::string> example_names(); // d2, d6, assoc, product
ExampleReport reproduce_example(const std::string& which, const Guards& guards = global_guards());

// ---------------------------------------------------------------------------
// Partial composition: restrict the lifted composition to pairs with
// ran(x) = dom(y) and test Kleene-style associativity (defined on one side
// iff defined on the other, equal when both are defined).

struct StarStats {
    long long triples = 0;
    long long both_defined = 0;
    long long definedness_mismatches = 0;
    long long value_mismatches = 0;
    bool exhausted = true; // false when the budget stopped the scan
    std::string first_witness;
};
StarStats partial_star_explore(const AbstractODA& a, long long budget = -1,
                               const Guards& guards = global_guards());

} // namespace odakit
