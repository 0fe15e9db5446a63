#pragma once

#include "odakit/completion.hpp"
#include "odakit/guards.hpp"
#include "odakit/poset.hpp"

#include <functional>
#include <string>
#include <vector>

namespace odakit {

// Closure operator on the up-sets of a poset, with respect to set inclusion.
// "Standard" additionally fixes every principal up-set.  The operator itself
// is an opaque function; the verification predicates below test the axioms.
class ClosureOperator {
  public:
    using Fn = std::function<UpSet(const UpSet&)>;

    ClosureOperator(PosetPtr parent, Fn fn, std::string label);

    const PosetPtr& parent() const { return parent_; }
    const std::string& label() const { return label_; }
    UpSet operator()(const UpSet& s) const;

    // the identity closure: every up-set is closed
    static ClosureOperator identity(PosetPtr parent);
    // smallest-member closure of an intersection-closed family.  The family
    // is completed with all principal up-sets, the whole carrier and the
    // family's pairwise intersections before use, so any seed works.
    static ClosureOperator from_family(PosetPtr parent, std::vector<UpSet> family,
                                       std::string label = "family");

  private:
    PosetPtr parent_;
    Fn fn_;
    std::string label_;
};

// Extensive + isotone + idempotent + fixes principals, on the given sample
// (pairs drawn within the sample for isotonicity).
CheckResult is_standard_closure(const ClosureOperator& gamma, const std::vector<UpSet>& sample);
// Same, over every up-set of the parent (guarded enumeration).
CheckResult is_standard_closure(const ClosureOperator& gamma,
                                const Guards& guards = global_guards());

// The closure induced by a meet-completion e : P -> Q,
//   S |-> { p : e(p) >= meet of e[S] }.
// Pre: is_meet_completion(e) (input_error otherwise).
ClosureOperator closure_of_completion(const CompletionMap& e);

// The completion induced by a standard closure: the poset of closed up-sets
// under reverse inclusion, with p |-> p-up.  `closed` is the target carrier
// in canonical order; `index_of` locates a closed up-set in it.
struct ClosureCompletion {
    CompletionMap map;
    std::vector<UpSet> closed;
    int index_of(const UpSet& s) const; // -1 when not closed
};
ClosureCompletion completion_of_closure(const ClosureOperator& gamma,
                                        const Guards& guards = global_guards());

// The connecting map h_e(q) = { p : e(p) >= q } of a meet-completion, with
// its inverse S |-> meet of e[S].  Construction verifies that h is an order
// isomorphism onto the closed up-sets of the induced closure and that
// h(e(p)) = p-up (check_failure on violation).
struct CompletionIso {
    CompletionMap e;
    std::vector<UpSet> h;       // per target element
    ClosureCompletion induced;  // completion of the induced closure
    int h_inverse(const UpSet& closed_set) const; // target element index
};
CompletionIso completion_iso(const CompletionMap& e, const Guards& guards = global_guards());

// Number of order isomorphisms g : e1.target -> e2.target with g(e1(p)) =
// e2(p) for all p.  Exhaustive over all bijections; refuse beyond 8 elements.
int count_connecting_isos(const CompletionMap& e1, const CompletionMap& e2);

} // namespace odakit
