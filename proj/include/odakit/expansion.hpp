#pragma once

#include "odakit/closure.hpp"
#include "odakit/guards.hpp"
#include "odakit/poset.hpp"
#include "odakit/term.hpp"

#include <optional>
#include <string>
#include <vector>

namespace odakit {

// Poset with finitely many isotone operations given by tables.  Tables are
// row-major (first argument most significant); isotonicity and totality are
// validated at construction.
class PosetExpansion {
  public:
    struct Op {
        std::string name;
        int arity = 0;
        std::vector<int> table; // size |P|^arity
    };

    PosetExpansion(PosetPtr poset, std::vector<Op> ops);

    const PosetPtr& poset() const { return poset_; }
    const std::vector<Op>& ops() const { return ops_; }
    Signature signature() const;
    int op_index(const std::string& name) const; // -1 when absent

    int apply(int op, const std::vector<int>& args) const;
    // the derived operation of a term at an element assignment
    int eval(const Term& t, const std::vector<int>& assignment) const;

  private:
    PosetPtr poset_;
    std::vector<Op> ops_;
};

// An expansion completed by a standard closure operator: the closed up-sets
// (materialized, canonical order) with every operation lifted to
//   (C1,..,Cn) |-> Gamma(up-closure of f[C1 x .. x Cn]),
// where the image of an empty product is empty.  The completion is ordered by
// reverse inclusion: X <= Y iff X contains Y.
class CompletedExpansion {
  public:
    CompletedExpansion(PosetExpansion expansion, ClosureOperator gamma,
                       const Guards& guards = global_guards());

    const PosetExpansion& expansion() const { return expansion_; }
    const ClosureOperator& gamma() const { return gamma_; }
    const std::vector<UpSet>& closed() const { return closed_; }
    int index_of(const UpSet& s) const; // -1 when not closed

    UpSet lift_apply(int op, const std::vector<UpSet>& args) const;
    UpSet eval(const Term& t, const std::vector<UpSet>& assignment) const;
    // x <= y in the completion
    bool leq(const UpSet& x, const UpSet& y) const { return x.superset_of(y); }

  private:
    PosetExpansion expansion_;
    ClosureOperator gamma_;
    std::vector<UpSet> closed_;
};

// Up-closure of the pointwise image { t(y1..yn) : yi in Ci }, the assignment
// read per variable.  This is the oracle semantics the lifted evaluation is
// compared against; the two agree on linear terms.
UpSet pointwise_image_up(const PosetExpansion& m, const Term& t,
                         const std::vector<UpSet>& assignment);

struct InequalityResult {
    bool holds = true;
    std::string witness; // first failing assignment, "" when holds
};

// M |= phi <= psi, universally quantified over element assignments.
InequalityResult holds_inequality(const PosetExpansion& m, const Term& phi, const Term& psi);
// Completion |= phi <= psi, universally quantified over closed assignments.
InequalityResult holds_inequality(const CompletedExpansion& m, const Term& phi, const Term& psi);

// The larger-term side condition: psi evaluated through the lifted operations
// coincides with Gamma applied to the up-closed pointwise image, at each
// given closed tuple (or at every closed tuple when none are given).
CheckResult term_respects_closure(const CompletedExpansion& m, const Term& psi,
                                  const std::vector<std::vector<UpSet>>& tuples);
CheckResult term_respects_closure(const CompletedExpansion& m, const Term& psi);

} // namespace odakit
