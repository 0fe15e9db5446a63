#pragma once

#include "odakit/binrel.hpp"
#include "odakit/guards.hpp"
#include "odakit/poset.hpp"

#include <optional>
#include <string>
#include <vector>

namespace odakit {

// One verified law.  `required` distinguishes laws every algebra of this kind
// must satisfy from laws that are merely reported (with a witness) when they
// fail.
struct LawReport {
    std::string name;
    bool pass = true;
    bool required = true;
    std::string witness;       // first counterexample, "" when pass
    std::string note;
    long long violations = 0;  // how many instances failed
    long long checked = 0;     // how many instances were examined
};

// Record one instance check into a law: bump the counters and keep the first
// witness.  `describe` is only invoked on failure.
inline void law_tally(LawReport& r, bool ok, auto&& describe) {
    ++r.checked;
    if (!ok) {
        if (r.pass) {
            r.pass = false;
            r.witness = describe();
        }
        ++r.violations;
    }
}

struct AxiomReport {
    std::vector<LawReport> laws;
    bool ok() const {
        for (const auto& l : laws)
            if (l.required && !l.pass)
                return false;
        return true;
    }
    const LawReport* find(const std::string& name) const {
        for (const auto& l : laws)
            if (l.name == name)
                return &l;
        return nullptr;
    }
};

// Finite algebra in the signature (comp, conv, dom, ran, zero, id, <=) given
// by tables over elements 0..n-1.  Construction validates shapes, that leq is
// a partial order and that zero is its least element; the axioms themselves
// are checked by check_axioms.
class AbstractODA {
  public:
    AbstractODA(std::vector<std::string> names, const std::vector<std::pair<int, int>>& leq_pairs,
                std::vector<std::vector<int>> comp, std::vector<int> conv, std::vector<int> dom,
                std::vector<int> ran, int zero, int id);

    int size() const { return poset_->size(); }
    const PosetPtr& poset() const { return poset_; }
    const std::string& name(int i) const { return poset_->name(i); }

    bool leq(int a, int b) const { return poset_->leq(a, b); }
    int comp(int a, int b) const { return comp_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
    int conv(int a) const { return conv_[static_cast<std::size_t>(a)]; }
    int dom(int a) const { return dom_[static_cast<std::size_t>(a)]; }
    int ran(int a) const { return ran_[static_cast<std::size_t>(a)]; }
    int zero() const { return zero_; }
    int id() const { return id_; }

    // the concrete relations, when the algebra was built from them
    const std::optional<std::vector<BinRel>>& relations() const { return relations_; }
    std::optional<int> base() const;

  private:
    PosetPtr poset_;
    std::vector<std::vector<int>> comp_;
    std::vector<int> conv_, dom_, ran_;
    int zero_, id_;
    std::optional<std::vector<BinRel>> relations_;

    friend AbstractODA algebra_of_relations(int, std::vector<BinRel>);
};

// Algebra of an explicit, operation-closed set of relations (input_error when
// the set is not closed or misses zero/id).  Elements are sorted canonically.
AbstractODA algebra_of_relations(int base, std::vector<BinRel> rels);

// Subalgebra generated by the given relations inside the full algebra over
// the base; always contains zero and id.  Refuses past the guard.
AbstractODA generate_subalgebra(int base, const std::vector<BinRel>& generators,
                                const Guards& guards = global_guards());

// Every relation over the base (2^(base^2) elements; guarded).
AbstractODA full_proper_oda(int base, const Guards& guards = global_guards());

// The axioms of ordered domain algebras: partial order with least zero,
// isotone operations, normality, involuted monoid, D1-D7 with duals, the
// derived D8, D9 and the dom/ran exchange inequalities.  Witnesses name the
// first offending tuple in canonical order.
AxiomReport check_axioms(const AbstractODA& a);

} // namespace odakit
