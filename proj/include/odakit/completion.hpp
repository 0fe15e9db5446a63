#pragma once

#include "odakit/guards.hpp"
#include "odakit/poset.hpp"

#include <string>
#include <vector>

namespace odakit {

// Outcome of a verification; `detail` explains a failure (first witness).
struct CheckResult {
    bool ok = true;
    std::string detail;
    explicit operator bool() const { return ok; }
};

// A map e : source -> target between posets, candidate completion embedding.
struct CompletionMap {
    PosetPtr source;
    PosetPtr target;
    std::vector<int> map; // image index per source element

    CompletionMap(PosetPtr src, PosetPtr tgt, std::vector<int> m);
    int apply(int p) const { return map[static_cast<std::size_t>(p)]; }
};

// e is a meet-completion: the target is a complete lattice (input_error when
// not), e is an order embedding, and every target element is the meet of the
// embedded elements above it.
CheckResult is_meet_completion(const CompletionMap& e);

// The n-fold product map e^n : P^n -> Q^n with the componentwise order.
// Tuples are ordered row-major (first coordinate most significant) and named
// "(p,q,..)".  Refuses when either product exceeds the guard.
CompletionMap power_map(const CompletionMap& e, int n, const Guards& guards = global_guards());

// (Q^n)° : drop the tuples that lie below no image tuple, except the top.
// The restricted e^n is verified to be a meet-completion (check_failure
// otherwise).  `removed` lists the dropped tuple names.
struct RestrictedProduct {
    CompletionMap map;
    std::vector<std::string> removed;
};
RestrictedProduct restrict_product(const CompletionMap& e, int n,
                                   const Guards& guards = global_guards());

// Both sides of the product-completion criterion: e^n (n >= 2) is a
// meet-completion iff the source has a top mapped to the target top.
bool source_top_preserved(const CompletionMap& e);

} // namespace odakit
