#pragma once

#include "odakit/guards.hpp"
#include "odakit/oda.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace odakit {

// Randomized property suite outcome: one LawReport per property, counters
// accumulated across all trials.  Failures carry the first witness, enough to
// replay with the same seed.
struct SuiteReport {
    std::string name;
    std::uint64_t seed = 0;
    int trials = 0;
    std::vector<LawReport> properties;
    bool ok() const {
        for (const auto& p : properties)
            if (p.required && !p.pass)
                return false;
        return true;
    }
};

// Round trip between standard closures and their completions: the induced
// closure of the induced completion is the original closure, the connecting
// map is an order isomorphism making the triangle commute, it is unique for
// small targets, and relabeling the target changes nothing.
SuiteReport run_correspondence_suite(std::uint64_t seed, int trials, int max_poset,
                                     const Guards& guards = global_guards());

// Inequality preservation: a random isotone expansion satisfies phi <= psi
// exactly when its completion by a random standard closure does, for linear
// term pairs; the lifted evaluation agrees with the closed pointwise image on
// every closed tuple.
SuiteReport run_preservation_suite(std::uint64_t seed, int trials, int max_poset, int max_depth,
                                   const Guards& guards = global_guards());

// Finite powers: e^n is a meet-completion exactly when the source top exists
// and lands on the target top; restricting the square to the down-closure of
// the image (plus the top) always restores a meet-completion.
SuiteReport run_product_suite(std::uint64_t seed, int trials,
                              const Guards& guards = global_guards());

} // namespace odakit
