#pragma once

#include "odakit/closure.hpp"
#include "odakit/expansion.hpp"
#include "odakit/poset.hpp"
#include "odakit/term.hpp"

#include <cstdint>
#include <random>
#include <utility>

namespace odakit {

// Deterministic randomness for the property suites.  mt19937_64 has a fully
// specified output sequence, so a fixed seed replays identically everywhere;
// the modulo reduction below is slightly biased, which is harmless here and
// keeps the draw sequence trivial to reason about.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    std::uint64_t raw() { return eng_(); }
    int below(int n); // in [0, n), n >= 1
    bool chance(int num, int den) { return below(den) < num; }

  private:
    std::mt19937_64 eng_;
};

// Random poset with 1..max_size elements: a random upper-triangular relation,
// reflexively and transitively closed.
PosetPtr random_poset(Rng& rng, int max_size);

// Random up-set (possibly empty, possibly everything).
UpSet random_up_set(Rng& rng, const PosetPtr& poset);

// Standard closure generated by a few random up-sets (plus the principals,
// the whole carrier and all intersections, supplied by from_family).
ClosureOperator random_standard_closure(Rng& rng, const PosetPtr& poset, int seeds = 2);

// Expansion with one unary op "u" and one binary op "f", isotone by
// construction: tables are filled value by value from the choices compatible
// with the already filled entries, falling back to identity/projection when a
// fill paints itself into a corner.
PosetExpansion random_isotone_expansion(Rng& rng, const PosetPtr& poset);

// Two terms over the same variables, each variable occurring exactly once in
// each term (so both are linear), depth at most max_depth.
std::pair<Term, Term> random_linear_term_pair(Rng& rng, const Signature& sig, int max_depth,
                                              int max_vars = 3);

} // namespace odakit
