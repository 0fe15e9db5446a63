#include "odakit/suites.hpp"

#include "odakit/closure.hpp"
#include "odakit/completion.hpp"
#include "odakit/errors.hpp"
#include "odakit/expansion.hpp"
#include "odakit/randgen.hpp"

#include <numeric>
#include <utility>

namespace odakit {

namespace {

// Relabeled copy of a completion target: perm[i] is the old index of new
// element i.  Exercises nontrivial connecting maps.
CompletionMap permute_target(Rng& rng, const CompletionMap& e) {
    const int m = e.target->size();
    std::vector<int> perm(static_cast<std::size_t>(m));
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = m - 1; i > 0; --i)
        std::swap(perm[static_cast<std::size_t>(i)],
                  perm[static_cast<std::size_t>(rng.below(i + 1))]);
    std::vector<int> inv(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i)
        inv[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = i;
    std::vector<std::string> names;
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < m; ++i) {
        names.push_back(e.target->name(perm[static_cast<std::size_t>(i)]));
        for (int j = 0; j < m; ++j)
            if (e.target->leq(perm[static_cast<std::size_t>(i)],
                              perm[static_cast<std::size_t>(j)]))
                pairs.emplace_back(i, j);
    }
    auto relabeled = FinitePoset::make(std::move(names), pairs);
    std::vector<int> map;
    map.reserve(e.map.size());
    for (int q : e.map)
        map.push_back(inv[static_cast<std::size_t>(q)]);
    return CompletionMap(e.source, relabeled, std::move(map));
}

} // namespace

SuiteReport run_correspondence_suite(std::uint64_t seed, int trials, int max_poset,
                                     const Guards& guards) {
    SuiteReport rep;
    rep.name = "correspondence";
    rep.seed = seed;
    rep.trials = trials;
    LawReport round_trip, iso, unique, invariant;
    round_trip.name = "closure-round-trip";
    round_trip.note = "the closure induced by the induced completion equals the original "
                      "closure on every up-set";
    iso.name = "connecting-map-iso";
    iso.note = "the connecting map is an order isomorphism onto the closed up-sets and sends "
               "e(p) to the principal up-set of p";
    unique.name = "connecting-iso-unique";
    unique.note = "exactly one isomorphism connects a relabeled completion back to the "
                  "canonical one (targets up to 6 elements)";
    invariant.name = "induced-closure-invariant";
    invariant.note = "relabeling the completion target does not change the induced closure";

    Rng rng(seed);
    for (int trial = 0; trial < trials; ++trial) {
        const std::string tag = "trial " + std::to_string(trial);
        auto poset = random_poset(rng, max_poset);
        auto gamma = random_standard_closure(rng, poset);
        auto canonical = completion_of_closure(gamma, guards);
        auto induced = closure_of_completion(canonical.map);
        for (const auto& s : all_up_sets(poset, guards))
            law_tally(round_trip, gamma(s) == induced(s),
                      [&] { return tag + ", S=" + s.to_string(); });

        auto relabeled = permute_target(rng, canonical.map);
        try {
            auto ciso = completion_iso(relabeled, guards);
            law_tally(iso, true, [] { return std::string(); });
            (void)ciso;
        } catch (const check_failure& ex) {
            law_tally(iso, false, [&] { return tag + ": " + ex.what(); });
        }
        if (relabeled.target->size() <= 6)
            law_tally(unique, count_connecting_isos(relabeled, canonical.map) == 1,
                      [&] { return tag; });

        auto relabeled_closure = closure_of_completion(relabeled);
        for (const auto& s : all_up_sets(poset, guards))
            law_tally(invariant, gamma(s) == relabeled_closure(s),
                      [&] { return tag + ", S=" + s.to_string(); });
    }
    rep.properties = {std::move(round_trip), std::move(iso), std::move(unique),
                      std::move(invariant)};
    return rep;
}

SuiteReport run_preservation_suite(std::uint64_t seed, int trials, int max_poset, int max_depth,
                                   const Guards& guards) {
    SuiteReport rep;
    rep.name = "preservation";
    rep.seed = seed;
    rep.trials = trials;
    LawReport equiv, pointwise, transfer;
    equiv.name = "preservation-equivalence";
    equiv.note = "phi <= psi holds in the expansion iff it holds in the full completion "
                 "(identity closure, linear terms)";
    pointwise.name = "pointwise-image-identity";
    pointwise.note = "in the full completion, lifted evaluation equals the up-closed "
                     "pointwise image at every closed tuple (linear terms)";
    transfer.name = "conditional-transfer";
    transfer.note = "when the larger term respects a random standard closure, a base "
                    "inequality carries over to that completion";

    Rng rng(seed);
    for (int trial = 0; trial < trials; ++trial) {
        auto poset = random_poset(rng, max_poset);
        auto m = random_isotone_expansion(rng, poset);
        // the biconditional and the pointwise identity are claims about the
        // full completion specifically; a proper closure can break both
        CompletedExpansion full(m, ClosureOperator::identity(poset), guards);
        auto [phi, psi] = random_linear_term_pair(rng, m.signature(), max_depth);
        auto term_pair = [&phi = std::as_const(phi), &psi = std::as_const(psi), &m] {
            std::vector<std::string> vars;
            for (int v = 0; v <= std::max(phi.max_var(), psi.max_var()); ++v)
                vars.push_back("x" + std::to_string(v));
            auto sig = m.signature();
            return phi.to_string(vars, sig) + " <= " + psi.to_string(vars, sig);
        };
        auto base = holds_inequality(m, phi, psi);
        auto lifted = holds_inequality(full, phi, psi);
        law_tally(equiv, base.holds == lifted.holds, [&] {
            return "trial " + std::to_string(trial) + ": " + term_pair() + " holds " +
                   (base.holds ? "in the expansion only" : "in the completion only") +
                   (base.holds ? (", completion witness " + lifted.witness)
                               : (", expansion witness " + base.witness));
        });
        auto phi_ok = term_respects_closure(full, phi);
        auto psi_ok = term_respects_closure(full, psi);
        law_tally(pointwise, phi_ok.ok && psi_ok.ok, [&] {
            return "trial " + std::to_string(trial) + ": " +
                   (phi_ok.ok ? psi_ok.detail : phi_ok.detail);
        });

        auto gamma = random_standard_closure(rng, poset);
        CompletedExpansion completed(m, gamma, guards);
        const bool respects = term_respects_closure(completed, psi).ok;
        InequalityResult carried{true, ""};
        if (respects && base.holds)
            carried = holds_inequality(completed, phi, psi);
        law_tally(transfer, carried.holds, [&] {
            return "trial " + std::to_string(trial) + ": " + term_pair() +
                   " holds in the expansion and the larger term respects the closure, yet " +
                   carried.witness;
        });
    }
    rep.properties = {std::move(equiv), std::move(pointwise), std::move(transfer)};
    return rep;
}

SuiteReport run_product_suite(std::uint64_t seed, int trials, const Guards& guards) {
    SuiteReport rep;
    rep.name = "product";
    rep.seed = seed;
    rep.trials = trials;
    LawReport bicond, restore;
    bicond.name = "power-biconditional";
    bicond.note = "e^n is a meet-completion iff the source top exists and is mapped to the "
                  "target top";
    restore.name = "restriction-recovers";
    restore.note = "dropping the tuples below no image tuple (keeping the top) restores a "
                   "meet-completion";

    Rng rng(seed);
    for (int trial = 0; trial < trials; ++trial) {
        const std::string tag = "trial " + std::to_string(trial);
        auto poset = random_poset(rng, 4);
        auto gamma = random_standard_closure(rng, poset);
        auto canonical = completion_of_closure(gamma, guards);
        const auto& e = canonical.map;
        const int qsize = e.target->size();
        int n = 2;
        const long long cube = static_cast<long long>(qsize) * qsize * qsize;
        if (cube <= static_cast<long long>(guards.product) && rng.chance(1, 2))
            n = 3;
        const bool top_ok = source_top_preserved(e);
        auto power = is_meet_completion(power_map(e, n, guards));
        law_tally(bicond, power.ok == top_ok, [&] {
            return tag + " (n=" + std::to_string(n) + "): top preserved " +
                   (top_ok ? "yes" : "no") + " but power " + (power.ok ? "passes" : "fails") +
                   (power.ok ? "" : " with " + power.detail);
        });
        try {
            auto restricted = restrict_product(e, 2, guards);
            law_tally(restore, true, [] { return std::string(); });
            (void)restricted;
        } catch (const check_failure& ex) {
            law_tally(restore, false, [&] { return tag + ": " + ex.what(); });
        }
    }
    rep.properties = {std::move(bicond), std::move(restore)};
    return rep;
}

} // namespace odakit
