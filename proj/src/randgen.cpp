#include "odakit/randgen.hpp"

#include "odakit/errors.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace odakit {

int Rng::below(int n) {
    if (n <= 0)
        throw input_error("Rng::below needs a positive bound");
    return static_cast<int>(eng_() % static_cast<std::uint64_t>(n));
}

PosetPtr random_poset(Rng& rng, int max_size) {
    const int n = 1 + rng.below(max_size);
    std::vector<std::vector<bool>> le(static_cast<std::size_t>(n),
                                      std::vector<bool>(static_cast<std::size_t>(n), false));
    const int density = 1 + rng.below(3); // edges kept with density/6
    for (int i = 0; i < n; ++i) {
        le[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = true;
        for (int j = i + 1; j < n; ++j)
            if (rng.below(6) < density)
                le[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
    }
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if (le[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)])
                for (int j = 0; j < n; ++j)
                    if (le[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)])
                        le[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
    std::vector<std::string> names;
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i) {
        names.push_back("e" + std::to_string(i));
        for (int j = 0; j < n; ++j)
            if (le[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])
                pairs.emplace_back(i, j);
    }
    return FinitePoset::make(std::move(names), pairs);
}

UpSet random_up_set(Rng& rng, const PosetPtr& poset) {
    std::vector<int> gens;
    for (int i = 0; i < poset->size(); ++i)
        if (rng.chance(1, 3))
            gens.push_back(i);
    return UpSet(poset, gens);
}

ClosureOperator random_standard_closure(Rng& rng, const PosetPtr& poset, int seeds) {
    std::vector<UpSet> family;
    for (int i = 0; i < seeds; ++i)
        family.push_back(random_up_set(rng, poset));
    return ClosureOperator::from_family(poset, std::move(family), "random-family");
}

namespace {

// Fill one op table so that comparable tuples get comparable values; returns
// false when some tuple ends up with no compatible value.
bool fill_isotone(Rng& rng, const FinitePoset& p, int arity, std::vector<int>& table) {
    const int n = p.size();
    int count = 1;
    for (int i = 0; i < arity; ++i)
        count *= n;
    auto tuple_of = [&](int idx) {
        std::vector<int> t(static_cast<std::size_t>(arity));
        for (int i = arity - 1; i >= 0; --i) {
            t[static_cast<std::size_t>(i)] = idx % n;
            idx /= n;
        }
        return t;
    };
    auto tuple_leq = [&](const std::vector<int>& a, const std::vector<int>& b) {
        for (int i = 0; i < arity; ++i)
            if (!p.leq(a[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(i)]))
                return false;
        return true;
    };
    table.assign(static_cast<std::size_t>(count), -1);
    std::vector<std::vector<int>> tuples;
    tuples.reserve(static_cast<std::size_t>(count));
    for (int idx = 0; idx < count; ++idx)
        tuples.push_back(tuple_of(idx));
    for (int idx = 0; idx < count; ++idx) {
        std::vector<int> valid;
        for (int v = 0; v < n; ++v) {
            bool ok = true;
            for (int prev = 0; prev < idx && ok; ++prev) {
                const int pv = table[static_cast<std::size_t>(prev)];
                if (tuple_leq(tuples[static_cast<std::size_t>(prev)],
                              tuples[static_cast<std::size_t>(idx)]) &&
                    !p.leq(pv, v))
                    ok = false;
                if (tuple_leq(tuples[static_cast<std::size_t>(idx)],
                              tuples[static_cast<std::size_t>(prev)]) &&
                    !p.leq(v, pv))
                    ok = false;
            }
            if (ok)
                valid.push_back(v);
        }
        if (valid.empty())
            return false;
        table[static_cast<std::size_t>(idx)] =
            valid[static_cast<std::size_t>(rng.below(static_cast<int>(valid.size())))];
    }
    return true;
}

} // namespace

PosetExpansion random_isotone_expansion(Rng& rng, const PosetPtr& poset) {
    const int n = poset->size();
    PosetExpansion::Op unary{"u", 1, {}};
    PosetExpansion::Op binary{"f", 2, {}};
    for (int attempt = 0; attempt < 64; ++attempt)
        if (fill_isotone(rng, *poset, 1, unary.table))
            break;
    if (unary.table.empty() || unary.table.back() < 0) {
        unary.table.resize(static_cast<std::size_t>(n));
        std::iota(unary.table.begin(), unary.table.end(), 0); // identity fallback
    }
    for (int attempt = 0; attempt < 64; ++attempt)
        if (fill_isotone(rng, *poset, 2, binary.table))
            break;
    if (binary.table.empty() || binary.table.back() < 0) {
        binary.table.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                binary.table[static_cast<std::size_t>(x * n + y)] = x; // projection fallback
    }
    return PosetExpansion(poset, {unary, binary});
}

namespace {

Term build_linear(Rng& rng, const Signature& sig, std::vector<int> vars, int budget) {
    std::vector<int> unary_ops, binary_ops;
    for (std::size_t i = 0; i < sig.size(); ++i) {
        if (sig[i].arity == 1)
            unary_ops.push_back(static_cast<int>(i));
        if (sig[i].arity == 2)
            binary_ops.push_back(static_cast<int>(i));
    }
    if (vars.size() == 1) {
        Term t = Term::variable(vars[0]);
        int depth = 1;
        while (!unary_ops.empty() && depth < budget && rng.chance(1, 3)) {
            t = Term::apply(unary_ops[static_cast<std::size_t>(
                                rng.below(static_cast<int>(unary_ops.size())))],
                            {t});
            ++depth;
        }
        return t;
    }
    // split the variables in two so that both halves fit in budget-1 levels
    const int size = static_cast<int>(vars.size());
    const int cap = budget >= 2 ? (1 << (budget - 2)) : 1;
    const int lo = std::max(1, size - cap);
    const int hi = std::min(size - 1, cap);
    const int cut = lo + (hi > lo ? rng.below(hi - lo + 1) : 0);
    std::vector<int> left(vars.begin(), vars.begin() + cut);
    std::vector<int> right(vars.begin() + cut, vars.end());
    Term l = build_linear(rng, sig, std::move(left), budget - 1);
    Term r = build_linear(rng, sig, std::move(right), budget - 1);
    return Term::apply(binary_ops[static_cast<std::size_t>(
                           rng.below(static_cast<int>(binary_ops.size())))],
                       {std::move(l), std::move(r)});
}

} // namespace

std::pair<Term, Term> random_linear_term_pair(Rng& rng, const Signature& sig, int max_depth,
                                              int max_vars) {
    bool has_binary = false;
    for (const auto& op : sig)
        if (op.arity == 2)
            has_binary = true;
    int cap = max_depth >= 1 ? (1 << (max_depth - 1)) : 1;
    if (!has_binary)
        cap = 1;
    const int nv = 1 + rng.below(std::max(1, std::min(max_vars, cap)));
    auto shuffled = [&] {
        std::vector<int> v(static_cast<std::size_t>(nv));
        std::iota(v.begin(), v.end(), 0);
        for (int i = nv - 1; i > 0; --i)
            std::swap(v[static_cast<std::size_t>(i)],
                      v[static_cast<std::size_t>(rng.below(i + 1))]);
        return v;
    };
    Term phi = build_linear(rng, sig, shuffled(), max_depth);
    Term psi = build_linear(rng, sig, shuffled(), max_depth);
    return {std::move(phi), std::move(psi)};
}

} // namespace odakit
