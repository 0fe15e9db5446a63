#include "odakit/closure.hpp"

#include "odakit/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace odakit {

ClosureOperator::ClosureOperator(PosetPtr parent, Fn fn, std::string label)
    : parent_(std::move(parent)), fn_(std::move(fn)), label_(std::move(label)) {
    if (!fn_)
        throw input_error("closure operator needs a function");
}

UpSet ClosureOperator::operator()(const UpSet& s) const {
    if (s.poset().get() != parent_.get() && !s.poset()->same_structure(*parent_))
        throw input_error("up-set does not belong to the closure's poset");
    return fn_(s);
}

ClosureOperator ClosureOperator::identity(PosetPtr parent) {
    return ClosureOperator(parent, [](const UpSet& s) { return s; }, "identity");
}

ClosureOperator ClosureOperator::from_family(PosetPtr parent, std::vector<UpSet> family,
                                             std::string label) {
    for (int p = 0; p < parent->size(); ++p)
        family.push_back(UpSet::principal(parent, p));
    family.push_back(UpSet::whole(parent));
    // close under pairwise intersection (finite, so this reaches the full
    // intersection closure)
    for (bool grew = true; grew;) {
        grew = false;
        const std::size_t n = family.size();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                UpSet meet = family[i].intersect(family[j]);
                bool known = false;
                for (const auto& f : family)
                    if (f == meet) {
                        known = true;
                        break;
                    }
                if (!known) {
                    family.push_back(meet);
                    grew = true;
                }
            }
    }
    std::sort(family.begin(), family.end(),
              [](const UpSet& a, const UpSet& b) { return a.before(b); });
    family.erase(std::unique(family.begin(), family.end()), family.end());
    auto fam = std::make_shared<std::vector<UpSet>>(std::move(family));
    auto fn = [fam, parent](const UpSet& s) {
        // smallest family member containing s = intersection of all of them
        UpSet acc = UpSet::whole(parent);
        for (const auto& f : *fam)
            if (s.subset_of(f))
                acc = acc.intersect(f);
        return acc;
    };
    return ClosureOperator(parent, std::move(fn), std::move(label));
}

CheckResult is_standard_closure(const ClosureOperator& gamma, const std::vector<UpSet>& sample) {
    for (const auto& s : sample) {
        UpSet c = gamma(s);
        if (!s.subset_of(c))
            return {false, "not extensive at " + s.to_string()};
        if (gamma(c) != c)
            return {false, "not idempotent at " + s.to_string()};
    }
    for (const auto& s : sample)
        for (const auto& t : sample)
            if (s.subset_of(t) && !gamma(s).subset_of(gamma(t)))
                return {false, "not isotone at " + s.to_string() + " <= " + t.to_string()};
    for (int p = 0; p < gamma.parent()->size(); ++p) {
        UpSet pr = UpSet::principal(gamma.parent(), p);
        if (gamma(pr) != pr)
            return {false, "principal " + pr.to_string() + " not closed"};
    }
    return {};
}

CheckResult is_standard_closure(const ClosureOperator& gamma, const Guards& guards) {
    return is_standard_closure(gamma, all_up_sets(gamma.parent(), guards));
}

ClosureOperator closure_of_completion(const CompletionMap& e) {
    if (auto r = is_meet_completion(e); !r.ok)
        throw input_error("not a meet-completion: " + r.detail);
    auto src = e.source;
    auto tgt = e.target;
    auto map = e.map;
    auto fn = [src, tgt, map](const UpSet& s) {
        // meet of e[S] is the meet over the generating antichain
        std::vector<int> imgs;
        for (int m : s.minimals())
            imgs.push_back(map[static_cast<std::size_t>(m)]);
        auto q = tgt->meet_of(imgs);
        if (!q)
            throw check_failure("meet missing in completion target");
        std::vector<int> gens;
        for (int p = 0; p < src->size(); ++p)
            if (tgt->leq(*q, map[static_cast<std::size_t>(p)]))
                gens.push_back(p);
        return UpSet(src, gens);
    };
    return ClosureOperator(e.source, std::move(fn), "induced");
}

int ClosureCompletion::index_of(const UpSet& s) const {
    for (std::size_t i = 0; i < closed.size(); ++i)
        if (closed[i] == s)
            return static_cast<int>(i);
    return -1;
}

ClosureCompletion completion_of_closure(const ClosureOperator& gamma, const Guards& guards) {
    auto parent = gamma.parent();
    std::vector<UpSet> closed;
    for (const auto& s : all_up_sets(parent, guards))
        if (gamma(s) == s)
            closed.push_back(s);

    std::vector<std::string> names;
    names.reserve(closed.size());
    for (const auto& c : closed)
        names.push_back(c.to_string());
    std::vector<std::pair<int, int>> leq;
    const int m = static_cast<int>(closed.size());
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (closed[static_cast<std::size_t>(i)].superset_of(closed[static_cast<std::size_t>(j)]))
                leq.emplace_back(i, j); // reverse inclusion
    auto target = FinitePoset::make(std::move(names), leq);

    std::vector<int> map(static_cast<std::size_t>(parent->size()), -1);
    for (int p = 0; p < parent->size(); ++p) {
        UpSet pr = UpSet::principal(parent, p);
        for (int i = 0; i < m; ++i)
            if (closed[static_cast<std::size_t>(i)] == pr) {
                map[static_cast<std::size_t>(p)] = i;
                break;
            }
        if (map[static_cast<std::size_t>(p)] < 0)
            throw input_error("closure is not standard: principal " + pr.to_string() +
                              " is not closed");
    }
    return {CompletionMap(parent, target, std::move(map)), std::move(closed)};
}

CompletionIso completion_iso(const CompletionMap& e, const Guards& guards) {
    if (auto r = is_meet_completion(e); !r.ok)
        throw input_error("not a meet-completion: " + r.detail);
    const auto& p = *e.source;
    const auto& q = *e.target;

    std::vector<UpSet> h;
    h.reserve(static_cast<std::size_t>(q.size()));
    for (int x = 0; x < q.size(); ++x) {
        std::vector<int> gens;
        for (int a = 0; a < p.size(); ++a)
            if (q.leq(x, e.apply(a)))
                gens.push_back(a);
        h.emplace_back(e.source, gens);
    }

    auto induced = completion_of_closure(closure_of_completion(e), guards);

    // order isomorphism onto the closed sets, under reverse inclusion
    for (int x = 0; x < q.size(); ++x)
        if (induced.index_of(h[static_cast<std::size_t>(x)]) < 0)
            throw check_failure("h image " + h[static_cast<std::size_t>(x)].to_string() +
                                " is not closed");
    std::vector<bool> hit(induced.closed.size(), false);
    for (int x = 0; x < q.size(); ++x) {
        int i = induced.index_of(h[static_cast<std::size_t>(x)]);
        if (hit[static_cast<std::size_t>(i)])
            throw check_failure("h is not injective at '" + q.name(x) + "'");
        hit[static_cast<std::size_t>(i)] = true;
    }
    for (std::size_t i = 0; i < hit.size(); ++i)
        if (!hit[i])
            throw check_failure("h misses closed set " + induced.closed[i].to_string());
    for (int x = 0; x < q.size(); ++x)
        for (int y = 0; y < q.size(); ++y)
            if (q.leq(x, y) != h[static_cast<std::size_t>(x)].superset_of(h[static_cast<std::size_t>(y)]))
                throw check_failure("h does not preserve order at ('" + q.name(x) + "','" +
                                    q.name(y) + "')");
    // triangle: h(e(p)) is the principal up-set of p
    for (int a = 0; a < p.size(); ++a)
        if (h[static_cast<std::size_t>(e.apply(a))] != UpSet::principal(e.source, a))
            throw check_failure("h(e('" + p.name(a) + "')) is not the principal up-set");

    return {e, std::move(h), std::move(induced)};
}

int CompletionIso::h_inverse(const UpSet& closed_set) const {
    std::vector<int> imgs;
    for (int m : closed_set.minimals())
        imgs.push_back(e.map[static_cast<std::size_t>(m)]);
    auto q = e.target->meet_of(imgs);
    if (!q)
        throw check_failure("meet missing in completion target");
    return *q;
}

int count_connecting_isos(const CompletionMap& e1, const CompletionMap& e2) {
    const auto& q1 = *e1.target;
    const auto& q2 = *e2.target;
    if (q1.size() != q2.size())
        return 0;
    const int n = q1.size();
    if (n > 8)
        throw resource_error("exhaustive isomorphism search limited to 8 elements");
    if (e1.source->size() != e2.source->size())
        throw input_error("completions of different sources");

    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    int count = 0;
    do {
        bool ok = true;
        for (int p = 0; ok && p < e1.source->size(); ++p)
            ok = perm[static_cast<std::size_t>(e1.apply(p))] == e2.apply(p);
        for (int x = 0; ok && x < n; ++x)
            for (int y = 0; ok && y < n; ++y)
                ok = q1.leq(x, y) ==
                     q2.leq(perm[static_cast<std::size_t>(x)], perm[static_cast<std::size_t>(y)]);
        if (ok)
            ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

} // namespace odakit
