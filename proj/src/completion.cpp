#include "odakit/completion.hpp"

#include "odakit/errors.hpp"

#include <algorithm>

namespace odakit {

CompletionMap::CompletionMap(PosetPtr src, PosetPtr tgt, std::vector<int> m)
    : source(std::move(src)), target(std::move(tgt)), map(std::move(m)) {
    if (static_cast<int>(map.size()) != source->size())
        throw input_error("completion map size " + std::to_string(map.size()) +
                          " does not match source size " + std::to_string(source->size()));
    for (int v : map)
        if (v < 0 || v >= target->size())
            throw input_error("completion map image " + std::to_string(v) + " out of range");
}

CheckResult is_meet_completion(const CompletionMap& e) {
    const auto& p = *e.source;
    const auto& q = *e.target;
    if (!is_complete_lattice(q))
        throw input_error("completion target is not a complete lattice");
    for (int a = 0; a < p.size(); ++a)
        for (int b = 0; b < p.size(); ++b)
            if (p.leq(a, b) != q.leq(e.apply(a), e.apply(b)))
                return {false, "not an order embedding at ('" + p.name(a) + "','" + p.name(b) + "')"};
    for (int x = 0; x < q.size(); ++x) {
        std::vector<int> over;
        for (int a = 0; a < p.size(); ++a)
            if (q.leq(x, e.apply(a)))
                over.push_back(e.apply(a));
        auto m = q.meet_of(over); // empty set of bounds yields the top
        if (!m || *m != x)
            return {false, "element '" + q.name(x) + "' is not the meet of the images above it"};
    }
    return {};
}

namespace {

PosetPtr product_poset(const FinitePoset& q, int n, const Guards& guards) {
    std::uint64_t size = 1;
    for (int k = 0; k < n; ++k) {
        size *= static_cast<std::uint64_t>(q.size());
        if (size > guards.product)
            throw resource_error("product poset size exceeds guard " +
                                 std::to_string(guards.product));
    }
    const int m = static_cast<int>(size);
    auto decode = [&](int idx) {
        std::vector<int> t(static_cast<std::size_t>(n));
        for (int k = n - 1; k >= 0; --k) {
            t[static_cast<std::size_t>(k)] = idx % q.size();
            idx /= q.size();
        }
        return t;
    };
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        auto t = decode(i);
        std::string nm = "(";
        for (int k = 0; k < n; ++k) {
            if (k)
                nm += ",";
            nm += q.name(t[static_cast<std::size_t>(k)]);
        }
        names.push_back(nm + ")");
    }
    std::vector<std::pair<int, int>> leq;
    for (int i = 0; i < m; ++i) {
        auto ti = decode(i);
        for (int j = 0; j < m; ++j) {
            auto tj = decode(j);
            bool le = true;
            for (int k = 0; k < n && le; ++k)
                le = q.leq(ti[static_cast<std::size_t>(k)], tj[static_cast<std::size_t>(k)]);
            if (le)
                leq.emplace_back(i, j);
        }
    }
    return FinitePoset::make(std::move(names), leq);
}

int encode(const std::vector<int>& t, int base) {
    int idx = 0;
    for (int c : t)
        idx = idx * base + c;
    return idx;
}

} // namespace

CompletionMap power_map(const CompletionMap& e, int n, const Guards& guards) {
    if (n < 1)
        throw input_error("power_map needs n >= 1");
    auto ps = product_poset(*e.source, n, guards);
    auto qs = product_poset(*e.target, n, guards);
    const int np = e.source->size();
    std::vector<int> map(static_cast<std::size_t>(ps->size()));
    for (int i = 0; i < ps->size(); ++i) {
        std::vector<int> t(static_cast<std::size_t>(n));
        int idx = i;
        for (int k = n - 1; k >= 0; --k) {
            t[static_cast<std::size_t>(k)] = e.apply(idx % np);
            idx /= np;
        }
        map[static_cast<std::size_t>(i)] = encode(t, e.target->size());
    }
    return CompletionMap(ps, qs, std::move(map));
}

RestrictedProduct restrict_product(const CompletionMap& e, int n, const Guards& guards) {
    CompletionMap en = power_map(e, n, guards);
    const auto& qn = *en.target;
    auto topn = qn.top();
    if (!topn)
        throw input_error("restricted product needs a target with a top");

    std::vector<bool> keep(static_cast<std::size_t>(qn.size()), false);
    keep[static_cast<std::size_t>(*topn)] = true;
    for (int x = 0; x < qn.size(); ++x)
        for (int img : en.map)
            if (qn.leq(x, img)) {
                keep[static_cast<std::size_t>(x)] = true;
                break;
            }

    std::vector<std::string> removed;
    std::vector<std::string> names;
    std::vector<int> old_of_new;
    std::vector<int> new_of_old(static_cast<std::size_t>(qn.size()), -1);
    for (int x = 0; x < qn.size(); ++x) {
        if (!keep[static_cast<std::size_t>(x)]) {
            removed.push_back(qn.name(x));
            continue;
        }
        new_of_old[static_cast<std::size_t>(x)] = static_cast<int>(names.size());
        old_of_new.push_back(x);
        names.push_back(qn.name(x));
    }
    std::vector<std::pair<int, int>> leq;
    for (std::size_t i = 0; i < old_of_new.size(); ++i)
        for (std::size_t j = 0; j < old_of_new.size(); ++j)
            if (qn.leq(old_of_new[i], old_of_new[j]))
                leq.emplace_back(static_cast<int>(i), static_cast<int>(j));
    auto restricted = FinitePoset::make(std::move(names), leq);

    std::vector<int> map;
    map.reserve(en.map.size());
    for (int img : en.map)
        map.push_back(new_of_old[static_cast<std::size_t>(img)]);
    CompletionMap out(en.source, restricted, std::move(map));
    if (auto r = is_meet_completion(out); !r.ok)
        throw check_failure("restricted product is not a meet-completion: " + r.detail);
    return {std::move(out), std::move(removed)};
}

bool source_top_preserved(const CompletionMap& e) {
    auto pt = e.source->top();
    auto qt = e.target->top();
    return pt && qt && e.apply(*pt) == *qt;
}

} // namespace odakit
