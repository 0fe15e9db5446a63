#include "odakit/oda_completion.hpp"

#include "odakit/completion.hpp"
#include "odakit/errors.hpp"

#include <algorithm>
#include <utility>

namespace odakit {

namespace {

std::vector<BinRel> minimal_antichain(std::vector<BinRel> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    std::vector<BinRel> out;
    for (const auto& r : v) {
        bool minimal = true;
        for (const auto& s : v)
            if (s != r && s.subset_of(r)) {
                minimal = false;
                break;
            }
        if (minimal)
            out.push_back(r);
    }
    return out;
}

void tally(LawReport& r, bool ok, auto&& describe) { law_tally(r, ok, describe); }

} // namespace

RelUpSet::RelUpSet(int base, std::vector<BinRel> generators) : base_(base) {
    if (base < 1 || base > BinRel::max_base)
        throw input_error("relation base out of range");
    for (const auto& g : generators)
        if (g.base() != base)
            throw input_error("relation base mismatch in up-set generator");
    min_ = minimal_antichain(std::move(generators));
}

RelUpSet RelUpSet::empty(int base) { return RelUpSet(base, {}); }

RelUpSet RelUpSet::principal(const BinRel& r) { return RelUpSet(r.base(), {r}); }

RelUpSet RelUpSet::zero_up(int base) { return principal(BinRel::zero(base)); }

bool RelUpSet::member(const BinRel& r) const {
    for (const auto& m : min_)
        if (m.subset_of(r))
            return true;
    return false;
}

bool RelUpSet::subset_of(const RelUpSet& other) const {
    if (base_ != other.base_)
        throw input_error("up-sets over different bases");
    for (const auto& m : min_)
        if (!other.member(m))
            return false;
    return true;
}

RelUpSet RelUpSet::union_with(const RelUpSet& other) const {
    if (base_ != other.base_)
        throw input_error("up-sets over different bases");
    std::vector<BinRel> gens = min_;
    gens.insert(gens.end(), other.min_.begin(), other.min_.end());
    return RelUpSet(base_, std::move(gens));
}

std::string RelUpSet::to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < min_.size(); ++i) {
        if (i)
            out += ", ";
        out += min_[i].to_string();
    }
    out += "}^";
    return out;
}

bool rel_is_closed(const RelUpSet& x) {
    const auto& m = x.minimals();
    std::vector<BinRel> doms, rans;
    doms.reserve(m.size());
    rans.reserve(m.size());
    for (const auto& r : m) {
        doms.push_back(r.domain());
        rans.push_back(r.range());
    }
    for (const auto& d : doms)
        for (const auto& y : m)
            for (const auto& r : rans)
                if (!x.member(d.compose(y).compose(r)))
                    return false;
    return true;
}

RelUpSet rel_closure(const RelUpSet& x, RelClosureTrace* trace, const Guards& guards) {
    RelUpSet cur = x;
    if (trace)
        trace->steps = {cur};
    for (;;) {
        const auto m = cur.minimals();
        std::vector<BinRel> gens = m;
        std::vector<BinRel> doms, rans;
        doms.reserve(m.size());
        rans.reserve(m.size());
        for (const auto& r : m) {
            doms.push_back(r.domain());
            rans.push_back(r.range());
        }
        for (const auto& d : doms)
            for (const auto& y : m)
                for (const auto& r : rans)
                    gens.push_back(d.compose(y).compose(r));
        RelUpSet next(cur.base(), std::move(gens));
        if (next.minimals().size() > guards.antichain)
            throw resource_error("closure antichain exceeds guard " +
                                 std::to_string(guards.antichain));
        if (next == cur)
            return cur;
        if (trace)
            trace->steps.push_back(next);
        cur = std::move(next);
    }
}

RelUpSet rel_comp_c(const RelUpSet& x, const RelUpSet& y, const Guards& guards) {
    if (x.base() != y.base())
        throw input_error("up-sets over different bases");
    std::vector<BinRel> gens;
    gens.reserve(x.minimals().size() * y.minimals().size());
    for (const auto& mx : x.minimals())
        for (const auto& my : y.minimals())
            gens.push_back(mx.compose(my));
    return rel_closure(RelUpSet(x.base(), std::move(gens)), nullptr, guards);
}

RelUpSet rel_dom_c(const RelUpSet& x, const Guards& guards) {
    std::vector<BinRel> gens;
    gens.reserve(x.minimals().size());
    for (const auto& m : x.minimals())
        gens.push_back(m.domain());
    return rel_closure(RelUpSet(x.base(), std::move(gens)), nullptr, guards);
}

RelUpSet rel_ran_c(const RelUpSet& x, const Guards& guards) {
    std::vector<BinRel> gens;
    gens.reserve(x.minimals().size());
    for (const auto& m : x.minimals())
        gens.push_back(m.range());
    return rel_closure(RelUpSet(x.base(), std::move(gens)), nullptr, guards);
}

RelUpSet rel_conv_image(const RelUpSet& x) {
    std::vector<BinRel> gens;
    gens.reserve(x.minimals().size());
    for (const auto& m : x.minimals())
        gens.push_back(m.converse());
    return RelUpSet(x.base(), std::move(gens));
}

RelUpSet rel_conv_c(const RelUpSet& x, const Guards& guards) {
    return rel_closure(rel_conv_image(x), nullptr, guards);
}

// ---------------------------------------------------------------------------

bool alg_is_closed(const AbstractODA& a, const UpSet& s) {
    const auto& m = s.minimals();
    for (int x : m)
        for (int y : m)
            for (int z : m)
                if (!s.contains(a.comp(a.comp(a.dom(x), y), a.ran(z))))
                    return false;
    return true;
}

UpSet alg_closure(const AbstractODA& a, const UpSet& s, std::vector<UpSet>* trace) {
    UpSet cur = s;
    if (trace) trace->push_back(cur);
    for (;;) {
        const auto m = cur.minimals();
        std::vector<int> gens = m;
        for (int x : m)
            for (int y : m)
                for (int z : m)
                    gens.push_back(a.comp(a.comp(a.dom(x), y), a.ran(z)));
        UpSet next(a.poset(), gens);
        if (next == cur)
            return cur;
        cur = std::move(next);
        if (trace) trace->push_back(cur);
    }
}

UpSet alg_comp_c(const AbstractODA& a, const UpSet& x, const UpSet& y) {
    std::vector<int> gens;
    gens.reserve(x.minimals().size() * y.minimals().size());
    for (int mx : x.minimals())
        for (int my : y.minimals())
            gens.push_back(a.comp(mx, my));
    return alg_closure(a, UpSet(a.poset(), gens));
}

UpSet alg_dom_c(const AbstractODA& a, const UpSet& x) {
    std::vector<int> gens;
    for (int m : x.minimals())
        gens.push_back(a.dom(m));
    return alg_closure(a, UpSet(a.poset(), gens));
}

UpSet alg_ran_c(const AbstractODA& a, const UpSet& x) {
    std::vector<int> gens;
    for (int m : x.minimals())
        gens.push_back(a.ran(m));
    return alg_closure(a, UpSet(a.poset(), gens));
}

UpSet alg_conv_image(const AbstractODA& a, const UpSet& x) {
    std::vector<int> gens;
    for (int m : x.minimals())
        gens.push_back(a.conv(m));
    return UpSet(a.poset(), gens);
}

UpSet alg_conv_c(const AbstractODA& a, const UpSet& x) {
    return alg_closure(a, alg_conv_image(a, x));
}

UpSet alg_empty(const AbstractODA& a) { return UpSet::empty(a.poset()); }

UpSet alg_zero_up(const AbstractODA& a) { return UpSet::principal(a.poset(), a.zero()); }

UpSet alg_id_up(const AbstractODA& a) { return UpSet::principal(a.poset(), a.id()); }

std::vector<UpSet> closed_sets(const AbstractODA& a, const Guards& guards) {
    std::vector<UpSet> out;
    for (auto& s : all_up_sets(a.poset(), guards))
        if (alg_is_closed(a, s))
            out.push_back(std::move(s));
    return out;
}

int CompletionTables::index_of(const UpSet& s) const {
    auto it = index.find(s.minimals());
    return it == index.end() ? -1 : it->second;
}

bool CompletionTables::leq(int x, int y) const {
    return closed[static_cast<std::size_t>(x)].superset_of(closed[static_cast<std::size_t>(y)]);
}

CompletionTables completion_tables(const AbstractODA& a, const Guards& guards) {
    CompletionTables t;
    t.closed = closed_sets(a, guards);
    const int n = t.size();
    for (int i = 0; i < n; ++i)
        t.index.emplace(t.closed[static_cast<std::size_t>(i)].minimals(), i);
    auto idx = [&](const UpSet& s, const char* what) {
        int i = t.index_of(s);
        if (i < 0)
            throw check_failure(std::string("lifted ") + what +
                                " left the closed family at " + s.to_string());
        return i;
    };
    t.comp.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    t.conv.resize(static_cast<std::size_t>(n));
    t.dom.resize(static_cast<std::size_t>(n));
    t.ran.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const UpSet& x = t.closed[static_cast<std::size_t>(i)];
        t.conv[static_cast<std::size_t>(i)] = idx(alg_conv_c(a, x), "conv");
        t.dom[static_cast<std::size_t>(i)] = idx(alg_dom_c(a, x), "dom");
        t.ran[static_cast<std::size_t>(i)] = idx(alg_ran_c(a, x), "ran");
        for (int j = 0; j < n; ++j)
            t.comp[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                idx(alg_comp_c(a, x, t.closed[static_cast<std::size_t>(j)]), "comp");
    }
    t.empty_idx = idx(alg_empty(a), "empty");
    t.zero_idx = idx(alg_zero_up(a), "zero");
    t.id_idx = idx(alg_id_up(a), "id");
    return t;
}

AbstractODA completion_algebra(const CompletionTables& t) {
    const int n = t.size();
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(n));
    for (const auto& s : t.closed)
        names.push_back(s.to_string());
    std::vector<std::pair<int, int>> leq;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (t.leq(i, j))
                leq.emplace_back(i, j);
    return AbstractODA(std::move(names), leq, t.comp, t.conv, t.dom, t.ran, t.zero_idx,
                       t.id_idx);
}

AxiomReport check_completion_axioms(const AbstractODA& a, const Guards& guards) {
    auto base_rep = check_axioms(a);
    for (const auto& l : base_rep.laws)
        if (l.required && !l.pass)
            throw input_error("input algebra violates required law '" + l.name + "' at " +
                              l.witness);

    auto t = completion_tables(a, guards);
    AbstractODA c = completion_algebra(t);
    AxiomReport rep = check_axioms(c);

    static const char* const demoted[] = {"D2",        "D2-dual", "D6",
                                          "D6-dual",   "D8",      "D8-dual",
                                          "comp-assoc", "dom-exchange", "ran-exchange"};
    for (auto& l : rep.laws)
        for (const char* d : demoted)
            if (l.name == d)
                l.required = false;

    const int n = t.size();
    auto nm = [&](int i) { return "A=" + t.closed[static_cast<std::size_t>(i)].to_string(); };
    auto replace = [&](const std::string& name, const std::string& note, auto&& body) {
        for (auto& l : rep.laws)
            if (l.name == name) {
                LawReport fresh;
                fresh.name = name;
                fresh.note = note;
                body(fresh);
                l = std::move(fresh);
                return;
            }
    };

    // The empty closed set annihilates every lifted operation, so the laws
    // bounding dom/ran by id and absorbing into zero quantify over nonempty
    // closed sets; its behaviour is pinned down separately below.
    replace("D1", "dom(A) = conv(dom(A)); dom(A) <= id over nonempty A; dom(id) = id",
            [&](LawReport& r) {
                tally(r, t.dom[static_cast<std::size_t>(t.id_idx)] == t.id_idx,
                      [] { return std::string("dom(id) != id"); });
                for (int i = 0; i < n; ++i) {
                    tally(r, t.conv[static_cast<std::size_t>(t.dom[static_cast<std::size_t>(i)])] ==
                                 t.dom[static_cast<std::size_t>(i)],
                          [&] { return nm(i); });
                    if (i != t.empty_idx)
                        tally(r, t.leq(t.dom[static_cast<std::size_t>(i)], t.id_idx),
                              [&] { return nm(i); });
                }
            });
    replace("D1-dual", "ran(A) = conv(ran(A)); ran(A) <= id over nonempty A; ran(id) = id",
            [&](LawReport& r) {
                tally(r, t.ran[static_cast<std::size_t>(t.id_idx)] == t.id_idx,
                      [] { return std::string("ran(id) != id"); });
                for (int i = 0; i < n; ++i) {
                    tally(r, t.conv[static_cast<std::size_t>(t.ran[static_cast<std::size_t>(i)])] ==
                                 t.ran[static_cast<std::size_t>(i)],
                          [&] { return nm(i); });
                    if (i != t.empty_idx)
                        tally(r, t.leq(t.ran[static_cast<std::size_t>(i)], t.id_idx),
                              [&] { return nm(i); });
                }
            });
    replace("normality",
            "conv/dom/ran fix the bottom; bottom absorbs composition with nonempty A",
            [&](LawReport& r) {
                const auto z = static_cast<std::size_t>(t.zero_idx);
                tally(r,
                      t.conv[z] == t.zero_idx && t.dom[z] == t.zero_idx && t.ran[z] == t.zero_idx,
                      [] { return std::string("at bottom"); });
                for (int i = 0; i < n; ++i)
                    if (i != t.empty_idx)
                        tally(r,
                              t.comp[z][static_cast<std::size_t>(i)] == t.zero_idx &&
                                  t.comp[static_cast<std::size_t>(i)][z] == t.zero_idx,
                              [&] { return nm(i); });
            });

    {
        LawReport r;
        r.name = "closed-under-lifted-ops";
        r.note = "every lifted comp/conv/dom/ran of closed sets is closed (verified while "
                 "building the operation tables)";
        r.checked = static_cast<long long>(n) * n + 3LL * n;
        rep.laws.insert(rep.laws.begin(), std::move(r));
    }
    {
        LawReport r;
        r.name = "empty-annihilator";
        r.note = "the empty closed set absorbs every lifted operation";
        const auto e = static_cast<std::size_t>(t.empty_idx);
        tally(r, t.conv[e] == t.empty_idx && t.dom[e] == t.empty_idx && t.ran[e] == t.empty_idx,
              [] { return std::string("unary at empty"); });
        for (int i = 0; i < n; ++i)
            tally(r,
                  t.comp[e][static_cast<std::size_t>(i)] == t.empty_idx &&
                      t.comp[static_cast<std::size_t>(i)][e] == t.empty_idx,
                  [&] { return nm(i); });
        rep.laws.push_back(std::move(r));
    }
    {
        LawReport r;
        r.name = "closure-conv-commute";
        r.note = "conv(closure(S)) = closure(conv(S)) for every up-set S, closed or not";
        for (const auto& s : all_up_sets(a.poset(), guards))
            tally(r,
                  alg_conv_image(a, alg_closure(a, s)) == alg_closure(a, alg_conv_image(a, s)),
                  [&] { return "S=" + s.to_string(); });
        rep.laws.push_back(std::move(r));
    }
    {
        LawReport r;
        r.name = "union-lemma";
        r.note = "closed sets sharing lifted dom and ran have a closed union";
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (t.dom[static_cast<std::size_t>(i)] == t.dom[static_cast<std::size_t>(j)] &&
                    t.ran[static_cast<std::size_t>(i)] == t.ran[static_cast<std::size_t>(j)])
                    tally(r,
                          alg_is_closed(a, t.closed[static_cast<std::size_t>(i)].union_with(
                                               t.closed[static_cast<std::size_t>(j)])),
                          [&] { return nm(i) + ", B=" +
                                       t.closed[static_cast<std::size_t>(j)].to_string(); });
        rep.laws.push_back(std::move(r));
    }
    return rep;
}

// ---------------------------------------------------------------------------

std::vector<std::string> example_names() { return {"d2", "d6", "assoc", "product"}; }

namespace {

void add_check(ExampleReport& rep, const std::string& name, bool pass,
               const std::string& detail) {
    LawReport r;
    r.name = name;
    r.pass = pass;
    r.checked = 1;
    if (pass)
        r.note = detail;
    else {
        r.violations = 1;
        r.witness = detail;
    }
    rep.checks.push_back(std::move(r));
}

ExampleReport example_d2(const Guards& guards) {
    ExampleReport rep;
    rep.name = "d2";
    rep.headline = "dom(A) <= A;conv(A) fails in the completion: a composite of generators "
                   "escapes the lifted domain";
    BinRel x(4), y(4);
    x.set(0, 1);
    x.set(2, 3);
    y.set(0, 3);
    y.set(2, 1);
    RelUpSet A(4, {x, y});
    add_check(rep, "generators-share-dom-ran",
              x.domain() == y.domain() && x.range() == y.range(),
              "dom " + x.domain().to_string() + ", ran " + x.range().to_string());
    add_check(rep, "A-closed", rel_is_closed(A), "A = " + A.to_string());
    BinRel xy = x.compose(y.converse());
    BinRel expect(4);
    expect.set(0, 2);
    expect.set(2, 0);
    add_check(rep, "cross-composite", xy == expect, "x;conv(y) = " + xy.to_string());
    RelUpSet domA = rel_dom_c(A, guards);
    BinRel diag(4);
    diag.set(0, 0);
    diag.set(2, 2);
    add_check(rep, "dom-A-antichain", domA == RelUpSet::principal(diag),
              "dom(A) = " + domA.to_string());
    RelUpSet prod = rel_comp_c(A, rel_conv_c(A, guards), guards);
    add_check(rep, "composite-inside-product", prod.member(xy),
              "A;conv(A) = " + prod.to_string());
    add_check(rep, "composite-outside-domain", !domA.member(xy),
              "dom(A) = " + domA.to_string());
    add_check(rep, "D2-fails", !prod.subset_of(domA),
              "dom(A) is not below A;conv(A) in the completion order");
    return rep;
}

ExampleReport example_d6(const Guards& guards) {
    ExampleReport rep;
    rep.name = "d6";
    rep.headline = "dom(A;B) = dom(A;dom(B)) fails in the completion: the left side collapses "
                   "to the bottom";
    const int k = 2;
    BinRel swap(k), aa(k);
    swap.set(0, 1);
    swap.set(1, 0);
    aa.set(0, 0);
    RelUpSet A = RelUpSet::principal(aa);
    RelUpSet B(k, {swap, BinRel::identity(k)});
    add_check(rep, "A-closed", rel_is_closed(A), "A = " + A.to_string());
    add_check(rep, "B-closed", rel_is_closed(B), "B = " + B.to_string());
    RelUpSet domB = rel_dom_c(B, guards);
    add_check(rep, "dom-B-is-id", domB == RelUpSet::principal(BinRel::identity(k)),
              "dom(B) = " + domB.to_string());
    RelUpSet right_inner = rel_comp_c(A, domB, guards);
    add_check(rep, "A-comp-domB-is-A", right_inner == A,
              "A;dom(B) = " + right_inner.to_string());
    RelUpSet AB = rel_comp_c(A, B, guards);
    add_check(rep, "A-comp-B-collapses", AB == RelUpSet::zero_up(k),
              "A;B = " + AB.to_string());
    RelUpSet lhs = rel_dom_c(AB, guards);
    RelUpSet rhs = rel_dom_c(right_inner, guards);
    add_check(rep, "dom-of-collapse-is-bottom", lhs == RelUpSet::zero_up(k),
              "dom(A;B) = " + lhs.to_string());
    add_check(rep, "dom-of-A-comp-domB", rhs == A, "dom(A;dom(B)) = " + rhs.to_string());
    add_check(rep, "D6-fails", lhs != rhs,
              "dom(A;B) = " + lhs.to_string() + ", dom(A;dom(B)) = " + rhs.to_string());
    return rep;
}

ExampleReport example_assoc(const Guards& guards) {
    ExampleReport rep;
    rep.name = "assoc";
    rep.headline = "lifted composition is not associative, even with the left factor below id";
    const int k = 5;
    BinRel x(k), y(k), z(k), u(k);
    x.set(0, 0);
    y.set(0, 1);
    y.set(2, 3);
    z.set(0, 3);
    z.set(2, 1);
    u.set(1, 4);
    u.set(3, 4);
    RelUpSet A = RelUpSet::principal(x);
    RelUpSet B(k, {y, z});
    RelUpSet C = RelUpSet::principal(u);
    add_check(rep, "A-below-id", RelUpSet::principal(BinRel::identity(k)).subset_of(A),
              "A contains the up-set of id");
    add_check(rep, "A-closed", rel_is_closed(A), "A = " + A.to_string());
    add_check(rep, "B-closed", rel_is_closed(B), "B = " + B.to_string());
    add_check(rep, "C-closed", rel_is_closed(C), "C = " + C.to_string());
    RelUpSet AB = rel_comp_c(A, B, guards);
    add_check(rep, "A-comp-B-collapses", AB == RelUpSet::zero_up(k),
              "A;B = " + AB.to_string());
    RelUpSet BC = rel_comp_c(B, C, guards);
    BinRel yu(k);
    yu.set(0, 4);
    yu.set(2, 4);
    add_check(rep, "B-comp-C", BC == RelUpSet::principal(yu), "B;C = " + BC.to_string());
    RelUpSet lhs = rel_comp_c(AB, C, guards);
    RelUpSet rhs = rel_comp_c(A, BC, guards);
    add_check(rep, "left-collapses", lhs == RelUpSet::zero_up(k),
              "(A;B);C = " + lhs.to_string());
    BinRel xe(k);
    xe.set(0, 4);
    add_check(rep, "right-stays-principal", rhs == RelUpSet::principal(xe),
              "A;(B;C) = " + rhs.to_string());
    add_check(rep, "assoc-fails", lhs != rhs, "the two associations differ");
    add_check(rep, "weak-inequality-holds", rhs.subset_of(lhs),
              "(A;B);C lies below A;(B;C) in the completion order");
    return rep;
}

ExampleReport example_product(const Guards& guards) {
    ExampleReport rep;
    rep.name = "product";
    rep.headline = "squaring a meet-completion can break meet-density; dropping the offending "
                   "tuples restores it";
    auto P = FinitePoset::make({"p"}, {{0, 0}});
    auto Q = FinitePoset::make({"q", "top"}, {{0, 0}, {1, 1}, {0, 1}});
    CompletionMap e(P, Q, {0});
    auto single = is_meet_completion(e);
    add_check(rep, "e-is-meet-completion", single.ok, single.detail);
    add_check(rep, "source-top-not-preserved", !source_top_preserved(e),
              "e maps the top of P to q, not to the top of Q");
    auto e2 = power_map(e, 2, guards);
    auto square = is_meet_completion(e2);
    add_check(rep, "square-fails", !square.ok, square.detail);
    try {
        auto restricted = restrict_product(e, 2, guards);
        std::vector<std::string> removed = restricted.removed;
        std::sort(removed.begin(), removed.end());
        std::string joined;
        for (const auto& s : removed)
            joined += (joined.empty() ? "" : ", ") + s;
        add_check(rep, "removed-the-mixed-tuples",
                  removed == std::vector<std::string>{"(q,top)", "(top,q)"}, joined);
        add_check(rep, "restricted-square-is-meet-completion", true,
                  "verified during construction");
    } catch (const check_failure& ex) {
        add_check(rep, "restricted-square-is-meet-completion", false, ex.what());
    }
    return rep;
}

} // namespace

ExampleReport reproduce_example(const std::string& which, const Guards& guards) {
    if (which == "d2")
        return example_d2(guards);
    if (which == "d6")
        return example_d6(guards);
    if (which == "assoc")
        return example_assoc(guards);
    if (which == "product")
        return example_product(guards);
    throw input_error("unknown example '" + which + "' (try d2, d6, assoc, product)");
}

StarStats partial_star_explore(const AbstractODA& a, long long budget, const Guards& guards) {
    auto base_rep = check_axioms(a);
    for (const auto& l : base_rep.laws)
        if (l.required && !l.pass)
            throw input_error("input algebra violates required law '" + l.name + "' at " +
                              l.witness);
    auto t = completion_tables(a, guards);
    const int n = t.size();
    StarStats st;
    auto name3 = [&](int i, int j, int k) {
        return "A=" + t.closed[static_cast<std::size_t>(i)].to_string() +
               ", B=" + t.closed[static_cast<std::size_t>(j)].to_string() +
               ", C=" + t.closed[static_cast<std::size_t>(k)].to_string();
    };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const bool ab_def = t.ran[static_cast<std::size_t>(i)] ==
                                t.dom[static_cast<std::size_t>(j)];
            const int ab = t.comp[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            for (int k = 0; k < n; ++k) {
                if (budget >= 0 && st.triples >= budget) {
                    st.exhausted = false;
                    return st;
                }
                ++st.triples;
                const bool bc_def = t.ran[static_cast<std::size_t>(j)] ==
                                    t.dom[static_cast<std::size_t>(k)];
                const int bc = t.comp[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
                const bool lhs_def =
                    bc_def && t.ran[static_cast<std::size_t>(i)] ==
                                  t.dom[static_cast<std::size_t>(bc)];
                const bool rhs_def =
                    ab_def && t.ran[static_cast<std::size_t>(ab)] ==
                                  t.dom[static_cast<std::size_t>(k)];
                if (lhs_def != rhs_def) {
                    ++st.definedness_mismatches;
                    if (st.first_witness.empty())
                        st.first_witness = "definedness: " + name3(i, j, k);
                } else if (lhs_def) {
                    ++st.both_defined;
                    if (t.comp[static_cast<std::size_t>(i)][static_cast<std::size_t>(bc)] !=
                        t.comp[static_cast<std::size_t>(ab)][static_cast<std::size_t>(k)]) {
                        ++st.value_mismatches;
                        if (st.first_witness.empty())
                            st.first_witness = "value: " + name3(i, j, k);
                    }
                }
            }
        }
    return st;
}

} // namespace odakit
