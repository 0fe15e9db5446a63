#include "odakit/oda.hpp"

#include "odakit/errors.hpp"

#include <algorithm>
#include <map>

namespace odakit {

AbstractODA::AbstractODA(std::vector<std::string> names,
                         const std::vector<std::pair<int, int>>& leq_pairs,
                         std::vector<std::vector<int>> comp, std::vector<int> conv,
                         std::vector<int> dom, std::vector<int> ran, int zero, int id)
    : poset_(FinitePoset::make(std::move(names), leq_pairs)), comp_(std::move(comp)),
      conv_(std::move(conv)), dom_(std::move(dom)), ran_(std::move(ran)), zero_(zero), id_(id) {
    const int n = poset_->size();
    auto check_unary = [n](const std::vector<int>& t, const char* what) {
        if (static_cast<int>(t.size()) != n)
            throw input_error(std::string(what) + " table has wrong size");
        for (int v : t)
            if (v < 0 || v >= n)
                throw input_error(std::string(what) + " table value out of range");
    };
    if (static_cast<int>(comp_.size()) != n)
        throw input_error("comp table has wrong size");
    for (const auto& row : comp_)
        check_unary(row, "comp row");
    check_unary(conv_, "conv");
    check_unary(dom_, "dom");
    check_unary(ran_, "ran");
    if (zero_ < 0 || zero_ >= n || id_ < 0 || id_ >= n)
        throw input_error("zero or id index out of range");
    for (int a = 0; a < n; ++a)
        if (!poset_->leq(zero_, a))
            throw input_error("zero is not the least element (not below '" + name(a) + "')");
}

std::optional<int> AbstractODA::base() const {
    if (!relations_)
        return std::nullopt;
    return (*relations_)[0].base();
}

AbstractODA algebra_of_relations(int base, std::vector<BinRel> rels) {
    std::sort(rels.begin(), rels.end());
    rels.erase(std::unique(rels.begin(), rels.end()), rels.end());
    std::map<BinRel, int> index;
    for (std::size_t i = 0; i < rels.size(); ++i) {
        if (rels[i].base() != base)
            throw input_error("relation base mismatch in algebra");
        index.emplace(rels[i], static_cast<int>(i));
    }
    auto find = [&](const BinRel& r, const char* what) {
        auto it = index.find(r);
        if (it == index.end())
            throw input_error(std::string("relation set not closed under ") + what + " at " +
                              r.to_string());
        return it->second;
    };
    const int n = static_cast<int>(rels.size());
    std::vector<std::string> names;
    std::vector<std::pair<int, int>> leq;
    for (int i = 0; i < n; ++i) {
        names.push_back(rels[static_cast<std::size_t>(i)].to_string());
        for (int j = 0; j < n; ++j)
            if (rels[static_cast<std::size_t>(i)].subset_of(rels[static_cast<std::size_t>(j)]))
                leq.emplace_back(i, j);
    }
    std::vector<std::vector<int>> comp(static_cast<std::size_t>(n),
                                       std::vector<int>(static_cast<std::size_t>(n)));
    std::vector<int> conv(static_cast<std::size_t>(n)), dom(static_cast<std::size_t>(n)),
        ran(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const BinRel& x = rels[static_cast<std::size_t>(i)];
        conv[static_cast<std::size_t>(i)] = find(x.converse(), "converse");
        dom[static_cast<std::size_t>(i)] = find(x.domain(), "domain");
        ran[static_cast<std::size_t>(i)] = find(x.range(), "range");
        for (int j = 0; j < n; ++j)
            comp[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                find(x.compose(rels[static_cast<std::size_t>(j)]), "composition");
    }
    int zero = find(BinRel::zero(base), "zero");
    int id = find(BinRel::identity(base), "identity");
    AbstractODA a(std::move(names), leq, std::move(comp), std::move(conv), std::move(dom),
                  std::move(ran), zero, id);
    a.relations_ = std::move(rels);
    return a;
}

AbstractODA generate_subalgebra(int base, const std::vector<BinRel>& generators,
                                const Guards& guards) {
    std::vector<BinRel> work{BinRel::zero(base), BinRel::identity(base)};
    for (const auto& g : generators) {
        if (g.base() != base)
            throw input_error("generator base mismatch");
        work.push_back(g);
    }
    std::sort(work.begin(), work.end());
    work.erase(std::unique(work.begin(), work.end()), work.end());
    if (work.size() > guards.subalgebra)
        throw resource_error("subalgebra closure exceeds guard " +
                             std::to_string(guards.subalgebra));
    for (bool grew = true; grew;) {
        grew = false;
        std::vector<BinRel> next;
        auto add = [&](const BinRel& r) {
            if (!std::binary_search(work.begin(), work.end(), r))
                next.push_back(r);
        };
        for (const auto& x : work) {
            add(x.converse());
            add(x.domain());
            add(x.range());
            for (const auto& y : work)
                add(x.compose(y));
        }
        if (!next.empty()) {
            grew = true;
            work.insert(work.end(), next.begin(), next.end());
            std::sort(work.begin(), work.end());
            work.erase(std::unique(work.begin(), work.end()), work.end());
            if (work.size() > guards.subalgebra)
                throw resource_error("subalgebra closure exceeds guard " +
                                     std::to_string(guards.subalgebra));
        }
    }
    return algebra_of_relations(base, std::move(work));
}

AbstractODA full_proper_oda(int base, const Guards& guards) {
    if (base < 1 || base > 5)
        throw input_error("full algebra base must be in [1,5]");
    const std::uint64_t count = std::uint64_t{1} << (base * base);
    if (count > guards.subalgebra)
        throw resource_error("full algebra has " + std::to_string(count) +
                             " elements, exceeding guard " + std::to_string(guards.subalgebra));
    std::vector<BinRel> rels;
    rels.reserve(count);
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        BinRel r(base);
        for (int u = 0; u < base; ++u)
            for (int v = 0; v < base; ++v)
                if ((mask >> (u * base + v)) & 1u)
                    r.set(u, v);
        rels.push_back(r);
    }
    return algebra_of_relations(base, std::move(rels));
}

namespace {

struct Checker {
    const AbstractODA& a;
    AxiomReport report;

    std::string nm(int x) const { return "'" + a.name(x) + "'"; }

    void law(const std::string& name, const std::string& note, auto&& body) {
        LawReport r;
        r.name = name;
        r.note = note;
        body(r);
        report.laws.push_back(std::move(r));
    }

    void tally(LawReport& r, bool ok, auto&& describe) {
        law_tally(r, ok, describe);
    }
    template <class F> void for_all1(LawReport& r, F&& f) {
        for (int x = 0; x < a.size(); ++x)
            tally(r, f(x), [&] { return "a=" + nm(x); });
    }
    template <class F> void for_all2(LawReport& r, F&& f) {
        for (int x = 0; x < a.size(); ++x)
            for (int y = 0; y < a.size(); ++y)
                tally(r, f(x, y), [&] { return "a=" + nm(x) + ", b=" + nm(y); });
    }
    template <class F> void for_all3(LawReport& r, F&& f) {
        for (int x = 0; x < a.size(); ++x)
            for (int y = 0; y < a.size(); ++y)
                for (int z = 0; z < a.size(); ++z)
                    tally(r, f(x, y, z),
                          [&] { return "a=" + nm(x) + ", b=" + nm(y) + ", c=" + nm(z); });
    }
};

} // namespace

AxiomReport check_axioms(const AbstractODA& a) {
    Checker c{a, {}};
    const int zero = a.zero();
    const int id = a.id();

    c.law("zero-least", "0 <= a", [&](LawReport& r) {
        c.for_all1(r, [&](int x) { return a.leq(zero, x); });
    });
    c.law("conv-isotone", "a <= b implies conv(a) <= conv(b)", [&](LawReport& r) {
        c.for_all2(r, [&](int x, int y) { return !a.leq(x, y) || a.leq(a.conv(x), a.conv(y)); });
    });
    c.law("dom-isotone", "a <= b implies dom(a) <= dom(b)", [&](LawReport& r) {
        c.for_all2(r, [&](int x, int y) { return !a.leq(x, y) || a.leq(a.dom(x), a.dom(y)); });
    });
    c.law("ran-isotone", "a <= b implies ran(a) <= ran(b)", [&](LawReport& r) {
        c.for_all2(r, [&](int x, int y) { return !a.leq(x, y) || a.leq(a.ran(x), a.ran(y)); });
    });
    c.law("comp-isotone", "a <= b implies a;c <= b;c and c;a <= c;b", [&](LawReport& r) {
        c.for_all3(r, [&](int x, int y, int z) {
            return !a.leq(x, y) ||
                   (a.leq(a.comp(x, z), a.comp(y, z)) && a.leq(a.comp(z, x), a.comp(z, y)));
        });
    });
    c.law("normality", "conv(0)=0, 0;a=a;0=0, dom(0)=ran(0)=0", [&](LawReport& r) {
        c.tally(r, a.conv(zero) == zero && a.dom(zero) == zero && a.ran(zero) == zero,
                [] { return std::string("at 0"); });
        c.for_all1(r, [&](int x) { return a.comp(zero, x) == zero && a.comp(x, zero) == zero; });
    });
    c.law("comp-assoc", "(a;b);c = a;(b;c)", [&](LawReport& r) {
        c.for_all3(r, [&](int x, int y, int z) {
            return a.comp(a.comp(x, y), z) == a.comp(x, a.comp(y, z));
        });
    });
    c.law("id-identity", "id;a = a = a;id", [&](LawReport& r) {
        c.for_all1(r, [&](int x) { return a.comp(id, x) == x && a.comp(x, id) == x; });
    });
    c.law("conv-id", "conv(id) = id", [&](LawReport& r) {
        c.tally(r, a.conv(id) == id, [] { return std::string("at id"); });
    });
    c.law("conv-involution", "conv(conv(a)) = a", [&](LawReport& r) {
        c.for_all1(r, [&](int x) { return a.conv(a.conv(x)) == x; });
    });
    c.law("conv-antidistributive", "conv(a;b) = conv(b);conv(a)", [&](LawReport& r) {
        c.for_all2(r, [&](int x, int y) {
            return a.conv(a.comp(x, y)) == a.comp(a.conv(y), a.conv(x));
        });
    });
    c.law("D1", "dom(a) = conv(dom(a)) <= id = dom(id)", [&](LawReport& r) {
        c.tally(r, a.dom(id) == id, [] { return std::string("dom(id) != id"); });
        c.for_all1(r, [&](int x) {
            return a.conv(a.dom(x)) == a.dom(x) && a.leq(a.dom(x), id);
        });
    });
    c.law("D1-dual", "ran(a) = conv(ran(a)) <= id = ran(id)", [&](LawReport& r) {
        c.tally(r, a.ran(id) == id, [] { return std::string("ran(id) != id"); });
        c.for_all1(r, [&](int x) {
            return a.conv(a.ran(x)) == a.ran(x) && a.leq(a.ran(x), id);
        });
    });
    c.law("D2", "dom(a) <= a;conv(a)", [&](LawReport& r) {
        c.for_all1(r, [&](int x) { return a.leq(a.dom(x), a.comp(x, a.conv(x))); });
    });
    c.law("D2-dual", "ran(a) <= conv(a);a", [&](LawReport& r) {
        c.for_all1(r, [&](int x) { return a.leq(a.ran(x), a.comp(a.conv(x), x)); });
    });
    c.law("D3", "dom(conv(a)) = ran(a)", [&](LawReport& r) {
        c.for_all1(r, [&](int x) { return a.dom(a.conv(x)) == a.ran(x); });
    });
    c.law("D3-dual", "ran(conv(a)) = dom(a)", [&](LawReport& r) {
        c.for_all1(r, [&](int x) { return a.ran(a.conv(x)) == a.dom(x); });
    });
    c.law("D4", "dom(dom(a)) = dom(a) = ran(dom(a))", [&](LawReport& r) {
        c.for_all1(r, [&](int x) {
            return a.dom(a.dom(x)) == a.dom(x) && a.ran(a.dom(x)) == a.dom(x);
        });
    });
    c.law("D4-dual", "ran(ran(a)) = ran(a) = dom(ran(a))", [&](LawReport& r) {
        c.for_all1(r, [&](int x) {
            return a.ran(a.ran(x)) == a.ran(x) && a.dom(a.ran(x)) == a.ran(x);
        });
    });
    c.law("D5", "dom(a);a = a", [&](LawReport& r) {
        c.for_all1(r, [&](int x) { return a.comp(a.dom(x), x) == x; });
    });
    c.law("D5-dual", "a;ran(a) = a", [&](LawReport& r) {
        c.for_all1(r, [&](int x) { return a.comp(x, a.ran(x)) == x; });
    });
    c.law("D6", "dom(a;b) = dom(a;dom(b))", [&](LawReport& r) {
        c.for_all2(r, [&](int x, int y) {
            return a.dom(a.comp(x, y)) == a.dom(a.comp(x, a.dom(y)));
        });
    });
    c.law("D6-dual", "ran(b;a) = ran(ran(b);a)", [&](LawReport& r) {
        c.for_all2(r, [&](int x, int y) {
            return a.ran(a.comp(y, x)) == a.ran(a.comp(a.ran(y), x));
        });
    });
    c.law("D7", "dom(dom(a);dom(b)) = dom(a);dom(b) = dom(b);dom(a)", [&](LawReport& r) {
        c.for_all2(r, [&](int x, int y) {
            int d = a.comp(a.dom(x), a.dom(y));
            return a.dom(d) == d && d == a.comp(a.dom(y), a.dom(x));
        });
    });
    c.law("D7-dual", "ran(ran(a);ran(b)) = ran(a);ran(b) = ran(b);ran(a)", [&](LawReport& r) {
        c.for_all2(r, [&](int x, int y) {
            int d = a.comp(a.ran(x), a.ran(y));
            return a.ran(d) == d && d == a.comp(a.ran(y), a.ran(x));
        });
    });
    c.law("D8", "dom(dom(a);b) = dom(a);dom(b)", [&](LawReport& r) {
        c.for_all2(r, [&](int x, int y) {
            return a.dom(a.comp(a.dom(x), y)) == a.comp(a.dom(x), a.dom(y));
        });
    });
    c.law("D8-dual", "ran(b;ran(a)) = ran(b);ran(a)", [&](LawReport& r) {
        c.for_all2(r, [&](int x, int y) {
            return a.ran(a.comp(y, a.ran(x))) == a.comp(a.ran(y), a.ran(x));
        });
    });
    c.law("D9", "dom(a);dom(a) = dom(a)", [&](LawReport& r) {
        c.for_all1(r, [&](int x) { return a.comp(a.dom(x), a.dom(x)) == a.dom(x); });
    });
    c.law("D9-dual", "ran(a);ran(a) = ran(a)", [&](LawReport& r) {
        c.for_all1(r, [&](int x) { return a.comp(a.ran(x), a.ran(x)) == a.ran(x); });
    });
    c.law("dom-exchange", "b;dom(c) <= dom(b;c);b", [&](LawReport& r) {
        c.for_all2(r, [&](int b, int cc) {
            return a.leq(a.comp(b, a.dom(cc)), a.comp(a.dom(a.comp(b, cc)), b));
        });
    });
    c.law("ran-exchange", "ran(c);b <= b;ran(c;b)", [&](LawReport& r) {
        c.for_all2(r, [&](int b, int cc) {
            return a.leq(a.comp(a.ran(cc), b), a.comp(b, a.ran(a.comp(cc, b))));
        });
    });
    return c.report;
}

} // namespace odakit
