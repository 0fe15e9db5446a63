#include "odakit/representation.hpp"

#include "odakit/errors.hpp"

#include <bit>

namespace odakit {

DenseRel::DenseRel(int points)
    : n_(points), words_(points <= 0 ? 0 : (points + 63) / 64),
      bits_(static_cast<std::size_t>(n_) * static_cast<std::size_t>(words_), 0) {
    if (points < 0)
        throw input_error("negative point count");
}

DenseRel DenseRel::identity(int points) {
    DenseRel r(points);
    for (int i = 0; i < points; ++i)
        r.set(i, i);
    return r;
}

bool DenseRel::at(int u, int v) const {
    return (bits_[static_cast<std::size_t>(u) * static_cast<std::size_t>(words_) +
                  static_cast<std::size_t>(v / 64)] >>
            (v % 64)) &
           1u;
}

void DenseRel::set(int u, int v) {
    bits_[static_cast<std::size_t>(u) * static_cast<std::size_t>(words_) +
          static_cast<std::size_t>(v / 64)] |= std::uint64_t{1} << (v % 64);
}

bool DenseRel::empty() const {
    for (auto w : bits_)
        if (w)
            return false;
    return true;
}

std::size_t DenseRel::pair_count() const {
    std::size_t c = 0;
    for (auto w : bits_)
        c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

std::vector<std::pair<int, int>> DenseRel::pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v = 0; v < n_; ++v)
            if (at(u, v))
                out.emplace_back(u, v);
    return out;
}

DenseRel DenseRel::compose(const DenseRel& other) const {
    if (n_ != other.n_)
        throw input_error("point count mismatch in composition");
    DenseRel out(n_);
    for (int u = 0; u < n_; ++u) {
        const std::size_t row = static_cast<std::size_t>(u) * static_cast<std::size_t>(words_);
        for (int wi = 0; wi < words_; ++wi) {
            std::uint64_t word = bits_[row + static_cast<std::size_t>(wi)];
            while (word) {
                const int w = wi * 64 + std::countr_zero(word);
                word &= word - 1;
                const std::size_t orow =
                    static_cast<std::size_t>(w) * static_cast<std::size_t>(words_);
                const std::size_t trow =
                    static_cast<std::size_t>(u) * static_cast<std::size_t>(words_);
                for (int wj = 0; wj < words_; ++wj)
                    out.bits_[trow + static_cast<std::size_t>(wj)] |=
                        other.bits_[orow + static_cast<std::size_t>(wj)];
            }
        }
    }
    return out;
}

DenseRel DenseRel::converse() const {
    DenseRel out(n_);
    for (int u = 0; u < n_; ++u)
        for (int v = 0; v < n_; ++v)
            if (at(u, v))
                out.set(v, u);
    return out;
}

DenseRel DenseRel::domain() const {
    DenseRel out(n_);
    for (int u = 0; u < n_; ++u) {
        const std::size_t row = static_cast<std::size_t>(u) * static_cast<std::size_t>(words_);
        for (int wi = 0; wi < words_; ++wi)
            if (bits_[row + static_cast<std::size_t>(wi)]) {
                out.set(u, u);
                break;
            }
    }
    return out;
}

DenseRel DenseRel::range() const { return converse().domain(); }

bool DenseRel::subset_of(const DenseRel& other) const {
    if (n_ != other.n_)
        throw input_error("point count mismatch in inclusion");
    for (std::size_t i = 0; i < bits_.size(); ++i)
        if (bits_[i] & ~other.bits_[i])
            return false;
    return true;
}

namespace {

void require_oda(const AbstractODA& a) {
    auto rep = check_axioms(a);
    for (const auto& l : rep.laws)
        if (l.required && !l.pass)
            throw input_error("input algebra violates required law '" + l.name + "' at " +
                              l.witness);
}

} // namespace

Representation build_representation(const AbstractODA& a, const Guards& guards) {
    require_oda(a);
    auto t = completion_tables(a, guards);
    const int nc = t.size();

    Representation r;
    std::vector<int> point_of(static_cast<std::size_t>(nc), -1);
    for (int i = 0; i < nc; ++i)
        if (i != t.empty_idx && i != t.zero_idx) {
            point_of[static_cast<std::size_t>(i)] = r.point_count();
            r.points.push_back(t.closed[static_cast<std::size_t>(i)]);
        }
    const int np = r.point_count();

    std::vector<int> principal(static_cast<std::size_t>(a.size()));
    for (int e = 0; e < a.size(); ++e) {
        principal[static_cast<std::size_t>(e)] = t.index_of(UpSet::principal(a.poset(), e));
        if (principal[static_cast<std::size_t>(e)] < 0)
            throw check_failure("principal up-set of '" + a.name(e) + "' is not closed");
    }

    r.image.reserve(static_cast<std::size_t>(a.size()));
    for (int e = 0; e < a.size(); ++e) {
        DenseRel h(np);
        const int pe = principal[static_cast<std::size_t>(e)];
        const int pc = principal[static_cast<std::size_t>(a.conv(e))];
        for (int i = 0; i < nc; ++i) {
            if (point_of[static_cast<std::size_t>(i)] < 0)
                continue;
            const int xa = t.comp[static_cast<std::size_t>(i)][static_cast<std::size_t>(pe)];
            for (int j = 0; j < nc; ++j) {
                if (point_of[static_cast<std::size_t>(j)] < 0)
                    continue;
                const int yc =
                    t.comp[static_cast<std::size_t>(j)][static_cast<std::size_t>(pc)];
                // X;a-up inside Y and Y;conv(a)-up inside X
                if (t.leq(j, xa) && t.leq(i, yc))
                    h.set(point_of[static_cast<std::size_t>(i)],
                          point_of[static_cast<std::size_t>(j)]);
            }
        }
        r.image.push_back(std::move(h));
    }
    return r;
}

AxiomReport verify_representation(const AbstractODA& a, const Representation& r) {
    if (static_cast<int>(r.image.size()) != a.size())
        throw input_error("representation does not cover the algebra");
    AxiomReport rep;
    auto nm = [&](int x) { return "'" + a.name(x) + "'"; };
    auto law = [&](const std::string& name, const std::string& note, auto&& body) {
        LawReport l;
        l.name = name;
        l.note = note;
        body(l);
        rep.laws.push_back(std::move(l));
    };
    const auto& im = r.image;

    law("order-faithful", "a <= b iff h(a) included in h(b)", [&](LawReport& l) {
        for (int x = 0; x < a.size(); ++x)
            for (int y = 0; y < a.size(); ++y)
                law_tally(l, a.leq(x, y) == im[static_cast<std::size_t>(x)].subset_of(
                                                im[static_cast<std::size_t>(y)]),
                          [&] { return "a=" + nm(x) + ", b=" + nm(y); });
    });
    law("comp-preserved", "h(a;b) = h(a);h(b)", [&](LawReport& l) {
        for (int x = 0; x < a.size(); ++x)
            for (int y = 0; y < a.size(); ++y)
                law_tally(l, im[static_cast<std::size_t>(a.comp(x, y))] ==
                                 im[static_cast<std::size_t>(x)].compose(
                                     im[static_cast<std::size_t>(y)]),
                          [&] { return "a=" + nm(x) + ", b=" + nm(y); });
    });
    law("conv-preserved", "h(conv(a)) = converse of h(a)", [&](LawReport& l) {
        for (int x = 0; x < a.size(); ++x)
            law_tally(l, im[static_cast<std::size_t>(a.conv(x))] ==
                             im[static_cast<std::size_t>(x)].converse(),
                      [&] { return "a=" + nm(x); });
    });
    law("dom-preserved", "h(dom(a)) = domain of h(a)", [&](LawReport& l) {
        for (int x = 0; x < a.size(); ++x)
            law_tally(l, im[static_cast<std::size_t>(a.dom(x))] ==
                             im[static_cast<std::size_t>(x)].domain(),
                      [&] { return "a=" + nm(x); });
    });
    law("ran-preserved", "h(ran(a)) = range of h(a)", [&](LawReport& l) {
        for (int x = 0; x < a.size(); ++x)
            law_tally(l, im[static_cast<std::size_t>(a.ran(x))] ==
                             im[static_cast<std::size_t>(x)].range(),
                      [&] { return "a=" + nm(x); });
    });
    law("zero-empty", "h(0) is the empty relation", [&](LawReport& l) {
        law_tally(l, im[static_cast<std::size_t>(a.zero())].empty(),
                  [&] { return "h(0) has " +
                               std::to_string(im[static_cast<std::size_t>(a.zero())].pair_count()) +
                               " pairs"; });
    });
    law("id-diagonal", "h(id) is the identity on the points", [&](LawReport& l) {
        law_tally(l, im[static_cast<std::size_t>(a.id())] == DenseRel::identity(r.point_count()),
                  [] { return std::string("at id"); });
    });
    return rep;
}

} // namespace odakit
