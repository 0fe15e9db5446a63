#include "odakit/poset.hpp"

#include "odakit/errors.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

namespace odakit {

namespace {

inline bool mask_bit(const std::vector<std::uint64_t>& m, int i) {
    return (m[static_cast<std::size_t>(i >> 6)] >> (i & 63)) & 1u;
}

inline bool row_subset(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
    for (std::size_t w = 0; w < words; ++w)
        if (a[w] & ~b[w])
            return false;
    return true;
}

} // namespace

FinitePoset::FinitePoset(std::vector<std::string> names,
                         const std::vector<std::pair<int, int>>& leq_pairs)
    : n_(static_cast<int>(names.size())), names_(std::move(names)) {
    if (n_ == 0)
        throw input_error("poset must have at least one element");
    {
        std::set<std::string> seen;
        for (const auto& nm : names_)
            if (!seen.insert(nm).second)
                throw input_error("duplicate element name '" + nm + "'");
    }
    words_ = static_cast<std::size_t>((n_ + 63) / 64);
    up_.assign(static_cast<std::size_t>(n_) * words_, 0);
    down_.assign(static_cast<std::size_t>(n_) * words_, 0);
    auto set_bit = [this](std::vector<std::uint64_t>& m, int i, int j) {
        m[static_cast<std::size_t>(i) * words_ + static_cast<std::size_t>(j >> 6)] |=
            std::uint64_t{1} << (j & 63);
    };
    for (auto [i, j] : leq_pairs) {
        if (i < 0 || i >= n_ || j < 0 || j >= n_)
            throw input_error("leq pair (" + std::to_string(i) + "," + std::to_string(j) +
                              ") out of range");
        set_bit(up_, i, j);
        set_bit(down_, j, i);
    }
    for (int i = 0; i < n_; ++i)
        if (!leq(i, i))
            throw input_error("order not reflexive at '" + name(i) + "'");
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (leq(i, j) && leq(j, i))
                throw input_error("order not antisymmetric at '" + name(i) + "','" + name(j) + "'");
    // transitive iff i <= j implies up(j) subset of up(i)
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (i != j && leq(i, j) && !row_subset(up_row(j), up_row(i), words_))
                throw input_error("order not transitive below '" + name(i) + "','" + name(j) + "'");
}

PosetPtr FinitePoset::make(std::vector<std::string> names,
                           const std::vector<std::pair<int, int>>& leq_pairs) {
    return std::make_shared<const FinitePoset>(std::move(names), leq_pairs);
}

int FinitePoset::index_of(const std::string& name) const {
    for (int i = 0; i < n_; ++i)
        if (names_[static_cast<std::size_t>(i)] == name)
            return i;
    return -1;
}

std::optional<int> FinitePoset::bottom() const {
    for (int i = 0; i < n_; ++i) {
        int cnt = 0;
        for (std::size_t w = 0; w < words_; ++w)
            cnt += std::popcount(up_row(i)[w]);
        if (cnt == n_)
            return i;
    }
    return std::nullopt;
}

std::optional<int> FinitePoset::top() const {
    for (int i = 0; i < n_; ++i) {
        int cnt = 0;
        for (std::size_t w = 0; w < words_; ++w)
            cnt += std::popcount(down_row(i)[w]);
        if (cnt == n_)
            return i;
    }
    return std::nullopt;
}

std::optional<int> FinitePoset::greatest_of_mask(const std::vector<std::uint64_t>& mask) const {
    // the greatest element of the set: g in mask with mask subset of down(g)
    for (int g = 0; g < n_; ++g)
        if (mask_bit(mask, g) && row_subset(mask.data(), down_row(g), words_))
            return g;
    return std::nullopt;
}

std::optional<int> FinitePoset::least_of_mask(const std::vector<std::uint64_t>& mask) const {
    for (int g = 0; g < n_; ++g)
        if (mask_bit(mask, g) && row_subset(mask.data(), up_row(g), words_))
            return g;
    return std::nullopt;
}

std::optional<int> FinitePoset::meet_of(const std::vector<int>& xs) const {
    std::vector<std::uint64_t> lower(words_, ~std::uint64_t{0});
    if (n_ & 63)
        lower[words_ - 1] = (std::uint64_t{1} << (n_ & 63)) - 1;
    for (int x : xs)
        for (std::size_t w = 0; w < words_; ++w)
            lower[w] &= down_row(x)[w];
    return greatest_of_mask(lower);
}

std::optional<int> FinitePoset::join_of(const std::vector<int>& xs) const {
    std::vector<std::uint64_t> upper(words_, ~std::uint64_t{0});
    if (n_ & 63)
        upper[words_ - 1] = (std::uint64_t{1} << (n_ & 63)) - 1;
    for (int x : xs)
        for (std::size_t w = 0; w < words_; ++w)
            upper[w] &= up_row(x)[w];
    return least_of_mask(upper);
}

std::vector<int> FinitePoset::up_cone(int i) const {
    std::vector<int> out;
    for (int j = 0; j < n_; ++j)
        if (leq(i, j))
            out.push_back(j);
    return out;
}

std::vector<int> FinitePoset::down_cone(int i) const {
    std::vector<int> out;
    for (int j = 0; j < n_; ++j)
        if (leq(j, i))
            out.push_back(j);
    return out;
}

std::vector<int> FinitePoset::linear_extension_max_first() const {
    std::vector<int> above(static_cast<std::size_t>(n_), 0);
    for (int i = 0; i < n_; ++i)
        above[static_cast<std::size_t>(i)] = static_cast<int>(up_cone(i).size()) - 1;
    std::vector<int> order(static_cast<std::size_t>(n_));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return above[static_cast<std::size_t>(a)] < above[static_cast<std::size_t>(b)];
    });
    return order;
}

std::vector<std::pair<int, int>> FinitePoset::leq_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (leq(i, j))
                out.emplace_back(i, j);
    return out;
}

bool FinitePoset::same_structure(const FinitePoset& other) const {
    return n_ == other.n_ && names_ == other.names_ && up_ == other.up_;
}

// ---------------------------------------------------------------------------

UpSet::UpSet(PosetPtr poset, const std::vector<int>& generators) : poset_(std::move(poset)) {
    const auto& p = *poset_;
    std::vector<int> gens(generators);
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    for (int g : gens)
        if (g < 0 || g >= p.size())
            throw input_error("up-set generator " + std::to_string(g) + " out of range");
    for (int g : gens) {
        bool minimal = true;
        for (int h : gens)
            if (h != g && p.leq(h, g)) {
                minimal = false;
                break;
            }
        if (minimal)
            min_.push_back(g);
    }
}

UpSet UpSet::empty(PosetPtr poset) { return UpSet(std::move(poset), {}); }

UpSet UpSet::principal(PosetPtr poset, int p) { return UpSet(std::move(poset), {p}); }

UpSet UpSet::whole(PosetPtr poset) {
    std::vector<int> all(static_cast<std::size_t>(poset->size()));
    std::iota(all.begin(), all.end(), 0);
    return UpSet(std::move(poset), all);
}

void UpSet::require_same_poset(const UpSet& other) const {
    if (poset_.get() != other.poset_.get() && !poset_->same_structure(*other.poset_))
        throw input_error("up-sets belong to different posets");
}

bool UpSet::contains(int p) const {
    for (int m : min_)
        if (poset_->leq(m, p))
            return true;
    return false;
}

bool UpSet::subset_of(const UpSet& other) const {
    require_same_poset(other);
    for (int m : min_)
        if (!other.contains(m))
            return false;
    return true;
}

std::vector<int> UpSet::elements() const {
    std::vector<int> out;
    for (int p = 0; p < poset_->size(); ++p)
        if (contains(p))
            out.push_back(p);
    return out;
}

std::size_t UpSet::count() const { return elements().size(); }

UpSet UpSet::union_with(const UpSet& other) const {
    require_same_poset(other);
    std::vector<int> gens(min_);
    gens.insert(gens.end(), other.min_.begin(), other.min_.end());
    return UpSet(poset_, gens);
}

UpSet UpSet::intersect(const UpSet& other) const {
    require_same_poset(other);
    std::vector<int> gens;
    for (int p = 0; p < poset_->size(); ++p)
        if (contains(p) && other.contains(p))
            gens.push_back(p);
    return UpSet(poset_, gens);
}

bool UpSet::operator==(const UpSet& other) const {
    require_same_poset(other);
    return min_ == other.min_;
}

bool UpSet::before(const UpSet& other) const { return min_ < other.min_; }

std::string UpSet::to_string() const {
    std::string s = "{";
    bool first = true;
    for (int m : min_) {
        if (!first)
            s += ",";
        first = false;
        s += poset_->name(m);
    }
    return s + "}";
}

UpSet up_closure(PosetPtr poset, const std::vector<int>& generators) {
    return UpSet(std::move(poset), generators);
}

// ---------------------------------------------------------------------------

std::vector<UpSet> all_up_sets(PosetPtr poset, const Guards& guards) {
    const auto& p = *poset;
    const int n = p.size();
    if (n > 62)
        throw resource_error("up-set enumeration needs |P| <= 62, got " + std::to_string(n));
    if (n < 64 && (std::uint64_t{1} << n) > guards.upset_enum)
        throw resource_error("projected up-set count 2^" + std::to_string(n) +
                             " exceeds guard " + std::to_string(guards.upset_enum));

    // strictly-above masks, and a linear extension deciding maximal elements first
    std::vector<std::uint64_t> above(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (p.lt(i, j))
                above[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
    std::vector<int> order = p.linear_extension_max_first();

    std::vector<std::uint64_t> masks;
    // iterative DFS: at depth d decide order[d]; include requires above subset of mask
    struct Frame {
        int depth;
        std::uint64_t mask;
    };
    std::vector<Frame> stack{{0, 0}};
    while (!stack.empty()) {
        auto [d, mask] = stack.back();
        stack.pop_back();
        if (d == n) {
            masks.push_back(mask);
            continue;
        }
        int e = order[static_cast<std::size_t>(d)];
        stack.push_back({d + 1, mask}); // exclude e
        if ((above[static_cast<std::size_t>(e)] & ~mask) == 0)
            stack.push_back({d + 1, mask | (std::uint64_t{1} << e)});
    }
    std::sort(masks.begin(), masks.end());

    std::vector<UpSet> out;
    out.reserve(masks.size());
    for (std::uint64_t mask : masks) {
        std::vector<int> gens;
        for (int i = 0; i < n; ++i)
            if ((mask >> i) & 1u)
                gens.push_back(i);
        out.emplace_back(poset, gens);
    }
    return out;
}

bool is_complete_lattice(const FinitePoset& poset) {
    if (!poset.bottom() || !poset.top())
        return false;
    const int n = poset.size();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (!poset.meet_of({a, b}))
                return false;
            if (!poset.join_of({a, b}))
                return false;
        }
    return true;
}

PosetPtr upsets_poset(PosetPtr poset, const Guards& guards) {
    auto ups = all_up_sets(std::move(poset), guards);
    std::vector<std::string> names;
    names.reserve(ups.size());
    for (const auto& u : ups)
        names.push_back(u.to_string());
    std::vector<std::pair<int, int>> leq;
    const int m = static_cast<int>(ups.size());
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (ups[static_cast<std::size_t>(i)].superset_of(ups[static_cast<std::size_t>(j)]))
                leq.emplace_back(i, j); // reverse inclusion
    return FinitePoset::make(std::move(names), leq);
}

} // namespace odakit
