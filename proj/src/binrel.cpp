#include "odakit/binrel.hpp"

#include "odakit/errors.hpp"

#include <bit>

namespace odakit {

BinRel::BinRel(int base) : base_(base) {
    if (base < 1 || base > max_base)
        throw input_error("relation base must be in [1, " + std::to_string(max_base) +
                          "], got " + std::to_string(base));
    rows_.assign(static_cast<std::size_t>(base), 0u);
}

BinRel BinRel::identity(int base) {
    BinRel r(base);
    for (int u = 0; u < base; ++u)
        r.rows_[static_cast<std::size_t>(u)] = std::uint32_t{1} << u;
    return r;
}

BinRel BinRel::full(int base) {
    BinRel r(base);
    const std::uint32_t row = base == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << base) - 1;
    for (auto& x : r.rows_)
        x = row;
    return r;
}

BinRel BinRel::from_pairs(int base, const std::vector<std::pair<int, int>>& pairs) {
    BinRel r(base);
    for (auto [u, v] : pairs)
        r.set(u, v);
    return r;
}

void BinRel::set(int u, int v) {
    if (u < 0 || u >= base_ || v < 0 || v >= base_)
        throw input_error("relation pair (" + std::to_string(u) + "," + std::to_string(v) +
                          ") out of range for base " + std::to_string(base_));
    rows_[static_cast<std::size_t>(u)] |= std::uint32_t{1} << v;
}

bool BinRel::empty() const {
    for (auto row : rows_)
        if (row)
            return false;
    return true;
}

int BinRel::pair_count() const {
    int n = 0;
    for (auto row : rows_)
        n += std::popcount(row);
    return n;
}

void BinRel::check_same_base(const BinRel& other) const {
    if (base_ != other.base_)
        throw input_error("relation base mismatch: " + std::to_string(base_) + " vs " +
                          std::to_string(other.base_));
}

BinRel BinRel::compose(const BinRel& other) const {
    check_same_base(other);
    BinRel out(base_);
    for (int u = 0; u < base_; ++u) {
        std::uint32_t mid = rows_[static_cast<std::size_t>(u)];
        std::uint32_t acc = 0;
        while (mid) {
            int w = std::countr_zero(mid);
            mid &= mid - 1;
            acc |= other.rows_[static_cast<std::size_t>(w)];
        }
        out.rows_[static_cast<std::size_t>(u)] = acc;
    }
    return out;
}

BinRel BinRel::converse() const {
    BinRel out(base_);
    for (int u = 0; u < base_; ++u) {
        std::uint32_t row = rows_[static_cast<std::size_t>(u)];
        while (row) {
            int v = std::countr_zero(row);
            row &= row - 1;
            out.rows_[static_cast<std::size_t>(v)] |= std::uint32_t{1} << u;
        }
    }
    return out;
}

BinRel BinRel::domain() const {
    BinRel out(base_);
    for (int u = 0; u < base_; ++u)
        if (rows_[static_cast<std::size_t>(u)])
            out.rows_[static_cast<std::size_t>(u)] = std::uint32_t{1} << u;
    return out;
}

BinRel BinRel::range() const {
    std::uint32_t hit = 0;
    for (auto row : rows_)
        hit |= row;
    BinRel out(base_);
    while (hit) {
        int v = std::countr_zero(hit);
        hit &= hit - 1;
        out.rows_[static_cast<std::size_t>(v)] = std::uint32_t{1} << v;
    }
    return out;
}

bool BinRel::subset_of(const BinRel& other) const {
    check_same_base(other);
    for (int u = 0; u < base_; ++u)
        if (rows_[static_cast<std::size_t>(u)] & ~other.rows_[static_cast<std::size_t>(u)])
            return false;
    return true;
}

std::vector<std::pair<int, int>> BinRel::pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < base_; ++u) {
        std::uint32_t row = rows_[static_cast<std::size_t>(u)];
        while (row) {
            int v = std::countr_zero(row);
            row &= row - 1;
            out.emplace_back(u, v);
        }
    }
    return out;
}

std::string BinRel::to_string() const {
    auto name = [this](int i) {
        if (base_ <= 26)
            return std::string(1, static_cast<char>('a' + i));
        return std::to_string(i);
    };
    std::string s = "{";
    bool first = true;
    for (auto [u, v] : pairs()) {
        if (!first)
            s += ",";
        first = false;
        s += "(" + name(u) + "," + name(v) + ")";
    }
    s += "}";
    return s;
}

} // namespace odakit
