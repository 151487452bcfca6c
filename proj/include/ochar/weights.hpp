#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>

namespace ochar {

using Int = std::int64_t;

/// Integral weight in fundamental-weight coordinates.
///
/// Rank is at most 2; coordinates are exact integers. Comparison operators
/// give the lexicographic order on coordinates (used only for canonical
/// container ordering, not for the dominance order, which lives on
/// RootSystem).
class Weight {
public:
    Weight() : rank_(0), c_{0, 0} {}

    Weight(std::initializer_list<Int> coords) : rank_(0), c_{0, 0} {
        if (coords.size() > 2)
            throw std::invalid_argument("Weight: rank > 2 not supported");
        for (Int v : coords) c_[rank_++] = v;
    }

    static Weight zero(int rank) {
        Weight w;
        w.rank_ = rank;
        return w;
    }

    int rank() const { return rank_; }

    Int operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
    Int& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }

    Weight operator+(const Weight& o) const {
        Weight r = *this;
        for (int i = 0; i < rank_; ++i) r.c_[i] += o.c_[i];
        return r;
    }
    Weight operator-(const Weight& o) const {
        Weight r = *this;
        for (int i = 0; i < rank_; ++i) r.c_[i] -= o.c_[i];
        return r;
    }
    Weight operator-() const {
        Weight r = *this;
        for (int i = 0; i < rank_; ++i) r.c_[i] = -r.c_[i];
        return r;
    }
    Weight operator*(Int k) const {
        Weight r = *this;
        for (int i = 0; i < rank_; ++i) r.c_[i] *= k;
        return r;
    }

    bool operator==(const Weight&) const = default;
    auto operator<=>(const Weight&) const = default;

private:
    int rank_;
    std::array<Int, 2> c_;
};

inline Weight operator*(Int k, const Weight& w) { return w * k; }

struct WeightHash {
    std::size_t operator()(const Weight& w) const {
        std::size_t h = std::hash<int>()(w.rank());
        for (int i = 0; i < w.rank(); ++i)
            h = h * 1000003u + std::hash<Int>()(w[i]);
        return h;
    }
};

inline std::string to_string(const Weight& w) {
    std::string s = "[";
    for (int i = 0; i < w.rank(); ++i) {
        if (i) s += ",";
        s += std::to_string(w[i]);
    }
    return s + "]";
}

}  // namespace ochar
