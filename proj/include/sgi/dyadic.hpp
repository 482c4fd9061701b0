#pragma once

#include <cmath>
#include <compare>
#include <cstdint>
#include <numbers>
#include <numeric>

#include "sgi/errors.hpp"

namespace sgi {

/// One-dimensional interpolation node identified by an exact dyadic fraction
/// t = num/den in [0, 1], fully reduced, with den a power of two. The node's
/// position on the reference interval [-1, 1] is cos(pi * t). Using the
/// fraction as the identity makes point deduplication and nestedness checks
/// exact: no floating-point tolerance is involved.
class DyadicNode {
public:
    /// Center node t = 1/2 (reference position 0).
    DyadicNode() = default;

    /// Build from an arbitrary dyadic fraction; reduces to lowest terms.
    static DyadicNode from_fraction(std::uint64_t num, std::uint64_t den) {
        if (den == 0 || (den & (den - 1)) != 0)
            throw invalid_argument("DyadicNode: denominator must be a positive power of two");
        if (num > den)
            throw invalid_argument("DyadicNode: fraction must lie in [0, 1]");
        const std::uint64_t g = std::gcd(num, den);
        return DyadicNode(num / g, den / g);
    }

    std::uint64_t numerator() const { return num_; }
    std::uint64_t denominator() const { return den_; }

    double t() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    /// cos(pi * t), computed symmetrically so that mirrored fractions map to
    /// exactly opposite positions and t = 1/2 maps to exactly 0.
    double reference_value() const {
        if (2 * num_ == den_) return 0.0;
        if (num_ == 0) return 1.0;
        if (num_ == den_) return -1.0;
        if (2 * num_ < den_)
            return std::cos(std::numbers::pi * t());
        const double mirrored = static_cast<double>(den_ - num_) / static_cast<double>(den_);
        return -std::cos(std::numbers::pi * mirrored);
    }

    friend bool operator==(const DyadicNode&, const DyadicNode&) = default;

    /// Orders nodes by their position on [-1, 1], ascending. Since cos is
    /// decreasing on [0, pi], this is descending in t; the comparison is done
    /// with exact integer cross-multiplication.
    friend std::strong_ordering operator<=>(const DyadicNode& a, const DyadicNode& b) {
        const auto ta = static_cast<unsigned __int128>(a.num_) * b.den_;
        const auto tb = static_cast<unsigned __int128>(b.num_) * a.den_;
        if (ta > tb) return std::strong_ordering::less;
        if (ta < tb) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

private:
    DyadicNode(std::uint64_t num, std::uint64_t den) : num_(num), den_(den) {}

    std::uint64_t num_ = 1;
    std::uint64_t den_ = 2;
};

} // namespace sgi
