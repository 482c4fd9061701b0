#pragma once

#include <span>
#include <vector>

#include "sgi/errors.hpp"

namespace sgi {

struct Interval {
    double lower;
    double upper;

    friend bool operator==(const Interval&, const Interval&) = default;
};

/// Axis-aligned box domain. The only supported transform is the affine map
/// between each interval and the reference interval [-1, 1].
class Domain {
public:
    explicit Domain(std::vector<Interval> intervals) : intervals_(std::move(intervals)) {
        if (intervals_.empty())
            throw invalid_argument("Domain: needs at least one interval");
        for (const auto& iv : intervals_)
            if (!(iv.lower < iv.upper))
                throw invalid_argument("Domain: every interval needs lower < upper");
    }

    static Domain box(int dimension, double lower, double upper) {
        if (dimension < 1)
            throw invalid_argument("Domain: dimension must be >= 1");
        return Domain(std::vector<Interval>(static_cast<std::size_t>(dimension), Interval{lower, upper}));
    }

    static Domain unit_box(int dimension) { return box(dimension, 0.0, 1.0); }

    int dimension() const { return static_cast<int>(intervals_.size()); }
    const Interval& interval(std::size_t k) const { return intervals_[k]; }
    const std::vector<Interval>& intervals() const { return intervals_; }

    /// Closed-box membership.
    bool contains(std::span<const double> x) const {
        if (x.size() != intervals_.size()) return false;
        for (std::size_t k = 0; k < intervals_.size(); ++k)
            if (x[k] < intervals_[k].lower || x[k] > intervals_[k].upper) return false;
        return true;
    }

    /// Map a coordinate in [lower_k, upper_k] to the reference interval [-1, 1].
    double to_reference(std::size_t k, double x) const {
        const auto& iv = intervals_[k];
        return 2.0 * (x - iv.lower) / (iv.upper - iv.lower) - 1.0;
    }

    /// Map a reference coordinate r in [-1, 1] into [lower_k, upper_k].
    double from_reference(std::size_t k, double r) const {
        const auto& iv = intervals_[k];
        return iv.lower + (iv.upper - iv.lower) * (r + 1.0) / 2.0;
    }

    friend bool operator==(const Domain&, const Domain&) = default;

private:
    std::vector<Interval> intervals_;
};

} // namespace sgi
