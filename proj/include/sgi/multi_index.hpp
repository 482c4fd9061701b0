#pragma once

#include <compare>
#include <cstddef>
#include <numeric>
#include <vector>

#include "sgi/errors.hpp"

namespace sgi {

/// Multi-index (i_1, ..., i_d) of per-dimension tensor-grid levels, each >= 1.
class MultiIndex {
public:
    explicit MultiIndex(std::vector<int> entries) : entries_(std::move(entries)) {
        if (entries_.empty())
            throw invalid_argument("MultiIndex: must have at least one entry");
        for (int e : entries_)
            if (e < 1)
                throw invalid_argument("MultiIndex: entries must be >= 1");
    }

    int dimension() const { return static_cast<int>(entries_.size()); }
    int operator[](std::size_t k) const { return entries_[k]; }
    const std::vector<int>& entries() const { return entries_; }

    /// Sum of (i_k - 1) over all dimensions; the total-degree "cost" of the index.
    int level_sum() const {
        return std::accumulate(entries_.begin(), entries_.end(), 0) - dimension();
    }

    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
    friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;

private:
    std::vector<int> entries_;
};

} // namespace sgi
