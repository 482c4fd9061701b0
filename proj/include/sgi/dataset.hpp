#pragma once

#include <functional>
#include <map>
#include <optional>
#include <span>

#include "sgi/grid.hpp"

namespace sgi {

/// Scalar function values keyed by exact point id. One value per point.
class Dataset {
public:
    using Map = std::map<PointId, double>;

    Dataset() = default;

    void set(const PointId& id, double value) { values_[id] = value; }

    std::optional<double> get(const PointId& id) const {
        auto it = values_.find(id);
        if (it == values_.end()) return std::nullopt;
        return it->second;
    }

    bool contains(const PointId& id) const { return values_.count(id) != 0; }
    std::size_t size() const { return values_.size(); }
    bool empty() const { return values_.empty(); }

    Map::const_iterator begin() const { return values_.begin(); }
    Map::const_iterator end() const { return values_.end(); }

    friend bool operator==(const Dataset&, const Dataset&) = default;

private:
    Map values_;
};

/// The subset of `data` living on `grid`'s points. Throws incomplete_dataset,
/// naming the first missing point, when the grid is not fully covered.
Dataset restrict_to(const Dataset& data, const SparseGrid& grid);

/// Evaluate `f` at every grid point. One call per point, in point order.
Dataset evaluate_on_grid(const SparseGrid& grid,
                         const std::function<double(std::span<const double>)>& f);

} // namespace sgi
