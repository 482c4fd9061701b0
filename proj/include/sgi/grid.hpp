#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "sgi/domain.hpp"
#include "sgi/dyadic.hpp"
#include "sgi/multi_index.hpp"

namespace sgi {

/// Exact identity of a grid point: the per-dimension dyadic node fractions.
/// Lexicographic order on the fractions orders points by ascending coordinates.
using PointId = std::vector<DyadicNode>;

struct GridPoint {
    PointId id;
    std::vector<double> coords;

    friend bool operator==(const GridPoint& a, const GridPoint& b) { return a.id == b.id; }
    friend auto operator<=>(const GridPoint& a, const GridPoint& b) { return a.id <=> b.id; }
};

/// Number of 1D nodes at a level: 1 at level 1, then 2^(k-1) + 1. Consecutive
/// levels are nested because 2^(k-1) + 1 doubles the interval count.
int node_count(int level);

/// The 1D nodes of a level, sorted ascending by position on [-1, 1].
/// Level 1 is the single center node t = 1/2; level k >= 2 holds
/// t = j / 2^(k-1) for j = 0..2^(k-1), reduced.
std::vector<DyadicNode> nodes_1d(int level);

/// All multi-indices i in Z_{>=1}^d with sum(i_k - 1) <= level, sorted
/// lexicographically. Cardinality is binomial(level + d, d).
std::vector<MultiIndex> total_degree_index_set(int dimension, int level);

/// Combination-technique coefficients over a downward-closed index set:
/// c_i = sum over z in {0,1}^d with i + z in the set of (-1)^|z|.
/// Zero-coefficient entries are dropped. Over any downward-closed set the
/// coefficients of the full set sum to 1. Throws invalid_argument when the
/// input is not downward closed.
std::map<MultiIndex, int> combination_coefficients(const std::vector<MultiIndex>& index_set);

/// Sparse interpolation grid: the union of the tensor grids of all nonzero
/// combination terms of the total-degree index set, deduplicated by exact
/// node identity. Immutable after construction and safe for concurrent reads.
class SparseGrid {
public:
    SparseGrid(int dimension, int level, Domain domain);

    int dimension() const { return dimension_; }
    int level() const { return level_; }
    const Domain& domain() const { return domain_; }

    /// Nonzero combination coefficients keyed by multi-index (lexicographic order).
    const std::map<MultiIndex, int>& terms() const { return terms_; }

    /// Deduplicated points, sorted ascending by id (hence by coordinates).
    const std::vector<GridPoint>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }

    bool contains(const PointId& id) const { return index_.count(id) != 0; }
    const GridPoint* find(const PointId& id) const;

private:
    int dimension_;
    int level_;
    Domain domain_;
    std::map<MultiIndex, int> terms_;
    std::vector<GridPoint> points_;
    std::map<PointId, std::size_t> index_;
};

/// Serialize a point id as "num/den;num/den;...".
std::string format_point_id(const PointId& id);

/// Parse the "num/den;..." form; fractions are canonicalized on the way in.
PointId parse_point_id(const std::string& text);

} // namespace sgi
