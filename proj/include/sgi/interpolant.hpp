#pragma once

#include <span>
#include <vector>

#include "sgi/dataset.hpp"
#include "sgi/grid.hpp"

namespace sgi {

/// Sparse grid polynomial interpolant: the signed sum of tensor-product
/// barycentric Lagrange interpolants over the grid's combination terms.
///
/// Construction validates that the dataset covers every grid point and caches
/// per-level 1D node positions/weights plus each term's value block, so
/// evaluation touches no maps. Instances are immutable and safe to evaluate
/// concurrently.
///
/// Evaluation is deterministic: terms are summed in lexicographic multi-index
/// order and each tensor contraction runs dimension-major with a fixed node
/// order, so identical inputs give bit-identical results.
class Interpolant {
public:
    Interpolant(SparseGrid grid, Dataset data);

    const SparseGrid& grid() const { return grid_; }
    const Dataset& data() const { return data_; }

    /// Value at x. Throws out_of_domain when x is outside the closed box.
    double evaluate(std::span<const double> x) const;

    std::vector<double> evaluate_many(const std::vector<std::vector<double>>& points) const;

    /// Reference-space tolerance for snapping a query onto a node. Queries
    /// whose reference coordinate is within this distance of a node take that
    /// node's basis directly, avoiding the 0/0 of the barycentric form.
    static constexpr double exact_hit_tolerance = 1e-14;

private:
    struct Level1D {
        std::vector<double> positions;  // reference coordinates, ascending
        std::vector<double> weights;    // barycentric weights, endpoint halved
    };

    struct Term {
        std::vector<int> levels;
        double coefficient;
        std::vector<double> values;  // tensor block, first dimension slowest
        std::vector<int> strides;
    };

    double contract(const Term& term, std::size_t dim, std::size_t offset,
                    const std::vector<std::vector<double>>& basis) const;

    SparseGrid grid_;
    Dataset data_;
    std::vector<Level1D> levels_;  // indexed by level, entry 0 unused
    std::vector<Term> terms_;      // lexicographic multi-index order
};

} // namespace sgi
