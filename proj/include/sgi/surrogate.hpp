#pragma once

#include <map>
#include <vector>

#include "sgi/interpolant.hpp"

namespace sgi {

enum class Provenance { true_eval, surrogate_fill };

/// Values over a target grid where selected points carry true evaluations and
/// every other point carries a baseline-model prediction.
struct HybridDataset {
    Dataset values;
    std::map<PointId, Provenance> provenance;
};

/// Fill the target grid: selected points take their supplied true values, all
/// other points take the baseline model's value there. For points of the
/// baseline's own grid the stored baseline data is reused directly instead of
/// re-evaluating the model (identical by node exactness).
///
/// Throws incomplete_selection when a selected point has no supplied value,
/// invalid_argument when a selected point is not a target grid point.
HybridDataset hybrid_values(const SparseGrid& target,
                            const std::vector<GridPoint>& selected,
                            const Dataset& true_values,
                            const Interpolant& baseline);

/// The refined model: a plain target-level interpolant over the hybrid values.
Interpolant build_informed(const HybridDataset& hybrid, const SparseGrid& target);

/// Residual data for the correction form: true value minus baseline prediction
/// at selected points, exactly zero elsewhere on the target grid.
Dataset error_function_values(const SparseGrid& target,
                              const std::vector<GridPoint>& selected,
                              const Dataset& true_values,
                              const Interpolant& baseline);

/// Additive form of the refined model: baseline plus an interpolant of the
/// selected-point residuals. Pointwise equal to the hybrid-filled model up to
/// roundoff; kept as an independent construction for cross-checking.
struct CorrectionModel {
    Interpolant base;
    Interpolant error_surrogate;

    double evaluate(std::span<const double> x) const {
        return base.evaluate(x) + error_surrogate.evaluate(x);
    }
};

CorrectionModel make_correction_model(const SparseGrid& target,
                                      const std::vector<GridPoint>& selected,
                                      const Dataset& true_values,
                                      const Interpolant& baseline);

} // namespace sgi
