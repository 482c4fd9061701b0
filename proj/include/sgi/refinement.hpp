#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sgi/interpolant.hpp"

namespace sgi {

/// A candidate refinement point with its discrepancy and indicator values.
/// Ranks are 1-based; rank 1 carries the largest indicator.
struct RankedCandidate {
    GridPoint point;
    double delta = 0.0;
    double eta = 0.0;
    int rank = 0;
};

enum class SelectionStrategy { budget, threshold, elbow };

std::string to_string(SelectionStrategy s);
SelectionStrategy selection_strategy_from_string(const std::string& name);

struct SelectionResult {
    std::vector<GridPoint> selected;  // in rank order; always a rank prefix
    SelectionStrategy strategy = SelectionStrategy::budget;
    std::optional<double> parameter;  // B or tau; absent for elbow
    double eta_max = 0.0;
};

/// Points of `target` absent from `base`, in ascending id order.
/// Requires equal dimension and domain and target.level == base.level + 1.
std::vector<GridPoint> candidate_set(const SparseGrid& base, const SparseGrid& target);

/// Absolute difference of two model predictions at x.
double discrepancy(const Interpolant& fine, const Interpolant& coarse,
                   std::span<const double> x);

/// Hybrid relative-absolute indicator: delta / |fine_value| when |fine_value|
/// exceeds epsilon, plain delta otherwise.
double indicator(double delta, double fine_value, double epsilon = 1e-12);

/// Indicator for every candidate, sorted descending by indicator with ties
/// broken by ascending point id. Uses only the two existing models; the true
/// function is never called.
std::vector<RankedCandidate> rank_candidates(const std::vector<GridPoint>& candidates,
                                             const Interpolant& fine,
                                             const Interpolant& coarse,
                                             double epsilon = 1e-12);

/// Top min(B, N) candidates.
SelectionResult select_budget(const std::vector<RankedCandidate>& ranked, std::size_t budget);

/// All candidates with eta >= tau * eta_max. tau must lie in [0, 1].
SelectionResult select_threshold(const std::vector<RankedCandidate>& ranked, double tau);

/// Cut at the point of the sorted indicator curve (k, eta_k) with maximum
/// perpendicular distance to the chord from (1, eta_1) to (N, eta_N); ties go
/// to the smallest k. Fewer than 3 candidates: select all.
SelectionResult select_elbow(const std::vector<RankedCandidate>& ranked);

} // namespace sgi
