#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "sgi/benchmarks.hpp"
#include "sgi/dataset.hpp"
#include "sgi/refinement.hpp"

namespace sgi {

/// Sample lattice along one or two free axes with the rest held fixed.
struct SliceSpec {
    std::vector<std::optional<double>> fixed;  // one entry per dimension; nullopt = free axis
    int samples = 101;                         // per free axis
};

/// Everything needed to run one refinement experiment. `benchmark` selects an
/// analytic function; leave it empty to drive advise/ingest from an external
/// dataset, in which case dimension and domain come from the config itself.
struct ExperimentConfig {
    std::string benchmark;
    int dimension = 0;  // 0 = benchmark default
    int base_level = 2;
    SelectionStrategy strategy = SelectionStrategy::threshold;
    double tau = 0.2;
    std::size_t budget = 0;
    double epsilon = 1e-12;
    int test_point_count = 50;
    std::uint64_t seed = 42;
    std::filesystem::path output_dir;
    std::optional<std::vector<double>> coefficients;
    std::optional<std::vector<Interval>> domain;  // required for external data
    std::optional<SliceSpec> slice_1d;
    std::optional<SliceSpec> slice_2d;
    int convergence_stride = 1;
};

ExperimentConfig config_from_json_file(const std::filesystem::path& path);

/// n uniform points in the domain box drawn from SplitMix64(seed),
/// dimension-major: all n draws for dimension 1 first, then dimension 2, and
/// so on. Identical (seed, n, domain) gives identical points on any platform.
std::vector<std::vector<double>> sample_test_points(const Domain& domain, std::size_t n,
                                                    std::uint64_t seed);

/// 100 * |pred - truth| / |truth| when |truth| > epsilon, else
/// 100 * |pred - truth|.
double percentage_error(double pred, double truth, double epsilon = 1e-12);

struct ErrorMetrics {
    double max_abs = 0.0;
    double rmse = 0.0;
};

ErrorMetrics error_metrics(std::span<const double> preds, std::span<const double> truths);

struct ConvergenceRow {
    std::size_t n_refined;
    double max_abs_error;
    double rmse;
    std::uint64_t true_calls_cumulative;
};

/// Incremental refinement study: row 0 is the base model, row n the refined
/// model built from the top-n ranked candidates, the final row the fully
/// evaluated target grid.
std::vector<ConvergenceRow> convergence_sweep(const ExperimentConfig& config);

void write_convergence_csv(const std::vector<ConvergenceRow>& rows,
                           const std::filesystem::path& path);

/// Rank the target-level candidates from an existing base-grid dataset, apply
/// the configured selection, and export the ranked CSV with selection flags.
/// Performs zero evaluations of the underlying function. Returns the path of
/// the written file.
std::filesystem::path advise(const ExperimentConfig& config, const Dataset& base_data);

struct IngestReport {
    std::size_t true_eval_count = 0;
    std::size_t surrogate_fill_count = 0;
    std::filesystem::path model_path;
};

/// Build the refined model from externally computed values for the selected
/// points (a `point_id,value` CSV) and persist it as model JSON. The selection
/// is re-derived from the config and base data, which is deterministic, so the
/// values file must cover exactly the points `advise` flagged.
IngestReport ingest_and_build(const ExperimentConfig& config, const Dataset& base_data,
                              const std::filesystem::path& values_file);

struct TestPointRecord {
    std::vector<double> coords;
    double truth;
    double base_pred;
    double informed_pred;
    double target_pred;
    double base_pct_err;
    double informed_pct_err;
    double target_pct_err;
};

struct ErrorReport {
    std::vector<TestPointRecord> records;
    ErrorMetrics base;
    ErrorMetrics informed;
    ErrorMetrics target;
    std::size_t selected_count = 0;
    std::size_t candidate_count = 0;
    std::uint64_t base_true_calls = 0;      // |base grid|
    std::uint64_t informed_true_calls = 0;  // |base grid| + |selection|
    std::uint64_t target_true_calls = 0;    // |target grid|
    double eta_max = 0.0;
};

/// Full analytic experiment: base, refined, and target models plus all CSV
/// artifacts (error comparison, histogram, convergence, slices) and a JSON
/// summary in the configured output directory.
ErrorReport run_benchmark_experiment(const ExperimentConfig& config);

} // namespace sgi
