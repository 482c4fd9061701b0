#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "sgi/interpolant.hpp"
#include "sgi/refinement.hpp"
#include "sgi/surrogate.hpp"

namespace sgi {

/// Shortest-exact decimal form of a double ("%.17g" trimmed); parses back to
/// the identical bit pattern.
std::string format_double(double v);

/// Grid export: header `point_id,x1,...,xd`, one row per point in id order.
void write_grid_csv(const SparseGrid& grid, const std::filesystem::path& path);

/// Ranked-candidate export: `rank,point_id,x1,...,xd,delta,eta,selected`.
/// Pass nullptr for `selection` to flag every row 0.
void write_ranked_csv(const std::vector<RankedCandidate>& ranked,
                      const SelectionResult* selection,
                      const std::filesystem::path& path);

/// Dataset as `point_id,value` rows.
void write_dataset_csv(const Dataset& data, const std::filesystem::path& path);
Dataset read_dataset_csv(const std::filesystem::path& path);

/// Dataset rows plus a provenance column (`true_eval` / `surrogate_fill`).
void write_hybrid_csv(const HybridDataset& hybrid, const std::filesystem::path& path);

/// Model persistence: one JSON document with dimension, level, domain
/// intervals, values keyed by point id, and format_version "1".
void save_model_json(const Interpolant& model, const std::filesystem::path& path);
Interpolant load_model_json(const std::filesystem::path& path);

} // namespace sgi
