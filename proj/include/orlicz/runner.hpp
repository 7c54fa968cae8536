#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "orlicz/config.hpp"

namespace orlicz {

struct RunOverrides {
  std::optional<int> workers;
  std::optional<double> tol;
  std::optional<std::uint64_t> seed;
};

void apply_overrides(ExperimentConfig& cfg, const RunOverrides& o);

/// Hypothesis and index report as JSON on `out`; 0 iff the profile holds.
int run_check(const ExperimentConfig& cfg, std::ostream& out);

/// Solves every lambda row and writes report_<k>.json, u1_<k>.csv, u2_<k>.csv,
/// summary.csv and hypothesis.json into output_dir. 0 iff every row succeeded
/// or was classified LambdaTooSmall.
int run_experiment(const ExperimentConfig& cfg, std::ostream& log);

/// Modulars and Luxemburg norms of an expression interpolated on the mesh.
int run_norms(const ExperimentConfig& cfg, const std::string& expr, std::ostream& out);

/// Seed of row k, a pure function of (seed, k).
std::uint64_t row_seed(std::uint64_t seed, std::size_t k);

}  // namespace orlicz
