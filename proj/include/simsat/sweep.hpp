#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "simsat/field.hpp"
#include "simsat/level_sets.hpp"
#include "simsat/mixed_norm.hpp"
#include "simsat/records.hpp"
#include "simsat/surface.hpp"

namespace simsat {

/// Validated sweep configuration; the JSON schema is documented in the README.
struct ExperimentConfig {
  std::string experiment_id = "sweep";
  int d = 2;
  int k = 1;
  std::vector<GraphHypersurface> surfaces;
  std::vector<double> lambdas;
  double grid_scale = 16.0;       // grid spacing = 1 / (grid_scale * lambda)
  int grid_oversampling = 4;      // minimum grid points per wavelength
  double epsilon = 0.1;
  double epsilon_tilde = 0.1;
  MixedNormSpec norm;
  double target_exponent = 0.0;
  double slack = 0.15;
  int draws = 20;                 // random-phase draws on top of the constant
  std::uint64_t seed = 0;
  std::string output_csv;
  std::string output_manifest;

  void validate() const;
};

std::string config_to_json(const ExperimentConfig& config);
ExperimentConfig config_from_json(const std::string& text);

/// Per-shell packing analysis: net sizes at radius lambda^{-1+eps}, the
/// measure estimate |Omega_i| ~ N * vol(B_r), per-shell lower bounds
/// L_i = 2^{-(i+1)/k} sup^{1/k} and the fitted constants
/// C_i = N^{1-eps} (L_i/B)^{2k/(k-1)}.
std::vector<ShellStat> omega_bound_check(const LevelSetPartition& partition,
                                         const std::vector<SeparatedNet>& nets,
                                         double lambda, double epsilon,
                                         double bound_b, double sup, int k);

struct SweepResult {
  std::vector<RunRecord> records;
  double slope = 0.0;
  bool pass_slope = false;
  double c0_ratio = 0.0;  // max/min of shell-0 fitted constants across lambda
  std::string config_json;
};

/// Runs the lambda sweep: per lambda the input family (constant saturator
/// plus seeded random-phase draws) is normalised, extended, multiplied, and
/// measured in the configured norm; the reported norm is the family max. The
/// argmax field feeds the level-set/net pipeline. Fits log norm against log
/// lambda at the end.
SweepResult restriction_sweep(const ExperimentConfig& config);

/// Re-runs a sweep from a manifest's embedded config.
SweepResult rerun_from_manifest(const std::string& manifest_path);

double unit_ball_volume(int dim);

}  // namespace simsat
