// Copyright 2026 the ringsim authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <span>
#include <vector>

#include "ringsim/evolve.hpp"
#include "ringsim/integrator.hpp"
#include "ringsim/lindblad.hpp"
#include "ringsim/topology.hpp"

namespace ringsim {

/// One disorder-ensemble configuration. All ratios are relative to the
/// topology's effective J; trajectory times are on the dimensionless axis
/// fixed by RingTopology::energy_scale() ("Jt" in the outputs).
struct EnsembleConfig {
  RingTopology topology;
  int realizations = 50;          // M
  double sigma_over_j = 0.0;      // static disorder strength
  double gamma_over_j = 0.0;      // pure dephasing
  double sink_rate_over_j = 2.0;  // absorption rate, > 0
  double t_eval = 100.0;          // evaluation time for efficiencies
  std::uint64_t seed = 12345;
  int initial_site = 0;           // 0-based
  int source_site = 16;           // 0-based ring site feeding the sink
  IntegratorConfig integrator{};
};

/// Dimensionless Hamiltonian and rates for one disorder realization.
/// Realization `index` draws its standard-normal offsets from the RNG
/// stream (seed, index) regardless of sigma or gamma, so grid cells share
/// disorder samples and dephasing comparisons use common noise.
struct ScaledModel {
  Eigen::MatrixXd h_ring;  // (H + diag(offsets)) / energy_scale
  NoiseParams noise;
};

ScaledModel make_scaled_model(const EnsembleConfig& cfg, std::uint64_t index);

/// Integrates one realization and returns its observables. Deterministic
/// given (cfg, index); integration failures carry the realization index.
Trajectory run_realization(const EnsembleConfig& cfg, std::uint64_t index,
                           std::span<const double> times);

/// Mean and standard error of a sampled series over the ensemble.
struct SeriesStats {
  std::vector<double> times;
  Eigen::VectorXd mean;
  Eigen::VectorXd stderr_;  // sample std / sqrt(M); zero when M = 1
};

/// Ensemble-averaged sink population. Realizations run in parallel; the
/// reduction always accumulates in realization order, so the result is
/// bit-identical for any worker count. sigma = 0 collapses to a single
/// realization (all realizations are identical by construction).
SeriesStats ensemble_average(const EnsembleConfig& cfg,
                             std::span<const double> times, int threads = 1);

struct SweepPoint {
  double x = 0.0;  // sigma/J or gamma/J
  double mean = 0.0;
  double stderr_ = 0.0;
};

/// Efficiency at cfg.t_eval per sigma value (Anderson-localization curve).
std::vector<SweepPoint> sweep_disorder(const EnsembleConfig& cfg,
                                       std::span<const double> sigma_grid,
                                       int threads = 1);

/// Efficiency at cfg.t_eval per gamma value with sigma forced to 0; no
/// ensemble is needed, so M is forced to 1.
std::vector<SweepPoint> sweep_dephasing(const EnsembleConfig& cfg,
                                        std::span<const double> gamma_grid,
                                        int threads = 1);

/// Ensemble-averaged efficiency over a (sigma/J, gamma/J) grid.
struct EfficiencyMap {
  std::vector<double> sigma_grid;
  std::vector<double> gamma_grid;
  Eigen::MatrixXd mean;     // |sigma| x |gamma|
  Eigen::MatrixXd stderr_;  // same shape
  int realizations = 0;
  double t_eval = 0.0;
};

EfficiencyMap dat_map(const EnsembleConfig& cfg,
                      std::span<const double> sigma_grid,
                      std::span<const double> gamma_grid, int threads = 1);

/// Sink-population time series for the clean ring, the disordered ensemble,
/// and the disordered ensemble with dephasing (identical disorder samples
/// for the last two).
struct ComparisonCurves {
  std::vector<double> times;
  Eigen::VectorXd clean;
  Eigen::VectorXd disorder_only;
  Eigen::VectorXd disorder_dephasing;
};

ComparisonCurves dat_comparison(const EnsembleConfig& cfg,
                                double sigma_over_j, double gamma_over_j,
                                std::span<const double> times,
                                int threads = 1);

}  // namespace ringsim
