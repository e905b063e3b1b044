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

#include "ringsim/ensemble.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "ringsim/disorder.hpp"
#include "ringsim/hamiltonian.hpp"
#include "ringsim/thread_pool.hpp"

namespace ringsim {

namespace {

void validate_config(const EnsembleConfig& cfg) {
  if (cfg.realizations < 1) {
    throw std::invalid_argument("ensemble needs at least one realization");
  }
  if (cfg.sigma_over_j < 0.0 || !std::isfinite(cfg.sigma_over_j)) {
    throw std::invalid_argument("sigma/J must be finite and >= 0");
  }
  if (cfg.gamma_over_j < 0.0 || !std::isfinite(cfg.gamma_over_j)) {
    throw std::invalid_argument("gamma/J must be finite and >= 0");
  }
  if (!(cfg.sink_rate_over_j > 0.0) || !std::isfinite(cfg.sink_rate_over_j)) {
    throw std::invalid_argument("Gamma/J must be finite and > 0");
  }
  const int n = cfg.topology.n_sites();
  if (cfg.initial_site < 0 || cfg.initial_site >= n ||
      cfg.source_site < 0 || cfg.source_site >= n) {
    throw std::invalid_argument("site index out of range");
  }
}

// Effective number of realizations: with sigma = 0 every realization is the
// same trajectory, so one run represents the whole ensemble exactly.
int effective_realizations(const EnsembleConfig& cfg) {
  return cfg.sigma_over_j == 0.0 ? 1 : cfg.realizations;
}

// Mean and stderr over per-realization series, accumulated in index order.
void reduce_in_order(const std::vector<Eigen::VectorXd>& series,
                     Eigen::VectorXd& mean, Eigen::VectorXd& stderr_) {
  const std::size_t m = series.size();
  const Eigen::Index len = series.front().size();
  mean.setZero(len);
  for (const auto& s : series) mean += s;
  mean /= static_cast<double>(m);
  stderr_.setZero(len);
  if (m > 1) {
    for (const auto& s : series) {
      stderr_ += (s - mean).cwiseAbs2();
    }
    stderr_ = (stderr_ / static_cast<double>(m - 1)).cwiseSqrt() /
              std::sqrt(static_cast<double>(m));
  }
}

// Scalar flavour of the same fixed-order reduction.
void reduce_scalars(const double* values, int m, double& mean,
                    double& stderr_) {
  mean = 0.0;
  for (int i = 0; i < m; ++i) mean += values[i];
  mean /= static_cast<double>(m);
  stderr_ = 0.0;
  if (m > 1) {
    double ss = 0.0;
    for (int i = 0; i < m; ++i) {
      const double dev = values[i] - mean;
      ss += dev * dev;
    }
    stderr_ = std::sqrt(ss / static_cast<double>(m - 1)) /
              std::sqrt(static_cast<double>(m));
  }
}

}  // namespace

ScaledModel make_scaled_model(const EnsembleConfig& cfg, std::uint64_t index) {
  validate_config(cfg);
  const double jbar = cfg.topology.effective_j();
  const double scale = cfg.topology.energy_scale();
  const DisorderRealization d = sample_disorder(
      cfg.topology.n_sites(), cfg.sigma_over_j * jbar, cfg.seed, index);
  ScaledModel model{
      apply_disorder(build_hamiltonian(cfg.topology), d) / scale,
      NoiseParams{cfg.gamma_over_j * jbar / scale,
                  cfg.sink_rate_over_j * jbar / scale, cfg.source_site}};
  return model;
}

Trajectory run_realization(const EnsembleConfig& cfg, std::uint64_t index,
                           std::span<const double> times) {
  const ScaledModel model = make_scaled_model(cfg, index);
  try {
    return evolve_open(model.h_ring, model.noise, cfg.initial_site, times,
                       cfg.integrator);
  } catch (const IntegrationError& e) {
    throw IntegrationError("realization " + std::to_string(index) + ": " +
                           e.what());
  }
}

SeriesStats ensemble_average(const EnsembleConfig& cfg,
                             std::span<const double> times, int threads) {
  validate_config(cfg);
  const int m = effective_realizations(cfg);
  std::vector<Eigen::VectorXd> series(static_cast<std::size_t>(m));
  parallel_for(static_cast<std::size_t>(m), threads, [&](std::size_t i) {
    series[i] = run_realization(cfg, i, times).sink_population;
  });
  SeriesStats stats;
  stats.times.assign(times.begin(), times.end());
  reduce_in_order(series, stats.mean, stats.stderr_);
  return stats;
}

std::vector<SweepPoint> sweep_disorder(const EnsembleConfig& cfg,
                                       std::span<const double> sigma_grid,
                                       int threads) {
  if (sigma_grid.empty()) {
    throw std::invalid_argument("sigma grid must be non-empty");
  }
  // One flat work list over (sigma, realization) so small grids still use
  // every worker; reduction stays per-cell in realization order.
  struct Item {
    std::size_t cell;
    std::uint64_t index;
  };
  std::vector<Item> items;
  std::vector<int> cell_m(sigma_grid.size());
  for (std::size_t s = 0; s < sigma_grid.size(); ++s) {
    EnsembleConfig cell_cfg = cfg;
    cell_cfg.sigma_over_j = sigma_grid[s];
    validate_config(cell_cfg);
    cell_m[s] = effective_realizations(cell_cfg);
    for (int i = 0; i < cell_m[s]; ++i) {
      items.push_back({s, static_cast<std::uint64_t>(i)});
    }
  }
  std::vector<double> values(items.size());
  const std::vector<double> times{cfg.t_eval};
  parallel_for(items.size(), threads, [&](std::size_t w) {
    EnsembleConfig cell_cfg = cfg;
    cell_cfg.sigma_over_j = sigma_grid[items[w].cell];
    values[w] =
        run_realization(cell_cfg, items[w].index, times).sink_population[0];
  });

  std::vector<SweepPoint> curve(sigma_grid.size());
  std::size_t offset = 0;
  for (std::size_t s = 0; s < sigma_grid.size(); ++s) {
    double mean = 0.0, err = 0.0;
    reduce_scalars(values.data() + offset, cell_m[s], mean, err);
    offset += static_cast<std::size_t>(cell_m[s]);
    curve[s] = {sigma_grid[s], mean, err};
  }
  return curve;
}

std::vector<SweepPoint> sweep_dephasing(const EnsembleConfig& cfg,
                                        std::span<const double> gamma_grid,
                                        int threads) {
  if (gamma_grid.empty()) {
    throw std::invalid_argument("gamma grid must be non-empty");
  }
  std::vector<double> values(gamma_grid.size());
  const std::vector<double> times{cfg.t_eval};
  parallel_for(gamma_grid.size(), threads, [&](std::size_t g) {
    EnsembleConfig point_cfg = cfg;
    point_cfg.sigma_over_j = 0.0;
    point_cfg.gamma_over_j = gamma_grid[g];
    point_cfg.realizations = 1;
    values[g] = run_realization(point_cfg, 0, times).sink_population[0];
  });
  std::vector<SweepPoint> curve(gamma_grid.size());
  for (std::size_t g = 0; g < gamma_grid.size(); ++g) {
    curve[g] = {gamma_grid[g], values[g], 0.0};
  }
  return curve;
}

EfficiencyMap dat_map(const EnsembleConfig& cfg,
                      std::span<const double> sigma_grid,
                      std::span<const double> gamma_grid, int threads) {
  if (sigma_grid.empty() || gamma_grid.empty()) {
    throw std::invalid_argument("dat_map grids must be non-empty");
  }
  const std::size_t ns = sigma_grid.size();
  const std::size_t ng = gamma_grid.size();

  struct Item {
    std::size_t s, g;
    std::uint64_t index;
  };
  std::vector<Item> items;
  std::vector<int> cell_m(ns);
  for (std::size_t s = 0; s < ns; ++s) {
    EnsembleConfig probe = cfg;
    probe.sigma_over_j = sigma_grid[s];
    validate_config(probe);
    cell_m[s] = effective_realizations(probe);
    for (std::size_t g = 0; g < ng; ++g) {
      for (int i = 0; i < cell_m[s]; ++i) {
        items.push_back({s, g, static_cast<std::uint64_t>(i)});
      }
    }
  }

  std::vector<double> values(items.size());
  const std::vector<double> times{cfg.t_eval};
  parallel_for(items.size(), threads, [&](std::size_t w) {
    EnsembleConfig cell_cfg = cfg;
    cell_cfg.sigma_over_j = sigma_grid[items[w].s];
    cell_cfg.gamma_over_j = gamma_grid[items[w].g];
    values[w] =
        run_realization(cell_cfg, items[w].index, times).sink_population[0];
  });

  EfficiencyMap map;
  map.sigma_grid.assign(sigma_grid.begin(), sigma_grid.end());
  map.gamma_grid.assign(gamma_grid.begin(), gamma_grid.end());
  map.mean.setZero(static_cast<Eigen::Index>(ns), static_cast<Eigen::Index>(ng));
  map.stderr_.setZero(static_cast<Eigen::Index>(ns),
                      static_cast<Eigen::Index>(ng));
  map.realizations = cfg.realizations;
  map.t_eval = cfg.t_eval;

  std::size_t offset = 0;
  for (std::size_t s = 0; s < ns; ++s) {
    for (std::size_t g = 0; g < ng; ++g) {
      double mean = 0.0, err = 0.0;
      reduce_scalars(values.data() + offset, cell_m[s], mean, err);
      offset += static_cast<std::size_t>(cell_m[s]);
      map.mean(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(g)) =
          mean;
      map.stderr_(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(g)) =
          err;
    }
  }
  return map;
}

ComparisonCurves dat_comparison(const EnsembleConfig& cfg,
                                double sigma_over_j, double gamma_over_j,
                                std::span<const double> times, int threads) {
  EnsembleConfig disorder_cfg = cfg;
  disorder_cfg.sigma_over_j = sigma_over_j;
  disorder_cfg.gamma_over_j = 0.0;
  EnsembleConfig dat_cfg = disorder_cfg;
  dat_cfg.gamma_over_j = gamma_over_j;
  EnsembleConfig clean_cfg = cfg;
  clean_cfg.sigma_over_j = 0.0;
  clean_cfg.gamma_over_j = 0.0;

  ComparisonCurves curves;
  curves.times.assign(times.begin(), times.end());
  curves.clean = ensemble_average(clean_cfg, times, threads).mean;
  curves.disorder_only = ensemble_average(disorder_cfg, times, threads).mean;
  curves.disorder_dephasing = ensemble_average(dat_cfg, times, threads).mean;
  return curves;
}

}  // namespace ringsim
