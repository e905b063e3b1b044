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
#include <span>
#include <vector>

#include "ringsim/integrator.hpp"
#include "ringsim/lindblad.hpp"

namespace ringsim {

/// Time series of observables (and optionally full states) along one
/// evolution. Immutable after production; safe to share across threads.
struct Trajectory {
  std::vector<double> times;         // strictly increasing
  Eigen::MatrixXd site_populations;  // n_times x n_sites
  Eigen::VectorXd sink_population;   // zero for closed evolution
  Eigen::VectorXd coherence_l1;      // sum_{i != j} |rho_ij|
  Eigen::VectorXd trace;             // total population (norm for closed)
  std::vector<Eigen::MatrixXcd> states;  // filled only when requested
};

/// Unitary evolution |psi(t)> = exp(-i H t) |initial> via eigendecomposition
/// of the (real symmetric) Hamiltonian; exact up to eigensolver error.
Trajectory evolve_closed(const Eigen::MatrixXd& h, int initial_site,
                         std::span<const double> times);

/// Open evolution of the ring + sink system from rho(0) = |initial><initial|.
/// h_ring is the n x n ring Hamiltonian; the state space is n+1 dimensional
/// with the sink last. The state is re-hermitized after every accepted step.
Trajectory evolve_open(const Eigen::MatrixXd& h_ring, const NoiseParams& noise,
                       int initial_site, std::span<const double> times,
                       const IntegratorConfig& integrator = {},
                       bool keep_states = false);

/// Open evolution from an arbitrary initial density matrix (dim n+1).
Trajectory evolve_open_from(const Eigen::MatrixXd& h_ring,
                            const NoiseParams& noise,
                            const Eigen::MatrixXcd& rho0,
                            std::span<const double> times,
                            const IntegratorConfig& integrator = {},
                            bool keep_states = false);

/// Sink population at t_eval for each candidate sink rate, plus the argmax.
/// Ties go to the smaller rate.
struct SinkRateScan {
  std::vector<double> rates;       // same units as h_ring
  std::vector<double> efficiency;  // p_sink(t_eval)
  double best_rate = 0.0;
  std::size_t best_index = 0;
};

SinkRateScan optimize_sink_rate(const Eigen::MatrixXd& h_ring,
                                const NoiseParams& base, int initial_site,
                                std::span<const double> rate_grid,
                                double t_eval,
                                const IntegratorConfig& integrator = {});

}  // namespace ringsim
