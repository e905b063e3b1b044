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

#include "ringsim/evolve.hpp"

#include <complex>
#include <stdexcept>

namespace ringsim {

namespace {

const std::complex<double> kI(0.0, 1.0);

void reserve_trajectory(Trajectory& traj, std::size_t n_times, int n_sites,
                        bool keep_states) {
  traj.times.assign(n_times, 0.0);
  traj.site_populations.setZero(static_cast<Eigen::Index>(n_times), n_sites);
  traj.sink_population.setZero(static_cast<Eigen::Index>(n_times));
  traj.coherence_l1.setZero(static_cast<Eigen::Index>(n_times));
  traj.trace.setZero(static_cast<Eigen::Index>(n_times));
  if (keep_states) traj.states.resize(n_times);
}

}  // namespace

Trajectory evolve_closed(const Eigen::MatrixXd& h, int initial_site,
                         std::span<const double> times) {
  detail::validate_sample_times(times);
  const int n = static_cast<int>(h.rows());
  if (initial_site < 0 || initial_site >= n) {
    throw std::invalid_argument("initial site out of range");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("symmetric eigensolver failed to converge");
  }
  const Eigen::MatrixXd& vecs = solver.eigenvectors();
  const Eigen::VectorXd& vals = solver.eigenvalues();
  // Components of |initial> in the eigenbasis.
  const Eigen::VectorXd weights = vecs.row(initial_site).transpose();

  Trajectory traj;
  reserve_trajectory(traj, times.size(), n, false);
  Eigen::VectorXcd phases(n), amp(n);
  for (std::size_t it = 0; it < times.size(); ++it) {
    const double t = times[it];
    for (int k = 0; k < n; ++k) {
      phases[k] = std::exp(-kI * (vals[k] * t)) * weights[k];
    }
    amp = vecs.cast<std::complex<double>>() * phases;
    traj.times[it] = t;
    double norm = 0.0;
    double abs_sum = 0.0;
    for (int j = 0; j < n; ++j) {
      const double p = std::norm(amp[j]);
      traj.site_populations(static_cast<Eigen::Index>(it), j) = p;
      norm += p;
      abs_sum += std::abs(amp[j]);
    }
    traj.trace[static_cast<Eigen::Index>(it)] = norm;
    // l1 coherence of a pure state: (sum_j |psi_j|)^2 - sum_j |psi_j|^2.
    traj.coherence_l1[static_cast<Eigen::Index>(it)] = abs_sum * abs_sum - norm;
  }
  return traj;
}

Trajectory evolve_open_from(const Eigen::MatrixXd& h_ring,
                            const NoiseParams& noise,
                            const Eigen::MatrixXcd& rho0,
                            std::span<const double> times,
                            const IntegratorConfig& integrator,
                            bool keep_states) {
  const int n = static_cast<int>(h_ring.rows());
  const int d = n + 1;
  if (rho0.rows() != d || rho0.cols() != d) {
    throw std::invalid_argument("initial state dimension must be n_sites + 1");
  }
  const RingLindbladRhs rhs(h_ring, noise);

  Trajectory traj;
  reserve_trajectory(traj, times.size(), n, keep_states);

  auto record = [&](std::size_t index, double t, const Eigen::MatrixXcd& rho) {
    traj.times[index] = t;
    for (int j = 0; j < n; ++j) {
      traj.site_populations(static_cast<Eigen::Index>(index), j) =
          rho(j, j).real();
    }
    traj.sink_population[static_cast<Eigen::Index>(index)] =
        sink_population(rho);
    traj.coherence_l1[static_cast<Eigen::Index>(index)] = coherence_l1(rho);
    traj.trace[static_cast<Eigen::Index>(index)] = rho.trace().real();
    if (keep_states) traj.states[index] = rho;
  };
  auto hermitize = [](Eigen::MatrixXcd& m) {
    m = 0.5 * (m + m.adjoint()).eval();
  };

  if (integrator.method == StepMethod::adaptive) {
    integrate_adaptive(rhs, rho0, times, record, integrator, hermitize);
  } else {
    integrate_rk4(rhs, rho0, times, record, integrator, hermitize);
  }
  return traj;
}

Trajectory evolve_open(const Eigen::MatrixXd& h_ring, const NoiseParams& noise,
                       int initial_site, std::span<const double> times,
                       const IntegratorConfig& integrator, bool keep_states) {
  const int n = static_cast<int>(h_ring.rows());
  if (initial_site < 0 || initial_site >= n) {
    throw std::invalid_argument("initial site out of range");
  }
  return evolve_open_from(h_ring, noise, site_basis_state(n + 1, initial_site),
                          times, integrator, keep_states);
}

SinkRateScan optimize_sink_rate(const Eigen::MatrixXd& h_ring,
                                const NoiseParams& base, int initial_site,
                                std::span<const double> rate_grid,
                                double t_eval,
                                const IntegratorConfig& integrator) {
  if (rate_grid.empty()) {
    throw std::invalid_argument("sink-rate grid must be non-empty");
  }
  SinkRateScan scan;
  scan.rates.assign(rate_grid.begin(), rate_grid.end());
  scan.efficiency.reserve(rate_grid.size());
  const std::vector<double> times{t_eval};
  for (double rate : rate_grid) {
    if (!(rate > 0.0)) {
      throw std::invalid_argument("sink rates must be positive");
    }
    NoiseParams noise = base;
    noise.sink_rate = rate;
    const Trajectory traj =
        evolve_open(h_ring, noise, initial_site, times, integrator);
    scan.efficiency.push_back(traj.sink_population[0]);
  }
  scan.best_index = 0;
  for (std::size_t i = 1; i < scan.efficiency.size(); ++i) {
    const bool better = scan.efficiency[i] > scan.efficiency[scan.best_index];
    const bool tie = scan.efficiency[i] == scan.efficiency[scan.best_index] &&
                     scan.rates[i] < scan.rates[scan.best_index];
    if (better || tie) scan.best_index = i;
  }
  scan.best_rate = scan.rates[scan.best_index];
  return scan;
}

}  // namespace ringsim
