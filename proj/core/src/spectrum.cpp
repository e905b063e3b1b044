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

#include "ringsim/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace ringsim {

namespace {

using std::numbers::pi;
const std::complex<double> kI(0.0, 1.0);

// Sorts eigenvalues ascending and permutes the eigenvector columns along.
void sort_spectrum(SpectrumResult& s) {
  const Eigen::Index n = s.eigenvalues.size();
  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
    return s.eigenvalues[a] < s.eigenvalues[b];
  });
  Eigen::VectorXd vals(n);
  std::optional<Eigen::MatrixXcd> vecs;
  if (s.eigenvectors) vecs.emplace(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    vals[i] = s.eigenvalues[order[static_cast<std::size_t>(i)]];
    if (vecs) vecs->col(i) = s.eigenvectors->col(order[static_cast<std::size_t>(i)]);
  }
  s.eigenvalues = std::move(vals);
  s.eigenvectors = std::move(vecs);
}

SpectrumResult analytic_isotropic(const RingTopology& topology,
                                  bool with_eigenvectors) {
  const int n = topology.n_sites();
  const double j = std::get<Isotropic>(topology.coupling()).j;
  SpectrumResult s;
  s.source = SpectrumSource::analytic;
  s.eigenvalues.resize(n);
  if (with_eigenvectors) s.eigenvectors.emplace(Eigen::MatrixXcd(n, n));
  const double norm = 1.0 / std::sqrt(static_cast<double>(n));
  for (int k = 1; k <= n; ++k) {
    const double phase = 2.0 * pi * k / n;
    s.eigenvalues[k - 1] = 2.0 * j * std::cos(phase);
    if (with_eigenvectors) {
      for (int site = 0; site < n; ++site) {
        s.eigenvectors->operator()(site, k - 1) =
            norm * std::exp(kI * (phase * site));
      }
    }
  }
  sort_spectrum(s);
  return s;
}

SpectrumResult analytic_dimerized(const RingTopology& topology,
                                  bool with_eigenvectors) {
  const int n = topology.n_sites();
  const int cells = n / 2;
  SpectrumResult s;
  s.source = SpectrumSource::analytic;
  s.eigenvalues.resize(n);
  if (with_eigenvectors) s.eigenvectors.emplace(Eigen::MatrixXcd(n, n));
  const double cell_norm = 1.0 / std::sqrt(static_cast<double>(cells));
  for (int k = 0; k < cells; ++k) {
    const DimerBlock block = dimer_block(k, topology);
    s.eigenvalues[2 * k] = block.e;
    s.eigenvalues[2 * k + 1] = -block.e;
    if (with_eigenvectors) {
      const double alpha = 2.0 * pi * k / cells;
      // Per-cell amplitudes come from the block's unitary columns; the
      // Bloch phase distributes them over the ring.
      for (int cell = 0; cell < cells; ++cell) {
        const std::complex<double> bloch =
            cell_norm * std::exp(kI * (alpha * cell));
        for (int branch = 0; branch < 2; ++branch) {
          s.eigenvectors->operator()(2 * cell, 2 * k + branch) =
              bloch * block.u(0, branch);
          s.eigenvectors->operator()(2 * cell + 1, 2 * k + branch) =
              bloch * block.u(1, branch);
        }
      }
    }
  }
  sort_spectrum(s);
  return s;
}

}  // namespace

SpectrumResult analytic_spectrum(const RingTopology& topology,
                                 bool with_eigenvectors) {
  return topology.is_dimerized()
             ? analytic_dimerized(topology, with_eigenvectors)
             : analytic_isotropic(topology, with_eigenvectors);
}

SpectrumResult numeric_spectrum(const Eigen::MatrixXd& h,
                                bool with_eigenvectors) {
  if (h.rows() != h.cols()) {
    throw std::invalid_argument("Hamiltonian must be square");
  }
  const double asym = (h - h.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-12 * std::max(1.0, h.cwiseAbs().maxCoeff())) {
    throw std::invalid_argument("Hamiltonian must be symmetric");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
      h, with_eigenvectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("symmetric eigensolver failed to converge");
  }
  SpectrumResult s;
  s.source = SpectrumSource::numeric;
  s.eigenvalues = solver.eigenvalues();
  if (with_eigenvectors) {
    s.eigenvectors.emplace(solver.eigenvectors().cast<std::complex<double>>());
  }
  return s;
}

DimerBlock dimer_block(int k, const RingTopology& topology) {
  const auto* dim = std::get_if<Dimerized>(&topology.coupling());
  if (dim == nullptr) {
    throw std::invalid_argument("dimer_block needs a dimerized topology");
  }
  const int cells = topology.n_sites() / 2;
  if (k < 0 || k >= cells) {
    throw std::invalid_argument("momentum index out of range");
  }
  const double alpha = 2.0 * std::numbers::pi * k / cells;
  const std::complex<double> c = dim->j1 + dim->j2 * std::exp(-kI * alpha);
  DimerBlock block;
  block.h << 0.0, c, std::conj(c), 0.0;
  block.e = std::abs(c);
  block.degenerate = block.e <= 1e-12 * (dim->j1 + dim->j2);
  // eta = (beta + exp(-i alpha)) / (e/J2); unit modulus away from the
  // band crossing, where any orthonormal basis of the zero block works.
  const std::complex<double> eta = block.degenerate ? 1.0 : c / block.e;
  const double r = 1.0 / std::sqrt(2.0);
  block.u << r * eta, -r * eta, r, r;
  return block;
}

double band_gap(const RingTopology& topology) {
  const auto* dim = std::get_if<Dimerized>(&topology.coupling());
  if (dim == nullptr) return 0.0;
  return 2.0 * std::abs(dim->j1 - dim->j2);
}

}  // namespace ringsim
