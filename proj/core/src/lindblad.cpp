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

#include "ringsim/lindblad.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace ringsim {

namespace {

const std::complex<double> kI(0.0, 1.0);

void validate_noise(const NoiseParams& noise, int n_ring) {
  if (noise.dephasing_rate < 0.0 || noise.sink_rate < 0.0) {
    throw std::invalid_argument("noise rates must be >= 0");
  }
  if (noise.source_site < 0 || noise.source_site >= n_ring) {
    throw std::invalid_argument("sink source site out of range");
  }
}

}  // namespace

Eigen::MatrixXcd lindblad_rhs(const Eigen::MatrixXcd& rho,
                              const Eigen::MatrixXd& h_embedded,
                              const NoiseParams& noise) {
  const Eigen::Index d = rho.rows();
  if (rho.cols() != d || h_embedded.rows() != d || h_embedded.cols() != d) {
    throw std::invalid_argument("state and Hamiltonian dimensions must match");
  }
  const int n = static_cast<int>(d) - 1;
  validate_noise(noise, n);

  const Eigen::MatrixXcd h = h_embedded.cast<std::complex<double>>();
  Eigen::MatrixXcd out = -kI * (h * rho - rho * h);

  // Sink term: S = |sink><source|.
  Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(d, d);
  s(n, noise.source_site) = 1.0;
  const Eigen::MatrixXcd sds = s.adjoint() * s;
  out += noise.sink_rate *
         (2.0 * s * rho * s.adjoint() - sds * rho - rho * sds);

  // Uniform pure dephasing on the ring sites only.
  if (noise.dephasing_rate != 0.0) {
    for (int j = 0; j < n; ++j) {
      Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(d, d);
      p(j, j) = 1.0;
      out += noise.dephasing_rate * (2.0 * p * rho * p - p * rho - rho * p);
    }
  }
  return out;
}

RingLindbladRhs::RingLindbladRhs(const Eigen::MatrixXd& h_ring,
                                 const NoiseParams& noise)
    : n_(static_cast<int>(h_ring.rows())),
      gamma_(noise.dephasing_rate),
      sink_rate_(noise.sink_rate),
      source_(noise.source_site) {
  if (h_ring.rows() != h_ring.cols() || n_ < 1) {
    throw std::invalid_argument("ring Hamiltonian must be square, n >= 1");
  }
  validate_noise(noise, n_);
  diag_ = h_ring.diagonal();
  rows_.resize(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) {
    const int right = (i + 1) % n_;
    const int left = (i + n_ - 1) % n_;
    Row row;
    if (right != i) {
      row.c1 = right;
      row.v1 = h_ring(i, right);
    }
    if (left != i && left != right) {
      row.c2 = left;
      row.v2 = h_ring(i, left);
    }
    rows_[static_cast<std::size_t>(i)] = row;
  }
  // Anything outside the cyclic band would be silently dropped; refuse it.
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (i == j || j == (i + 1) % n_ || j == (i + n_ - 1) % n_) continue;
      if (h_ring(i, j) != 0.0) {
        throw std::invalid_argument(
            "ring Hamiltonian has entries off the cyclic neighbour band");
      }
    }
  }
  if ((h_ring - h_ring.transpose()).cwiseAbs().maxCoeff() != 0.0) {
    throw std::invalid_argument("ring Hamiltonian must be exactly symmetric");
  }
}

void RingLindbladRhs::operator()(const Eigen::MatrixXcd& rho,
                                 Eigen::MatrixXcd& out) const {
  const int d = n_ + 1;
  if (rho.rows() != d || rho.cols() != d) {
    throw std::invalid_argument("state dimension must be n_sites + 1");
  }
  out.resize(d, d);

  // out = -i (H rho - rho H), one pass; the sink row/column of H is zero.
  for (int i = 0; i < d; ++i) {
    const bool ring_row = i < n_;
    const Row row = ring_row ? rows_[static_cast<std::size_t>(i)] : Row{};
    const double di = ring_row ? diag_[i] : 0.0;
    for (int j = 0; j < d; ++j) {
      std::complex<double> hr = di * rho(i, j);  // (H rho)_ij
      if (ring_row) {
        if (row.c1 >= 0) hr += row.v1 * rho(row.c1, j);
        if (row.c2 >= 0) hr += row.v2 * rho(row.c2, j);
      }
      std::complex<double> rh(0.0, 0.0);  // (rho H)_ij
      if (j < n_) {
        const Row col = rows_[static_cast<std::size_t>(j)];
        rh = rho(i, j) * diag_[j];
        if (col.c1 >= 0) rh += rho(i, col.c1) * col.v1;
        if (col.c2 >= 0) rh += rho(i, col.c2) * col.v2;
      }
      out(i, j) = -kI * (hr - rh);
    }
  }

  // Dephasing acts element-wise: ring-ring coherences decay at 2 gamma,
  // ring-sink coherences at gamma, populations are untouched.
  if (gamma_ != 0.0) {
    const double g2 = 2.0 * gamma_;
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < n_; ++j) {
        if (i != j) out(i, j) -= g2 * rho(i, j);
      }
      out(i, n_) -= gamma_ * rho(i, n_);
      out(n_, i) -= gamma_ * rho(n_, i);
    }
  }

  // Sink term: feeds the sink population from the source population and
  // damps the source row/column.
  if (sink_rate_ != 0.0) {
    out(n_, n_) += 2.0 * sink_rate_ * rho(source_, source_);
    for (int k = 0; k < d; ++k) {
      out(source_, k) -= sink_rate_ * rho(source_, k);
      out(k, source_) -= sink_rate_ * rho(k, source_);
    }
  }
}

double sink_population(const Eigen::MatrixXcd& rho) {
  const Eigen::Index d = rho.rows();
  const double p = rho(d - 1, d - 1).real();
  return std::clamp(p, 0.0, 1.0);
}

double coherence_l1(const Eigen::MatrixXcd& rho) {
  double sum = 0.0;
  for (Eigen::Index i = 0; i < rho.rows(); ++i) {
    for (Eigen::Index j = 0; j < rho.cols(); ++j) {
      if (i != j) sum += std::abs(rho(i, j));
    }
  }
  return sum;
}

double hermiticity_error(const Eigen::MatrixXcd& rho) {
  return (rho - rho.adjoint()).cwiseAbs().maxCoeff();
}

double min_eigenvalue(const Eigen::MatrixXcd& rho) {
  const Eigen::MatrixXcd herm = 0.5 * (rho + rho.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(herm,
                                                         Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

Eigen::MatrixXcd site_basis_state(int dim, int initial) {
  if (initial < 0 || initial >= dim) {
    throw std::invalid_argument("initial site out of range");
  }
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(dim, dim);
  rho(initial, initial) = 1.0;
  return rho;
}

}  // namespace ringsim
