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
#include <optional>

#include "ringsim/topology.hpp"

namespace ringsim {

enum class SpectrumSource { analytic, numeric };

struct SpectrumResult {
  Eigen::VectorXd eigenvalues;                   // ascending
  std::optional<Eigen::MatrixXcd> eigenvectors;  // unitary columns, same order
  SpectrumSource source = SpectrumSource::numeric;
};

/// Closed-form spectrum of the clean ring.
///
/// Isotropic: eigenvalues 2 J cos(2 pi k / N) with Fourier eigenvectors
/// exp(i 2 pi k j / N)/sqrt(N). Dimerized: +-J2 sqrt(beta^2 + 1 +
/// 2 beta cos a_k), a_k = 2 pi k / (N/2), beta = J1/J2, with Bloch-dimer
/// eigenvectors assembled from the 2x2 momentum blocks.
SpectrumResult analytic_spectrum(const RingTopology& topology,
                                 bool with_eigenvectors = false);

/// Dense symmetric diagonalization of an explicit (real symmetric) H.
SpectrumResult numeric_spectrum(const Eigen::MatrixXd& h,
                                bool with_eigenvectors = false);

/// 2x2 momentum block of the dimerized ring and its diagonalizing unitary.
struct DimerBlock {
  Eigen::Matrix2cd h;  // off-diagonals J1 + exp(-+ i a_k) J2
  Eigen::Matrix2cd u;  // u.adjoint() * h * u = diag(+e, -e)
  double e = 0.0;      // band energy J2 sqrt(beta^2 + 1 + 2 beta cos a_k)
  bool degenerate = false;  // e = 0; u is then an arbitrary orthonormal basis
};

/// Block at momentum index k, 0 <= k < N/2. Requires a dimerized topology.
DimerBlock dimer_block(int k, const RingTopology& topology);

/// Gap between the positive and negative dimer bands, 2 |J1 - J2|
/// (the smallest |eigenvalue| is |J1 - J2|). Zero for isotropic rings.
double band_gap(const RingTopology& topology);

}  // namespace ringsim
