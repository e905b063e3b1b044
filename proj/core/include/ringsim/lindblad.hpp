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
#include <vector>

namespace ringsim {

/// Rates are in the same units as the Hamiltonian handed to the evolution
/// routines. The sink Lindblad term is written with an explicit factor 2,
/// Gamma (2 S rho S+ - {S+S, rho}), and the dephasing term likewise, so the
/// resulting exponential decay rates are 2*Gamma and 2*gamma.
struct NoiseParams {
  double dephasing_rate = 0.0;  // gamma, uniform over ring sites (not the sink)
  double sink_rate = 0.0;       // Gamma, absorption source_site -> sink
  int source_site = 0;          // 0-based ring site feeding the sink
};

/// drho/dt = -i[H, rho] + Gamma (2 S rho S+ - {S+S, rho})
///           + gamma sum_j (2 P_j rho P_j - {P_j, rho}),
/// with S = |sink><source|, P_j = |j><j| summed over ring sites only, and
/// the sink as last basis state. H must be the embedded (n+1)-dimensional
/// matrix with a zero sink row/column. Reference implementation built from
/// the literal operators; see RingLindbladRhs for the fast path.
Eigen::MatrixXcd lindblad_rhs(const Eigen::MatrixXcd& rho,
                              const Eigen::MatrixXd& h_embedded,
                              const NoiseParams& noise);

/// Same superoperator specialized to ring Hamiltonians: the commutator uses
/// the cyclic nearest-neighbour sparsity and the dephasing/sink terms are
/// applied element-wise, so one evaluation costs O(dim^2) instead of the
/// dense-product O(dim^3).
class RingLindbladRhs {
 public:
  /// h_ring is the n x n ring Hamiltonian (couplings on cyclic neighbour
  /// pairs plus a diagonal); entries elsewhere throw.
  RingLindbladRhs(const Eigen::MatrixXd& h_ring, const NoiseParams& noise);

  int dim() const { return n_ + 1; }

  void operator()(const Eigen::MatrixXcd& rho, Eigen::MatrixXcd& out) const;

 private:
  // Left/right neighbour couplings per row; a ring row has at most two
  // off-diagonal entries (one for n = 2, none for n = 1).
  struct Row {
    int c1 = -1;
    int c2 = -1;
    double v1 = 0.0;
    double v2 = 0.0;
  };
  std::vector<Row> rows_;
  Eigen::VectorXd diag_;
  int n_ = 0;
  double gamma_ = 0.0;
  double sink_rate_ = 0.0;
  int source_ = 0;
};

/// <s|rho|s>, clamped to [0, 1] for reporting.
double sink_population(const Eigen::MatrixXcd& rho);

/// Sum of |rho_ij| over i != j.
double coherence_l1(const Eigen::MatrixXcd& rho);

/// max_ij |rho_ij - conj(rho_ji)|.
double hermiticity_error(const Eigen::MatrixXcd& rho);

/// Smallest eigenvalue of the Hermitian part of rho.
double min_eigenvalue(const Eigen::MatrixXcd& rho);

/// |initial><initial| in dimension dim.
Eigen::MatrixXcd site_basis_state(int dim, int initial);

}  // namespace ringsim
