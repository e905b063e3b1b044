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

#include "ringsim/disorder.hpp"
#include "ringsim/topology.hpp"

namespace ringsim {

/// n x n real symmetric single-excitation Hamiltonian of a ring: couplings
/// on cyclic nearest-neighbour pairs (j, j+1 mod n), zero on-site energies.
Eigen::MatrixXd build_hamiltonian(const RingTopology& topology);

/// Uniform couplings H[j][j+1 mod n] = J. Requires an isotropic topology.
Eigen::MatrixXd build_isotropic(const RingTopology& topology);

/// Alternating couplings: edges (0,1),(2,3),... carry J1 and edges
/// (1,2),(3,4),...,(n-1,0) carry J2 (0-based sites). Requires a dimerized
/// topology; the ring closes with a J2 edge.
Eigen::MatrixXd build_dimerized(const RingTopology& topology);

/// H with the realization's offsets added to the diagonal. Dimensions must
/// match; off-diagonals are untouched.
Eigen::MatrixXd apply_disorder(const Eigen::MatrixXd& h,
                               const DisorderRealization& d);

/// Embeds an n x n ring Hamiltonian into dimension n+1. The extra basis
/// state (last index) is the sink; it carries no Hamiltonian matrix
/// elements, only the Lindblad sink term couples to it.
Eigen::MatrixXd embed_with_sink(const Eigen::MatrixXd& h_ring);

}  // namespace ringsim
