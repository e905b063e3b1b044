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

#include "ringsim/hamiltonian.hpp"

#include <stdexcept>

namespace ringsim {

Eigen::MatrixXd build_isotropic(const RingTopology& topology) {
  const auto* iso = std::get_if<Isotropic>(&topology.coupling());
  if (iso == nullptr) {
    throw std::invalid_argument("build_isotropic needs an isotropic topology");
  }
  const int n = topology.n_sites();
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);
  for (int j = 0; j < n; ++j) {
    const int k = (j + 1) % n;
    h(j, k) = iso->j;
    h(k, j) = iso->j;
  }
  return h;
}

Eigen::MatrixXd build_dimerized(const RingTopology& topology) {
  const auto* dim = std::get_if<Dimerized>(&topology.coupling());
  if (dim == nullptr) {
    throw std::invalid_argument("build_dimerized needs a dimerized topology");
  }
  const int n = topology.n_sites();
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n / 2; ++i) {
    const int a = 2 * i;
    const int b = 2 * i + 1;
    const int c = (2 * i + 2) % n;
    h(a, b) = dim->j1;
    h(b, a) = dim->j1;
    h(b, c) = dim->j2;
    h(c, b) = dim->j2;
  }
  return h;
}

Eigen::MatrixXd build_hamiltonian(const RingTopology& topology) {
  return topology.is_dimerized() ? build_dimerized(topology)
                                 : build_isotropic(topology);
}

Eigen::MatrixXd apply_disorder(const Eigen::MatrixXd& h,
                               const DisorderRealization& d) {
  if (h.rows() != h.cols() || h.rows() != d.offsets.size()) {
    throw std::invalid_argument("disorder length does not match Hamiltonian");
  }
  Eigen::MatrixXd out = h;
  out.diagonal() += d.offsets;
  return out;
}

Eigen::MatrixXd embed_with_sink(const Eigen::MatrixXd& h_ring) {
  if (h_ring.rows() != h_ring.cols()) {
    throw std::invalid_argument("Hamiltonian must be square");
  }
  const Eigen::Index n = h_ring.rows();
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n + 1, n + 1);
  h.topLeftCorner(n, n) = h_ring;
  return h;
}

}  // namespace ringsim
