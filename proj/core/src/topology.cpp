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

#include "ringsim/topology.hpp"

#include <stdexcept>
#include <string>

namespace ringsim {

RingTopology RingTopology::isotropic(int n_sites, double j) {
  if (n_sites < 3) {
    throw std::invalid_argument("ring needs at least 3 sites, got " +
                                std::to_string(n_sites));
  }
  if (!(j > 0.0)) {
    throw std::invalid_argument("coupling J must be positive");
  }
  return RingTopology(n_sites, Isotropic{j});
}

RingTopology RingTopology::dimerized(int n_sites, double j1, double j2) {
  if (n_sites < 3) {
    throw std::invalid_argument("ring needs at least 3 sites, got " +
                                std::to_string(n_sites));
  }
  if (n_sites % 2 != 0) {
    throw std::invalid_argument("dimerized ring needs an even site count, got " +
                                std::to_string(n_sites));
  }
  if (!(j1 > 0.0) || !(j2 > 0.0)) {
    throw std::invalid_argument("couplings J1, J2 must be positive");
  }
  return RingTopology(n_sites, Dimerized{j1, j2});
}

double RingTopology::effective_j() const {
  if (const auto* d = std::get_if<Dimerized>(&coupling_)) {
    return 0.5 * (d->j1 + d->j2);
  }
  return std::get<Isotropic>(coupling_).j;
}

double RingTopology::dimerization_degree() const {
  if (const auto* d = std::get_if<Dimerized>(&coupling_)) {
    return d->j1 / d->j2;
  }
  return 1.0;
}

}  // namespace ringsim
