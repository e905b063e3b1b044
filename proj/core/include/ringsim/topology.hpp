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

#include <variant>

namespace ringsim {

/// Uniform nearest-neighbour coupling J (cm^-1).
struct Isotropic {
  double j;
};

/// Alternating couplings: j1 inside a dimer, j2 between dimers (cm^-1).
struct Dimerized {
  double j1;
  double j2;
};

using Coupling = std::variant<Isotropic, Dimerized>;

/// Geometry and coupling scheme of an N-site ring lattice with cyclic
/// nearest-neighbour couplings. Immutable after construction; all factory
/// validation errors throw std::invalid_argument.
class RingTopology {
 public:
  static RingTopology isotropic(int n_sites, double j);
  static RingTopology dimerized(int n_sites, double j1, double j2);

  int n_sites() const { return n_sites_; }
  const Coupling& coupling() const { return coupling_; }
  bool is_dimerized() const { return std::holds_alternative<Dimerized>(coupling_); }

  /// Mean coupling: J for isotropic rings, (J1+J2)/2 for dimerized ones.
  /// Every dimensionless ratio (sigma/J, gamma/J, Gamma/J) refers to this.
  double effective_j() const;

  /// Spectral radius of the clean ring, J1+J2 (isotropic: 2J). Hamiltonians
  /// are divided by this before time integration, which makes the clean
  /// spectrum span [-1, 1] and fixes the dimensionless trajectory time axis
  /// ("Jt" in all outputs).
  double energy_scale() const { return 2.0 * effective_j(); }

  /// J1/J2 for dimerized rings, 1 for isotropic ones.
  double dimerization_degree() const;

 private:
  RingTopology(int n_sites, Coupling coupling)
      : n_sites_(n_sites), coupling_(coupling) {}

  int n_sites_;
  Coupling coupling_;
};

}  // namespace ringsim
