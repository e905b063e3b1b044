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
#include <cstdint>

namespace ringsim {

/// Deterministic splittable RNG keyed by (seed, stream). The draw sequence
/// depends only on the key, never on global state or execution order, so
/// ensemble realizations reproduce bit-exactly under any thread schedule.
/// Core step is splitmix64; good enough statistics for Monte Carlo use.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t next_u64();

  /// Uniform in [0, 1) with 53-bit resolution.
  double next_double();

  /// Standard normal via Box-Muller; consumes exactly two uniforms per draw.
  double next_gaussian();

 private:
  std::uint64_t state_;
};

/// One sampled diagonal of Gaussian on-site energy offsets.
struct DisorderRealization {
  double sigma = 0.0;        // standard deviation, units of the Hamiltonian
  Eigen::VectorXd offsets;   // length n, i.i.d. N(0, sigma^2)
  std::uint64_t seed = 0;
  std::uint64_t index = 0;   // realization index = RNG stream
};

/// Draws n i.i.d. N(0, sigma^2) offsets from the (seed, index) stream.
/// The underlying standard-normal draws are independent of sigma, so
/// realizations with the same index share noise across sigma values.
/// sigma = 0 yields the zero vector; sigma < 0 throws.
DisorderRealization sample_disorder(int n, double sigma, std::uint64_t seed,
                                    std::uint64_t index);

}  // namespace ringsim
