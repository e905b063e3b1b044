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

#include "ringsim/disorder.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ringsim {

namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

// splitmix64 output finalizer.
std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream)
    : state_(mix64(seed + kGolden) ^ mix64(stream + 0x3c6ef372fe94f82aULL)) {}

std::uint64_t CounterRng::next_u64() {
  state_ += kGolden;
  return mix64(state_);
}

double CounterRng::next_double() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double CounterRng::next_gaussian() {
  double u1 = next_double();
  const double u2 = next_double();
  if (u1 == 0.0) u1 = 0x1.0p-53;
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

DisorderRealization sample_disorder(int n, double sigma, std::uint64_t seed,
                                    std::uint64_t index) {
  if (n < 1) {
    throw std::invalid_argument("disorder vector length must be positive");
  }
  if (sigma < 0.0 || !std::isfinite(sigma)) {
    throw std::invalid_argument("disorder sigma must be finite and >= 0");
  }
  DisorderRealization d;
  d.sigma = sigma;
  d.seed = seed;
  d.index = index;
  d.offsets.resize(n);
  CounterRng rng(seed, index);
  for (int i = 0; i < n; ++i) {
    d.offsets[i] = sigma * rng.next_gaussian();
  }
  return d;
}

}  // namespace ringsim
