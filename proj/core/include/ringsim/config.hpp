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

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "ringsim/integrator.hpp"
#include "ringsim/topology.hpp"

namespace ringsim {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class TopologySelection { isotropic, dimerized, both };

/// Effective run configuration. Site indices are 1-based here, matching the
/// config file and the output labels; they are converted to 0-based storage
/// where the dynamics code needs them.
struct RunConfig {
  // topology
  TopologySelection topology = TopologySelection::both;
  int n_sites = 32;
  double j1 = 600.0;  // cm^-1
  double j2 = 377.0;  // cm^-1
  double j_isotropic = 488.5;  // defaults to (j1+j2)/2

  // noise
  double gamma_over_j = 0.0;
  double sink_rate_over_j = 2.0;
  int sink_source = 17;  // defaults to n/2 + 1
  int initial_site = 1;

  // disorder
  double sigma_over_j = 0.0;
  int realizations = 50;
  std::uint64_t seed = 12345;

  // time; t_max/t_eval fall back to per-command defaults when unset
  std::optional<double> t_max;
  std::optional<double> t_eval;
  int n_samples = 500;

  // integrator
  IntegratorConfig integrator{};

  // output
  std::string output_directory = ".";
  std::vector<std::string> formats{"csv"};

  // grids
  std::vector<double> sigma_grid{0.0, 0.1, 0.2, 0.3, 0.4, 0.5,
                                 0.6, 0.7, 0.8, 0.9, 1.0};
  std::vector<double> gamma_grid{0.0, 0.1, 0.2, 0.3, 0.4, 0.5,
                                 0.6, 0.7, 0.8, 0.9, 1.0};
  std::vector<double> sink_rate_grid{0.1, 0.2, 0.5, 1.0, 2.0, 5.0, 10.0, 50.0};
  double comparison_sigma_over_j = 0.5;
  double comparison_gamma_over_j = 0.1;

  // execution
  int threads = 0;  // 0 = hardware concurrency

  /// Topologies selected for a run, in fixed (isotropic, dimerized) order.
  std::vector<RingTopology> selected_topologies() const;
  RingTopology make_isotropic() const;
  RingTopology make_dimerized() const;
};

/// Parses and validates a config JSON document. Unknown keys anywhere are
/// rejected; missing keys take the defaults above; every invariant violation
/// throws ConfigError with the offending key in the message.
RunConfig parse_run_config(const std::string& json_text);

/// parse_run_config over the contents of a file.
RunConfig load_run_config(const std::filesystem::path& path);

/// Serializes the effective configuration (all defaults resolved) back to
/// JSON; embedded verbatim in every output manifest.
std::string run_config_to_json(const RunConfig& cfg);

const char* topology_selection_name(TopologySelection t);

}  // namespace ringsim
