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

#include <filesystem>
#include <string>

#include "ringsim/ensemble.hpp"
#include "ringsim/evolve.hpp"
#include "ringsim/spectrum.hpp"

namespace ringsim {

/// Full-precision decimal representation ("%.17g"); round-trips exactly.
std::string format_double(double value);

/// Writes content to path via a temporary file and rename, so a failed run
/// never leaves a partial artifact behind.
void write_file_atomic(const std::filesystem::path& path,
                       const std::string& content);

// CSV serializers. Column names and order are part of the public contract.

/// Header "k,eigenvalue"; k is the 1-based rank in ascending order.
std::string spectrum_csv(const SpectrumResult& spectrum);

/// Header "Jt,p_site_1,...,p_site_N,norm" for closed-evolution output.
std::string closed_trajectory_csv(const Trajectory& traj);

/// Header "Jt,p_sink,p_site_1,...,p_site_N,coherence_l1".
std::string open_trajectory_csv(const Trajectory& traj);

/// Header "Gamma_over_J,p_sink_at_t_eval".
std::string gamma_scan_csv(std::span<const double> ratios,
                           std::span<const double> efficiency);

/// Header "sigma_over_J,mean,stderr".
std::string disorder_sweep_csv(std::span<const SweepPoint> curve);

/// Header "gamma_over_J,p_sink".
std::string dephasing_sweep_csv(std::span<const SweepPoint> curve);

/// Long format, header "sigma_over_J,gamma_over_J,mean,stderr,M,t_eval".
std::string efficiency_map_csv(const EfficiencyMap& map);

/// Header "Jt,clean,disorder_only,disorder_dephasing".
std::string comparison_csv(const ComparisonCurves& curves);

}  // namespace ringsim
