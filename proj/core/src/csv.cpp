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

#include "ringsim/csv.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace ringsim {

std::string format_double(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

void write_file_atomic(const std::filesystem::path& path,
                       const std::string& content) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    }
    out << content;
    if (!out.good()) {
      throw std::runtime_error("write failed for " + tmp.string());
    }
  }
  std::filesystem::rename(tmp, path);
}

std::string spectrum_csv(const SpectrumResult& spectrum) {
  std::string out = "k,eigenvalue\n";
  for (Eigen::Index k = 0; k < spectrum.eigenvalues.size(); ++k) {
    out += std::to_string(k + 1);
    out += ',';
    out += format_double(spectrum.eigenvalues[k]);
    out += '\n';
  }
  return out;
}

std::string closed_trajectory_csv(const Trajectory& traj) {
  const Eigen::Index n = traj.site_populations.cols();
  std::string out = "Jt";
  for (Eigen::Index j = 0; j < n; ++j) {
    out += ",p_site_" + std::to_string(j + 1);
  }
  out += ",norm\n";
  for (std::size_t i = 0; i < traj.times.size(); ++i) {
    out += format_double(traj.times[i]);
    for (Eigen::Index j = 0; j < n; ++j) {
      out += ',';
      out += format_double(traj.site_populations(static_cast<Eigen::Index>(i), j));
    }
    out += ',';
    out += format_double(traj.trace[static_cast<Eigen::Index>(i)]);
    out += '\n';
  }
  return out;
}

std::string open_trajectory_csv(const Trajectory& traj) {
  const Eigen::Index n = traj.site_populations.cols();
  std::string out = "Jt,p_sink";
  for (Eigen::Index j = 0; j < n; ++j) {
    out += ",p_site_" + std::to_string(j + 1);
  }
  out += ",coherence_l1\n";
  for (std::size_t i = 0; i < traj.times.size(); ++i) {
    const auto row = static_cast<Eigen::Index>(i);
    out += format_double(traj.times[i]);
    out += ',';
    out += format_double(traj.sink_population[row]);
    for (Eigen::Index j = 0; j < n; ++j) {
      out += ',';
      out += format_double(traj.site_populations(row, j));
    }
    out += ',';
    out += format_double(traj.coherence_l1[row]);
    out += '\n';
  }
  return out;
}

std::string gamma_scan_csv(std::span<const double> ratios,
                           std::span<const double> efficiency) {
  if (ratios.size() != efficiency.size()) {
    throw std::invalid_argument("scan columns must have equal length");
  }
  std::string out = "Gamma_over_J,p_sink_at_t_eval\n";
  for (std::size_t i = 0; i < ratios.size(); ++i) {
    out += format_double(ratios[i]);
    out += ',';
    out += format_double(efficiency[i]);
    out += '\n';
  }
  return out;
}

std::string disorder_sweep_csv(std::span<const SweepPoint> curve) {
  std::string out = "sigma_over_J,mean,stderr\n";
  for (const SweepPoint& p : curve) {
    out += format_double(p.x);
    out += ',';
    out += format_double(p.mean);
    out += ',';
    out += format_double(p.stderr_);
    out += '\n';
  }
  return out;
}

std::string dephasing_sweep_csv(std::span<const SweepPoint> curve) {
  std::string out = "gamma_over_J,p_sink\n";
  for (const SweepPoint& p : curve) {
    out += format_double(p.x);
    out += ',';
    out += format_double(p.mean);
    out += '\n';
  }
  return out;
}

std::string efficiency_map_csv(const EfficiencyMap& map) {
  std::string out = "sigma_over_J,gamma_over_J,mean,stderr,M,t_eval\n";
  for (std::size_t s = 0; s < map.sigma_grid.size(); ++s) {
    for (std::size_t g = 0; g < map.gamma_grid.size(); ++g) {
      out += format_double(map.sigma_grid[s]);
      out += ',';
      out += format_double(map.gamma_grid[g]);
      out += ',';
      out += format_double(map.mean(static_cast<Eigen::Index>(s),
                                    static_cast<Eigen::Index>(g)));
      out += ',';
      out += format_double(map.stderr_(static_cast<Eigen::Index>(s),
                                       static_cast<Eigen::Index>(g)));
      out += ',';
      out += std::to_string(map.realizations);
      out += ',';
      out += format_double(map.t_eval);
      out += '\n';
    }
  }
  return out;
}

std::string comparison_csv(const ComparisonCurves& curves) {
  std::string out = "Jt,clean,disorder_only,disorder_dephasing\n";
  for (std::size_t i = 0; i < curves.times.size(); ++i) {
    const auto row = static_cast<Eigen::Index>(i);
    out += format_double(curves.times[i]);
    out += ',';
    out += format_double(curves.clean[row]);
    out += ',';
    out += format_double(curves.disorder_only[row]);
    out += ',';
    out += format_double(curves.disorder_dephasing[row]);
    out += '\n';
  }
  return out;
}

}  // namespace ringsim
