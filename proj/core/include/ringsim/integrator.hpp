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
#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>

namespace ringsim {

enum class StepMethod { adaptive, rk4 };

struct IntegratorConfig {
  StepMethod method = StepMethod::adaptive;
  double rtol = 1e-8;
  double atol = 1e-10;
  double dt = 1e-2;  // fixed-step size (rk4 only)
  double max_step = std::numeric_limits<double>::infinity();
};

struct IntegrationStats {
  std::size_t steps_accepted = 0;
  std::size_t steps_rejected = 0;
  std::size_t rhs_evaluations = 0;
};

class IntegrationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline void validate_integrator_config(const IntegratorConfig& cfg) {
  if (!(cfg.rtol > 0.0) || !(cfg.atol > 0.0)) {
    throw std::invalid_argument("integrator tolerances must be positive");
  }
  if (!(cfg.dt > 0.0)) {
    throw std::invalid_argument("integrator step size must be positive");
  }
  if (!(cfg.max_step > 0.0)) {
    throw std::invalid_argument("integrator max_step must be positive");
  }
}

inline void validate_sample_times(std::span<const double> times) {
  if (times.empty()) {
    throw std::invalid_argument("need at least one sample time");
  }
  if (times.front() < 0.0) {
    throw std::invalid_argument("sample times must be >= 0");
  }
  for (std::size_t i = 1; i < times.size(); ++i) {
    if (!(times[i] > times[i - 1])) {
      throw std::invalid_argument("sample times must be strictly increasing");
    }
  }
}

// RMS of the error matrix scaled by atol + rtol * max(|y0|, |y1|).
inline double scaled_error_norm(const Eigen::MatrixXcd& err,
                                const Eigen::MatrixXcd& y0,
                                const Eigen::MatrixXcd& y1, double rtol,
                                double atol) {
  double sum = 0.0;
  const Eigen::Index size = err.size();
  for (Eigen::Index i = 0; i < size; ++i) {
    const double scale =
        atol + rtol * std::max(std::abs(y0(i)), std::abs(y1(i)));
    const double q = std::abs(err(i)) / scale;
    sum += q * q;
  }
  return std::sqrt(sum / static_cast<double>(size));
}

// Cubic Hermite interpolant on [t0, t0+h] from endpoint values and slopes.
inline void hermite_interpolate(double s, double h, const Eigen::MatrixXcd& y0,
                                const Eigen::MatrixXcd& f0,
                                const Eigen::MatrixXcd& y1,
                                const Eigen::MatrixXcd& f1,
                                Eigen::MatrixXcd& out) {
  const double s2 = s * s;
  const double s3 = s2 * s;
  const double h00 = 2.0 * s3 - 3.0 * s2 + 1.0;
  const double h10 = s3 - 2.0 * s2 + s;
  const double h01 = -2.0 * s3 + 3.0 * s2;
  const double h11 = s3 - s2;
  out = h00 * y0 + (h10 * h) * f0 + h01 * y1 + (h11 * h) * f1;
}

struct NoPostStep {
  void operator()(Eigen::MatrixXcd&) const {}
};

}  // namespace detail

/// Integrates dy/dt = rhs(y) (autonomous) from t = 0 with the embedded
/// Dormand-Prince 5(4) pair. The observer is called once per sample time in
/// order with (sample_index, t, y); samples interior to an accepted step are
/// filled by cubic Hermite interpolation. post_step runs on every accepted
/// state before it is used (evolution drivers pass re-hermitization here).
template <class Rhs, class Observer, class PostStep = detail::NoPostStep>
IntegrationStats integrate_adaptive(Rhs&& rhs, const Eigen::MatrixXcd& y0,
                                    std::span<const double> sample_times,
                                    Observer&& observe,
                                    const IntegratorConfig& cfg = {},
                                    PostStep&& post_step = {}) {
  detail::validate_integrator_config(cfg);
  detail::validate_sample_times(sample_times);

  IntegrationStats stats;
  Eigen::MatrixXcd y = y0;
  double t = 0.0;
  std::size_t next = 0;
  while (next < sample_times.size() && sample_times[next] == 0.0) {
    observe(next, 0.0, y);
    ++next;
  }
  if (next == sample_times.size()) return stats;
  const double t_end = sample_times.back();

  Eigen::MatrixXcd k1(y.rows(), y.cols()), k2, k3, k4, k5, k6, k7;
  Eigen::MatrixXcd ytmp, ynew, yerr, ysample;
  rhs(y, k1);
  ++stats.rhs_evaluations;

  // Initial step size from the scale of y and its first two derivatives.
  double h;
  {
    const double d0 = detail::scaled_error_norm(y, y, y, cfg.rtol, cfg.atol);
    const double d1 = detail::scaled_error_norm(k1, y, y, cfg.rtol, cfg.atol);
    double h0 = (d0 < 1e-5 || d1 < 1e-5) ? 1e-6 : 0.01 * d0 / d1;
    h0 = std::min(h0, t_end);
    ytmp = y + h0 * k1;
    rhs(ytmp, k2);
    ++stats.rhs_evaluations;
    const double d2 =
        detail::scaled_error_norm(k2 - k1, y, y, cfg.rtol, cfg.atol) / h0;
    double h1;
    if (std::max(d1, d2) <= 1e-15) {
      h1 = std::max(1e-6, h0 * 1e-3);
    } else {
      h1 = std::pow(0.01 / std::max(d1, d2), 0.2);
    }
    h = std::min({100.0 * h0, h1, cfg.max_step, t_end});
  }

  // Dormand-Prince coefficients.
  constexpr double a21 = 1.0 / 5.0;
  constexpr double a31 = 3.0 / 40.0, a32 = 9.0 / 40.0;
  constexpr double a41 = 44.0 / 45.0, a42 = -56.0 / 15.0, a43 = 32.0 / 9.0;
  constexpr double a51 = 19372.0 / 6561.0, a52 = -25360.0 / 2187.0,
                   a53 = 64448.0 / 6561.0, a54 = -212.0 / 729.0;
  constexpr double a61 = 9017.0 / 3168.0, a62 = -355.0 / 33.0,
                   a63 = 46732.0 / 5247.0, a64 = 49.0 / 176.0,
                   a65 = -5103.0 / 18656.0;
  constexpr double b1 = 35.0 / 384.0, b3 = 500.0 / 1113.0, b4 = 125.0 / 192.0,
                   b5 = -2187.0 / 6784.0, b6 = 11.0 / 84.0;
  constexpr double e1 = 71.0 / 57600.0, e3 = -71.0 / 16695.0,
                   e4 = 71.0 / 1920.0, e5 = -17253.0 / 339200.0,
                   e6 = 22.0 / 525.0, e7 = -1.0 / 40.0;

  bool last_rejected = false;
  while (t < t_end) {
    h = std::min({h, cfg.max_step, t_end - t});
    const bool final_step = (h >= t_end - t);
    if (h < 1e-14 * std::max(1.0, std::abs(t))) {
      throw IntegrationError(
          "adaptive step underflow at t = " + std::to_string(t) +
          " (h = " + std::to_string(h) + ", " +
          std::to_string(stats.steps_rejected) + " rejected steps)");
    }

    ytmp = y + (h * a21) * k1;
    rhs(ytmp, k2);
    ytmp = y + (h * a31) * k1 + (h * a32) * k2;
    rhs(ytmp, k3);
    ytmp = y + (h * a41) * k1 + (h * a42) * k2 + (h * a43) * k3;
    rhs(ytmp, k4);
    ytmp = y + (h * a51) * k1 + (h * a52) * k2 + (h * a53) * k3 +
           (h * a54) * k4;
    rhs(ytmp, k5);
    ytmp = y + (h * a61) * k1 + (h * a62) * k2 + (h * a63) * k3 +
           (h * a64) * k4 + (h * a65) * k5;
    rhs(ytmp, k6);
    ynew = y + (h * b1) * k1 + (h * b3) * k3 + (h * b4) * k4 + (h * b5) * k5 +
           (h * b6) * k6;
    rhs(ynew, k7);
    stats.rhs_evaluations += 6;

    yerr = (h * e1) * k1 + (h * e3) * k3 + (h * e4) * k4 + (h * e5) * k5 +
           (h * e6) * k6 + (h * e7) * k7;
    const double err =
        detail::scaled_error_norm(yerr, y, ynew, cfg.rtol, cfg.atol);

    if (err <= 1.0) {
      ++stats.steps_accepted;
      post_step(ynew);
      post_step(k7);  // keep the stored slope consistent with the state
      const double t_new = final_step ? t_end : t + h;
      while (next < sample_times.size() && sample_times[next] <= t_new) {
        const double ts = sample_times[next];
        if (ts == t_new) {
          observe(next, ts, ynew);
        } else {
          detail::hermite_interpolate((ts - t) / h, h, y, k1, ynew, k7,
                                      ysample);
          observe(next, ts, ysample);
        }
        ++next;
      }
      t = t_new;
      y.swap(ynew);
      k1.swap(k7);
      double factor =
          (err == 0.0) ? 5.0
                       : std::clamp(0.9 * std::pow(err, -0.2), 0.2, 5.0);
      if (last_rejected) factor = std::min(factor, 1.0);
      h *= factor;
      last_rejected = false;
    } else {
      ++stats.steps_rejected;
      last_rejected = true;
      h *= std::clamp(0.9 * std::pow(err, -0.2), 0.2, 0.9);
    }
  }
  return stats;
}

/// Fixed-step classical RK4; steps are clipped so that every sample time is
/// hit exactly. Deterministic cost, used for benchmarking baselines.
template <class Rhs, class Observer, class PostStep = detail::NoPostStep>
IntegrationStats integrate_rk4(Rhs&& rhs, const Eigen::MatrixXcd& y0,
                               std::span<const double> sample_times,
                               Observer&& observe,
                               const IntegratorConfig& cfg = {},
                               PostStep&& post_step = {}) {
  detail::validate_integrator_config(cfg);
  detail::validate_sample_times(sample_times);

  IntegrationStats stats;
  Eigen::MatrixXcd y = y0;
  Eigen::MatrixXcd k1, k2, k3, k4, ytmp;
  double t = 0.0;
  std::size_t next = 0;
  while (next < sample_times.size() && sample_times[next] == 0.0) {
    observe(next, 0.0, y);
    ++next;
  }
  while (next < sample_times.size()) {
    const double target = sample_times[next];
    while (t < target) {
      const double h = std::min({cfg.dt, cfg.max_step, target - t});
      const bool final_step = (h >= target - t);
      rhs(y, k1);
      ytmp = y + (0.5 * h) * k1;
      rhs(ytmp, k2);
      ytmp = y + (0.5 * h) * k2;
      rhs(ytmp, k3);
      ytmp = y + h * k3;
      rhs(ytmp, k4);
      y += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
      post_step(y);
      stats.rhs_evaluations += 4;
      ++stats.steps_accepted;
      t = final_step ? target : t + h;
    }
    observe(next, target, y);
    ++next;
  }
  return stats;
}

}  // namespace ringsim
