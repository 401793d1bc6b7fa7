// Copyright 2026 The qoc Authors
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

#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "qoc/dynamics/time_grid.hpp"

namespace qoc {

/// Control fields as a function of a small real coefficient vector.
/// Coefficients are clamped into [lower, upper] and the rendered samples
/// into [-amplitude_bound, amplitude_bound].
struct Parametrization {
  std::string basis;
  RVector coefficients;  // starting point
  RVector lower, upper;
  double amplitude_bound = std::numeric_limits<double>::infinity();
  std::function<std::vector<ControlField>(const RVector&)> render_raw;

  Eigen::Index size() const { return coefficients.size(); }

  RVector clamp(const RVector& c) const {
    if (c.size() != size()) throw Error(ErrorCode::dimension_mismatch, "parametrization: coefficient count");
    return c.cwiseMax(lower).cwiseMin(upper);
  }

  std::vector<ControlField> render(const RVector& c) const {
    auto out = render_raw(clamp(c));
    for (auto& f : out) f.samples() = f.samples().cwiseMax(-amplitude_bound).cwiseMin(amplitude_bound);
    return out;
  }

  std::vector<ControlField> render() const { return render(coefficients); }
};

namespace detail {
inline RVector unbounded(Eigen::Index n, double sign) {
  return RVector::Constant(n, sign * std::numeric_limits<double>::infinity());
}
}  // namespace detail

/// u_j(t) = base_j(t) + sum_{k=1..n_terms} a_jk sin(k pi (t - t0) / T).
/// The sine basis vanishes at both ends.
inline Parametrization fourier_parametrization(std::vector<ControlField> base, int n_terms,
                                               double amplitude_bound = std::numeric_limits<double>::infinity()) {
  if (base.empty()) throw Error(ErrorCode::invalid_argument, "fourier_parametrization: no controls");
  const Eigen::Index n = Eigen::Index(base.size()) * n_terms;
  Parametrization p;
  p.basis = "fourier";
  p.coefficients = RVector::Zero(n);
  p.lower = detail::unbounded(n, -1.0);
  p.upper = detail::unbounded(n, 1.0);
  p.amplitude_bound = amplitude_bound;
  p.render_raw = [base, n_terms](const RVector& c) {
    std::vector<ControlField> out = base;
    const TimeGrid& g = base.front().grid();
    for (std::size_t j = 0; j < out.size(); ++j)
      for (int k = 1; k <= n_terms; ++k) {
        const double a = c(Eigen::Index(j) * n_terms + k - 1);
        if (a == 0.0) continue;
        for (Eigen::Index i = 0; i < g.n_mid(); ++i)
          out[j][i] += a * std::sin(k * kPi * (g.mid(i) - g.t0()) / g.duration());
      }
    return out;
  };
  return p;
}

struct GaussianPulse {
  int control = 0;
  double amplitude = 1.0;
  double center = 0.0;
  double width = 1.0;
  double carrier = 0.0;  // cos(carrier (t - center)) modulation when nonzero
};

/// Which pulse parameters the search may move.
struct GaussianFreeParams {
  bool amplitude = true;
  bool center = true;
  bool width = false;
};

/// Sum of Gaussian pulses; the free parameters of each pulse are stacked
/// pulse by pulse in the order amplitude, center, width.
inline Parametrization gaussian_parametrization(const TimeGrid& g, int n_controls, std::vector<GaussianPulse> pulses,
                                                GaussianFreeParams free = {},
                                                double amplitude_bound = std::numeric_limits<double>::infinity()) {
  for (const auto& q : pulses)
    if (q.control < 0 || q.control >= n_controls) {
      throw Error(ErrorCode::invalid_argument, "gaussian_parametrization: control index");
    }
  const int per = int(free.amplitude) + int(free.center) + int(free.width);
  const Eigen::Index n = Eigen::Index(pulses.size()) * per;
  Parametrization p;
  p.basis = "gaussian";
  p.coefficients.resize(n);
  p.lower = detail::unbounded(n, -1.0);
  p.upper = detail::unbounded(n, 1.0);
  Eigen::Index i = 0;
  for (const auto& q : pulses) {
    if (free.amplitude) p.coefficients(i++) = q.amplitude;
    if (free.center) {
      p.lower(i) = g.t0();
      p.upper(i) = g.tf();
      p.coefficients(i++) = q.center;
    }
    if (free.width) {
      p.lower(i) = 1e-3 * g.duration();
      p.upper(i) = g.duration();
      p.coefficients(i++) = q.width;
    }
  }
  p.amplitude_bound = amplitude_bound;
  p.render_raw = [g, n_controls, pulses, free](const RVector& c) {
    std::vector<ControlField> out(std::size_t(n_controls), ControlField::zeros(g));
    Eigen::Index i = 0;
    for (GaussianPulse q : pulses) {
      if (free.amplitude) q.amplitude = c(i++);
      if (free.center) q.center = c(i++);
      if (free.width) q.width = c(i++);
      for (Eigen::Index k = 0; k < g.n_mid(); ++k) {
        const double t = g.mid(k) - q.center;
        double v = q.amplitude * std::exp(-t * t / (2.0 * q.width * q.width));
        if (q.carrier != 0.0) v *= std::cos(q.carrier * t);
        out[std::size_t(q.control)][k] += v;
      }
    }
    return out;
  };
  return p;
}

}  // namespace qoc
