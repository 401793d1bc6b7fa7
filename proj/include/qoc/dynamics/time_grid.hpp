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
#include <utility>
#include <vector>

#include "qoc/core/types.hpp"

namespace qoc {

/// Uniform time grid. States live on t_k = t0 + k dt (k = 0..nt-1); controls
/// live on the midpoints t_k + dt/2 (k = 0..nt-2).
class TimeGrid {
 public:
  TimeGrid() = default;
  TimeGrid(double t0, double tf, Eigen::Index nt) : t0_(t0), tf_(tf), nt_(nt) {
    if (nt < 2) throw Error(ErrorCode::invalid_argument, "TimeGrid: nt < 2");
    if (!(tf > t0)) throw Error(ErrorCode::invalid_argument, "TimeGrid: tf <= t0");
  }

  double t0() const noexcept { return t0_; }
  double tf() const noexcept { return tf_; }
  Eigen::Index nt() const noexcept { return nt_; }
  Eigen::Index n_mid() const noexcept { return nt_ - 1; }
  double duration() const noexcept { return tf_ - t0_; }
  double dt() const noexcept { return (tf_ - t0_) / double(nt_ - 1); }

  double t(Eigen::Index k) const noexcept { return t0_ + double(k) * dt(); }
  double mid(Eigen::Index k) const noexcept { return t(k) + 0.5 * dt(); }

  friend bool operator==(const TimeGrid& a, const TimeGrid& b) {
    return a.t0_ == b.t0_ && a.tf_ == b.tf_ && a.nt_ == b.nt_;
  }

 private:
  double t0_ = 0.0;
  double tf_ = 1.0;
  Eigen::Index nt_ = 2;
};

/// Real control samples on the midpoint grid.
class ControlField {
 public:
  ControlField() = default;
  ControlField(TimeGrid grid, RVector samples)
      : grid_(grid), samples_(std::move(samples)) {
    if (samples_.size() != grid_.n_mid()) {
      throw Error(ErrorCode::dimension_mismatch,
                  "ControlField: need nt-1 samples");
    }
  }

  static ControlField zeros(const TimeGrid& g) {
    return ControlField(g, RVector::Zero(g.n_mid()));
  }
  static ControlField constant(const TimeGrid& g, double v) {
    return ControlField(g, RVector::Constant(g.n_mid(), v));
  }
  static ControlField from_function(const TimeGrid& g,
                                    const std::function<double(double)>& f) {
    RVector s(g.n_mid());
    for (Eigen::Index k = 0; k < g.n_mid(); ++k) s(k) = f(g.mid(k));
    return ControlField(g, std::move(s));
  }

  const TimeGrid& grid() const noexcept { return grid_; }
  const RVector& samples() const noexcept { return samples_; }
  RVector& samples() noexcept { return samples_; }
  Eigen::Index size() const noexcept { return samples_.size(); }
  double operator[](Eigen::Index k) const { return samples_(k); }
  double& operator[](Eigen::Index k) { return samples_(k); }
  double time(Eigen::Index k) const { return grid_.mid(k); }

  /// Sample-wise derivative: central differences inside, second-order
  /// one-sided at both ends.
  ControlField derivative() const {
    const Eigen::Index n = samples_.size();
    const double h = grid_.dt();
    RVector d = RVector::Zero(n);
    if (n >= 3) {
      for (Eigen::Index k = 1; k + 1 < n; ++k)
        d(k) = (samples_(k + 1) - samples_(k - 1)) / (2.0 * h);
      // written in differences so constants give exactly zero
      d(0) = (3.0 * (samples_(1) - samples_(0)) - (samples_(2) - samples_(1))) / (2.0 * h);
      d(n - 1) = (3.0 * (samples_(n - 1) - samples_(n - 2)) -
                  (samples_(n - 2) - samples_(n - 3))) / (2.0 * h);
    } else if (n == 2) {
      d.setConstant((samples_(1) - samples_(0)) / h);
    }
    return ControlField(grid_, d);
  }

 private:
  TimeGrid grid_;
  RVector samples_;
};

/// Flat-top shape with sin^2 ramps of width `ramp_fraction * T` at each end.
/// Zero at the first and last midpoint.
inline ControlField flattop_shape(const TimeGrid& g, double ramp_fraction = 0.05) {
  const double tr = ramp_fraction * g.duration();
  RVector s(g.n_mid());
  for (Eigen::Index k = 0; k < g.n_mid(); ++k) {
    const double t = g.mid(k) - g.t0();
    const double tl = g.tf() - g.mid(k);
    double v = 1.0;
    if (tr > 0.0 && t < tr) v = std::pow(std::sin(0.5 * kPi * t / tr), 2);
    if (tr > 0.0 && tl < tr) v = std::pow(std::sin(0.5 * kPi * tl / tr), 2);
    s(k) = v;
  }
  s(0) = 0.0;
  s(g.n_mid() - 1) = 0.0;
  return ControlField(g, s);
}

/// sin^2(pi (t - t0) / T).
inline ControlField sin2_shape(const TimeGrid& g) {
  return ControlField::from_function(g, [&](double t) {
    return std::pow(std::sin(kPi * (t - g.t0()) / g.duration()), 2);
  });
}

/// exp(-(t - tc)^2 / (2 sigma^2)).
inline ControlField gaussian_shape(const TimeGrid& g, double tc, double sigma) {
  return ControlField::from_function(g, [&](double t) {
    return std::exp(-(t - tc) * (t - tc) / (2.0 * sigma * sigma));
  });
}

}  // namespace qoc
