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

#include <functional>
#include <vector>

#include <Eigen/Geometry>

#include "qoc/dynamics/time_grid.hpp"

namespace qoc {

/// Integrates dr/dt = r x Omega(t) with Omega sampled at midpoints; each step
/// is an exact rotation, so |r| is conserved to round-off.
///
/// With the Pauli Bloch vector r = <sigma>, this is the motion generated by
/// H = -1/2 Omega . sigma.
inline std::vector<Eigen::Vector3d> bloch_precession(
    const std::function<Eigen::Vector3d(double)>& omega, const Eigen::Vector3d& r0,
    const TimeGrid& grid) {
  std::vector<Eigen::Vector3d> out;
  out.reserve(std::size_t(grid.nt()));
  out.push_back(r0);
  for (Eigen::Index k = 0; k < grid.n_mid(); ++k) {
    const Eigen::Vector3d w = omega(grid.mid(k));
    const double a = w.norm();
    Eigen::Vector3d r = out.back();
    if (a > 0.0) r = Eigen::AngleAxisd(-a * grid.dt(), w / a) * r;
    out.push_back(r);
  }
  return out;
}

}  // namespace qoc
