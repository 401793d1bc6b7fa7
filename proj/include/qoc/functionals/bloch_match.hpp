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

#include <algorithm>

#include "qoc/core/bloch.hpp"

namespace qoc {

struct BlochMatchWeights {
  double angle = 0.5;
  double length = 0.5;
};

/// Mixed-state target cost matching direction and length of the Bloch
/// vector:
///   J = w_a (1 - cos theta) / 2 + w_l (|r| - |r_t|)^2 / r_max^2
/// with r_max^2 = (N - 1) / N the squared length of a pure state. For a
/// maximally mixed target the angle is undefined and J = |r|^2 / r_max^2.
/// A zero-length r against a non-trivial target counts as cos theta = 0.
inline double bloch_match_cost(const QuantumState& rho, const QuantumState& target,
                               const BlochMatchWeights& w = {}) {
  require_same_dim(rho.dim(), target.dim(), "bloch_match_cost");
  const RVector r = bloch_vector(rho).components;
  const RVector rt = bloch_vector(target).components;
  const double n = double(rho.dim());
  const double rmax2 = (n - 1.0) / n;
  const double lr = r.norm(), lt = rt.norm();
  constexpr double eps = 1e-14;
  if (lt <= eps) return std::min(1.0, lr * lr / rmax2);
  const double cos_th = lr <= eps ? 0.0 : std::clamp(r.dot(rt) / (lr * lt), -1.0, 1.0);
  return w.angle * 0.5 * (1.0 - cos_th) + w.length * (lr - lt) * (lr - lt) / rmax2;
}

}  // namespace qoc
