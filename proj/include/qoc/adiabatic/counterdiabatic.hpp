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

#include <optional>
#include <string>
#include <vector>

#include "qoc/adiabatic/dressed.hpp"

namespace qoc {

/// Coefficient c(t) of H_CD = c(t) sigma_y for H = -1/2 (Delta sigma_z +
/// Omega0 sigma_x); c = (d theta/dt) / 2.
inline ControlField counterdiabatic_tls(const ControlField& rabi, const ControlField& detuning,
                                        const std::optional<ControlField>& rabi_dot = std::nullopt,
                                        const std::optional<ControlField>& detuning_dot = std::nullopt) {
  ControlField c = theta_dot_tls(rabi, detuning, rabi_dot, detuning_dot);
  c.samples() *= 0.5;
  return c;
}

/// H_CD(t_k) = i (dV/dt) V^dag where V holds the tracked eigenvectors as
/// columns (V^dag maps to the dressed basis). dV/dt by central differences,
/// second-order one-sided at the ends. Hermitian part returned.
inline std::vector<CMatrix> counterdiabatic_generic(const DressedFrame& frame) {
  if (!frame.ok()) {
    throw Error(ErrorCode::degenerate,
                "counterdiabatic_generic: eigenvector tracking flagged at step " +
                    std::to_string(frame.flagged.front()));
  }
  const std::size_t n = frame.size();
  if (n < 3) throw Error(ErrorCode::invalid_argument, "counterdiabatic_generic: need >= 3 samples");
  const double h = frame.dt;
  const auto& v = frame.eigenvectors;
  std::vector<CMatrix> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    CMatrix dv;
    if (k == 0) {
      dv = (-3.0 * v[0] + 4.0 * v[1] - v[2]) / (2.0 * h);
    } else if (k + 1 == n) {
      dv = (3.0 * v[n - 1] - 4.0 * v[n - 2] + v[n - 3]) / (2.0 * h);
    } else {
      dv = (v[k + 1] - v[k - 1]) / (2.0 * h);
    }
    const CMatrix hcd = kI * dv * v[k].adjoint();
    out.push_back(0.5 * (hcd + hcd.adjoint()));
  }
  return out;
}

}  // namespace qoc
