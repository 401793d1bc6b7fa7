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

#include <vector>

#include "qoc/frames/frames.hpp"

namespace qoc {

struct DarkStates {
  std::vector<double> times;
  std::vector<QuantumState> states;
};

/// Zero-eigenvalue state (Omega_S, 0, -Omega_P) / norm of the resonant
/// ladder, per control midpoint. Pump couples 1-2, Stokes 2-3. Where both
/// fields vanish the previous dark state is kept (|1> at the start).
inline DarkStates stirap_dark_state(const ThreeLevelDriveSpec& spec) {
  const DrivenSystem sys = rwa_three_level(spec);
  const TimeGrid& g = spec.rabi1.grid();
  DarkStates out;
  CVector prev = CVector::Unit(3, 0);
  for (Eigen::Index k = 0; k < g.n_mid(); ++k) {
    const double p = spec.rabi1[k], s = spec.rabi2[k];
    const CMatrix h = sys.h.at(Eigen::Vector2d(p, s));
    CVector d(3);
    d << s, 0.0, -p;
    const double nrm = d.norm();
    if (nrm > 0.0) {
      d /= nrm;
    } else {
      d = prev;
    }
    if ((h * d).norm() > 1e-10 * std::max(1.0, h.norm())) {
      throw Error(ErrorCode::detuning_condition,
                  "stirap_dark_state: no zero eigenvalue; need one- and two-photon resonance");
    }
    if (std::abs(d(1)) > 1e-10) {
      throw Error(ErrorCode::numerics, "stirap_dark_state: dark state has |2> weight");
    }
    out.times.push_back(g.mid(k));
    out.states.push_back(QuantumState::ket(d));
    prev = d;
  }
  return out;
}

}  // namespace qoc
