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

#include "qoc/core/types.hpp"

namespace qoc {

/// First-order final-state population for two resonant pathways |1>,|2> ->
/// |f> driven by a two-color field with relative phase phi:
///   pi^2 (W11^2 |c1|^2 + W22^2 |c2|^2 + 2 Re(W11 W22 c1* c2 e^{-i phi})).
inline double bichromatic_population(double omega11, double omega22, cplx c1, cplx c2, double phi) {
  return kPi * kPi *
         (omega11 * omega11 * std::norm(c1) + omega22 * omega22 * std::norm(c2) +
          2.0 * (omega11 * omega22 * std::conj(c1) * c2 * std::exp(-kI * phi)).real());
}

/// (max - min) / (max + min) of bichromatic_population over phi.
inline double bichromatic_visibility(double omega11, double omega22, cplx c1, cplx c2) {
  const double a = omega11 * omega11 * std::norm(c1) + omega22 * omega22 * std::norm(c2);
  if (a == 0.0) return 0.0;
  return 2.0 * std::abs(omega11 * omega22) * std::abs(c1) * std::abs(c2) / a;
}

/// Probe signal of an equal superposition of |a>, |b>:
///   1/2 |d_fa|^2 + 1/2 |d_fb|^2 + |d_fa| |d_fb| cos((E_b - E_a) t).
inline double quantum_beats(cplx d_fa, cplx d_fb, double e_a, double e_b, double t) {
  return 0.5 * std::norm(d_fa) + 0.5 * std::norm(d_fb) +
         std::abs(d_fa) * std::abs(d_fb) * std::cos((e_b - e_a) * t);
}

inline double beat_period(double e_a, double e_b) { return 2.0 * kPi / std::abs(e_b - e_a); }

}  // namespace qoc
