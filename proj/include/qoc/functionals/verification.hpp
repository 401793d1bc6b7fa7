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

#include <array>
#include <functional>

#include "qoc/core/metrics.hpp"
#include "qoc/functionals/gate.hpp"

namespace qoc {

/// Three states on the n-dimensional logical space.
///   rho_b: diag(lambda_i), lambda_i = 2 (n + 1 - i) / (n (n + 1))
///   rho_p: projector on the uniform superposition (a vector of the Fourier
///          basis, mutually unbiased to the computational one)
///   rho_id: 1/n
struct VerificationSet {
  QuantumState rho_b;
  QuantumState rho_p;
  QuantumState rho_id;

  std::array<const QuantumState*, 3> all() const { return {&rho_b, &rho_p, &rho_id}; }
};

inline VerificationSet verification_states(Eigen::Index n) {
  if (n < 2) throw Error(ErrorCode::invalid_argument, "verification_states: n >= 2");
  RVector lam(n);
  for (Eigen::Index i = 1; i <= n; ++i) lam(i - 1) = 2.0 * double(n + 1 - i) / double(n * (n + 1));
  const CVector plus = CVector::Ones(n) / std::sqrt(double(n));
  return {QuantumState::density(lam.cast<cplx>().asDiagonal().toDenseMatrix()),
          QuantumState::density(plus * plus.adjoint()),
          QuantumState::maximally_mixed(n)};
}

/// A map on logical density matrices (the channel restricted to the
/// logical subspace).
using Channel = std::function<CMatrix(const CMatrix&)>;

struct ThreeStateFidelity {
  /// F_i = 1 - 1/2 tr((E(rho_i) - O rho_i O^dag)^2), order (b, p, id)
  std::array<double, 3> per_state{};
  /// equal-weight mean of the three
  double aggregate = 0.0;
};

inline ThreeStateFidelity three_state_gate_fidelity(const Channel& channel, const CMatrix& gate,
                                                    const VerificationSet& set) {
  require_unitary(gate, "three_state_gate_fidelity");
  require_same_dim(gate.rows(), set.rho_b.dim(), "three_state_gate_fidelity");
  ThreeStateFidelity f;
  const auto states = set.all();
  for (std::size_t i = 0; i < 3; ++i) {
    const CMatrix& rho = states[i]->rho();
    const CMatrix d = channel(rho) - gate * rho * gate.adjoint();
    f.per_state[i] = 1.0 - 0.5 * (d * d.adjoint()).trace().real();
    f.aggregate += f.per_state[i] / 3.0;
  }
  return f;
}

/// Channel of conjugation by a unitary.
inline Channel unitary_channel(const CMatrix& u) {
  return [u](const CMatrix& rho) -> CMatrix { return u * rho * u.adjoint(); };
}

}  // namespace qoc
