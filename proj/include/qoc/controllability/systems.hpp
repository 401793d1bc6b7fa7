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

#include "qoc/dynamics/hamiltonian.hpp"

namespace qoc {

/// Two identical qubits with exchange coupling J (XX + YY), only the first
/// one driven by sigma_x. The drive touches all four drift eigenstates but
/// the transitions come in degenerate pairs.
inline ControlledHamiltonian exchange_pair_one_drive(double omega = 1.0, double j = 0.1) {
  const Operator z1 = tensor_product(pauli::z(), pauli::id()), z2 = tensor_product(pauli::id(), pauli::z());
  const Operator xy = tensor_product(pauli::x(), pauli::x()) + tensor_product(pauli::y(), pauli::y());
  return ControlledHamiltonian(0.5 * omega * (z1 + z2) + j * xy, {{tensor_product(pauli::x(), pauli::id()), 0}});
}

/// Qubits with frequencies w1 != w2 and ZZ coupling J; sigma_x drive on the
/// first only. Transitions are all distinct, but the drive never flips the
/// second qubit, so the graph falls apart into two pieces.
inline ControlledHamiltonian zz_pair_one_drive(double w1 = 1.0, double w2 = 1.3, double j = 0.1) {
  const Operator z1 = tensor_product(pauli::z(), pauli::id()), z2 = tensor_product(pauli::id(), pauli::z());
  return ControlledHamiltonian(0.5 * w1 * z1 + 0.5 * w2 * z2 + j * tensor_product(pauli::z(), pauli::z()),
                               {{tensor_product(pauli::x(), pauli::id()), 0}});
}

/// N-level ladder with anharmonic spacings and one dipole-like control.
inline ControlledHamiltonian ladder(Eigen::Index n, double omega = 1.0, double anharmonicity = -0.07) {
  RVector e(n);
  CMatrix d = CMatrix::Zero(n, n);
  for (Eigen::Index k = 0; k < n; ++k) e(k) = omega * double(k) + 0.5 * anharmonicity * double(k * (k - 1));
  for (Eigen::Index k = 0; k + 1 < n; ++k) d(k, k + 1) = d(k + 1, k) = std::sqrt(double(k + 1));
  return ControlledHamiltonian(diagonal(e), {{Operator(d), 0}});
}

}  // namespace qoc
