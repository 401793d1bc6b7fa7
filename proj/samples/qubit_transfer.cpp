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


// Krotov state transfer |0> -> |1> for H = u(t)/2 sigma_x, T = 3 pi, then a
// check of the optimized field with an independent propagation.

#include <cstdio>

#include "qoc/qoc.hpp"

int main() {
  using namespace qoc;
  const ControlledHamiltonian h(Operator::zero(2), {{0.5 * pauli::x(), 0}});
  const TimeGrid grid(0.0, 3 * kPi, 301);
  const CVector zero = QuantumState::basis(2, 0).ket_vector();
  const CVector one = QuantumState::basis(2, 1).ket_vector();
  const auto problem = ControlProblem::closed(h, grid, {zero}, state_to_state_cost({one}));

  KrotovSettings s;
  s.lambda = 1.0;
  s.max_iters = 50;
  s.j_threshold = 1e-6;
  const auto rec = krotov(problem, {ControlField::constant(grid, 0.2)}, s);
  for (const auto& it : rec.iterations) std::printf("iter %3d  J = %.3e\n", it.iter, it.j_tf);

  const auto tr = propagate_ket(h, rec.final_fields, grid, QuantumState::ket(zero));
  std::printf("P(|1>) at T = %.9f after %d iterations (%s)\n", tr.final().populations()(1), rec.n_iterations(),
              to_string(rec.reason).c_str());
  return 0;
}
