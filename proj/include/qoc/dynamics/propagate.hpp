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
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "qoc/core/metrics.hpp"
#include "qoc/core/state.hpp"
#include "qoc/dynamics/expm.hpp"
#include "qoc/dynamics/hamiltonian.hpp"

namespace qoc {

enum class Direction { forward, backward };

/// One state per grid point. For backward runs the input state sits at tf
/// and states[0] is the state at t0.
struct Trajectory {
  TimeGrid grid;
  std::vector<QuantumState> states;

  const QuantumState& initial() const { return states.front(); }
  const QuantumState& final() const { return states.back(); }

  /// max over steps of |norm - 1| or |tr - 1|
  double max_normalization_defect() const {
    double d = 0.0;
    for (const auto& s : states) d = std::max(d, s.normalization_defect());
    return d;
  }

  /// min over steps of the smallest density eigenvalue (0 for kets)
  double min_eigenvalue() const {
    double m = 0.0;
    for (const auto& s : states)
      if (s.is_density()) m = std::min(m, qoc::min_eigenvalue(s.rho()));
    return m;
  }
};

/// Propagate a ket through a sequence of per-step Hamiltonians
/// (hs[k] acts on [t_k, t_{k+1}]).
inline Trajectory propagate_ket_sequence(const std::vector<CMatrix>& hs,
                                         const TimeGrid& grid,
                                         const QuantumState& psi0,
                                         Direction dir = Direction::forward) {
  if (static_cast<Eigen::Index>(hs.size()) != grid.n_mid()) {
    throw Error(ErrorCode::invalid_argument, "need one Hamiltonian per step");
  }
  const CVector& v0 = psi0.ket_vector();
  for (const auto& h : hs) require_same_dim(h.rows(), v0.size(), "propagate_ket");
  const double dt = grid.dt();
  std::vector<CVector> out(static_cast<std::size_t>(grid.nt()));
  if (dir == Direction::forward) {
    out[0] = v0;
    for (Eigen::Index k = 0; k < grid.n_mid(); ++k) {
      out[std::size_t(k + 1)] = expm_hermitian(hs[std::size_t(k)], dt) * out[std::size_t(k)];
    }
  } else {
    out.back() = v0;
    for (Eigen::Index k = grid.n_mid() - 1; k >= 0; --k) {
      out[std::size_t(k)] = expm_hermitian(hs[std::size_t(k)], -dt) * out[std::size_t(k + 1)];
    }
  }
  Trajectory tr{grid, {}};
  tr.states.reserve(out.size());
  for (auto& v : out) tr.states.push_back(QuantumState::unchecked_ket(std::move(v)));
  return tr;
}

inline std::vector<CMatrix> hamiltonian_sequence(const ControlledHamiltonian& h,
                                                 const std::vector<ControlField>& controls,
                                                 const TimeGrid& grid) {
  check_controls(h, controls, grid);
  std::vector<CMatrix> hs;
  hs.reserve(std::size_t(grid.n_mid()));
  for (Eigen::Index k = 0; k < grid.n_mid(); ++k) hs.push_back(h.at(controls_at(controls, k)));
  return hs;
}

/// Piecewise-constant Schroedinger propagation with midpoint controls.
inline Trajectory propagate_ket(const ControlledHamiltonian& h,
                                const std::vector<ControlField>& controls,
                                const TimeGrid& grid, const QuantumState& psi0,
                                Direction dir = Direction::forward) {
  if (!psi0.is_ket()) throw Error(ErrorCode::invalid_state, "propagate_ket: ket required");
  require_same_dim(h.dim(), psi0.dim(), "propagate_ket");
  return propagate_ket_sequence(hamiltonian_sequence(h, controls, grid), grid, psi0, dir);
}

/// Total propagator U(tf, t0) for the piecewise-constant Hamiltonian.
inline CMatrix propagator(const ControlledHamiltonian& h,
                          const std::vector<ControlField>& controls,
                          const TimeGrid& grid) {
  check_controls(h, controls, grid);
  CMatrix u = CMatrix::Identity(h.dim(), h.dim());
  for (Eigen::Index k = 0; k < grid.n_mid(); ++k)
    u = expm_hermitian(h.at(controls_at(controls, k)), grid.dt()) * u;
  return u;
}

/// GKLS propagation of vec(rho). Backward runs apply exp(G^dag dt), the
/// Heisenberg-picture adjoint used for co-states.
inline Trajectory propagate_density(const Liouvillian& l,
                                    const std::vector<ControlField>& controls,
                                    const TimeGrid& grid, const QuantumState& rho0,
                                    Direction dir = Direction::forward) {
  if (!rho0.is_density()) {
    throw Error(ErrorCode::convert_first, "propagate_density: density state required");
  }
  require_same_dim(l.dim(), rho0.dim(), "propagate_density");
  check_controls(l.hamiltonian(), controls, grid);
  const Eigen::Index n = l.dim();
  const double dt = grid.dt();
  std::vector<CVector> out(static_cast<std::size_t>(grid.nt()));
  if (dir == Direction::forward) {
    out[0] = vec(rho0.rho());
    for (Eigen::Index k = 0; k < grid.n_mid(); ++k) {
      const CMatrix e = expm(l.generator(controls_at(controls, k)) * dt);
      out[std::size_t(k + 1)] = e * out[std::size_t(k)];
    }
  } else {
    out.back() = vec(rho0.rho());
    for (Eigen::Index k = grid.n_mid() - 1; k >= 0; --k) {
      const CMatrix e = expm(l.generator(controls_at(controls, k)).adjoint() * dt);
      out[std::size_t(k)] = e * out[std::size_t(k + 1)];
    }
  }
  Trajectory tr{grid, {}};
  tr.states.reserve(out.size());
  for (const auto& v : out) tr.states.push_back(QuantumState::unchecked_density(unvec(v, n)));
  return tr;
}

struct Observable {
  std::string name;
  Operator op;
};

/// CSV: time, P_0..P_{N-1}, then one column per observable.
inline void write_trajectory_csv(std::ostream& os, const Trajectory& tr,
                                 const std::vector<Observable>& observables = {}) {
  const Eigen::Index n = tr.states.front().dim();
  os << "time";
  for (Eigen::Index k = 0; k < n; ++k) os << ",P" << k;
  for (const auto& o : observables) os << "," << o.name;
  os << "\n";
  os.precision(12);
  for (std::size_t i = 0; i < tr.states.size(); ++i) {
    os << tr.grid.t(Eigen::Index(i));
    const RVector p = tr.states[i].populations();
    for (Eigen::Index k = 0; k < n; ++k) os << "," << p(k);
    for (const auto& o : observables) os << "," << expectation(o.op, tr.states[i]);
    os << "\n";
  }
}

}  // namespace qoc
