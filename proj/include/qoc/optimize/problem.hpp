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
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "qoc/core/bloch.hpp"
#include "qoc/dynamics/expm.hpp"
#include "qoc/dynamics/hamiltonian.hpp"
#include "qoc/dynamics/time_grid.hpp"
#include "qoc/functionals/gate.hpp"

namespace qoc {

/// Final-time cost over an ensemble of final states x_m. For closed
/// problems x_m is a ket, for open problems x_m = vec(rho_m).
///
/// `costate` returns the boundary condition chi_m(T) = -dJ/dx_m^*, i.e.
/// dJ = -2 Re sum_m <chi_m(T)|dx_m>.
struct FinalCost {
  std::string name;
  std::function<double(const std::vector<CVector>&)> value;
  std::function<std::vector<CVector>(const std::vector<CVector>&)> costate;
};

/// Ensemble control problem on a piecewise-constant grid:
/// x_m(t_{k+1}) = exp(A(u_k) dt) x_m(t_k), with A = -iH (closed) or the
/// GKLS generator (open). Everything the optimizers need goes through here.
class ControlProblem {
 public:
  static ControlProblem closed(ControlledHamiltonian h, TimeGrid grid,
                               std::vector<CVector> initial, FinalCost cost) {
    for (const auto& x : initial) require_same_dim(h.dim(), x.size(), "ControlProblem");
    ControlProblem p(grid, std::move(initial), std::move(cost));
    p.open_ = false;
    p.n_controls_ = h.n_controls();
    for (int j = 0; j < h.n_controls(); ++j) p.dA_.push_back(-kI * h.control_operator(j));
    p.h_ = std::move(h);
    return p;
  }

  static ControlProblem open(Liouvillian l, TimeGrid grid,
                             const std::vector<CMatrix>& initial_rho, FinalCost cost) {
    std::vector<CVector> xs;
    for (const auto& r : initial_rho) {
      require_same_dim(l.dim(), r.rows(), "ControlProblem");
      xs.push_back(vec(r));
    }
    ControlProblem p(grid, std::move(xs), std::move(cost));
    p.open_ = true;
    p.n_controls_ = l.n_controls();
    for (int j = 0; j < l.n_controls(); ++j) p.dA_.push_back(l.control_super(j));
    p.h_ = l.hamiltonian();
    p.l_ = std::move(l);
    return p;
  }

  bool is_open() const noexcept { return open_; }
  const TimeGrid& grid() const noexcept { return grid_; }
  int n_controls() const noexcept { return n_controls_; }
  std::size_t n_members() const noexcept { return initial_.size(); }
  const std::vector<CVector>& initial() const noexcept { return initial_; }
  const FinalCost& cost() const noexcept { return cost_; }
  const ControlledHamiltonian& hamiltonian() const noexcept { return h_; }
  const Liouvillian& liouvillian() const noexcept { return l_; }

  /// dA/du_j.
  const CMatrix& generator_derivative(int j) const { return dA_.at(std::size_t(j)); }

  /// One step propagator exp(A(u) dt).
  CMatrix step(const RVector& u) const {
    if (open_) return expm(l_.generator(u) * grid_.dt());
    return expm_hermitian(h_.at(u), grid_.dt());
  }

  /// d exp(A(u) dt) / du_j.
  CMatrix step_derivative(const RVector& u, int j) const {
    if (open_) return expm_derivative(l_.generator(u), l_.control_super(j), grid_.dt());
    return expm_hermitian_derivative(h_.at(u), h_.control_operator(j), grid_.dt());
  }

  void check(const std::vector<ControlField>& fields) const { check_controls(h_, fields, grid_); }

  /// All step propagators for the given fields.
  std::vector<CMatrix> steps(const std::vector<ControlField>& fields) const {
    check(fields);
    std::vector<CMatrix> out;
    out.reserve(std::size_t(grid_.n_mid()));
    for (Eigen::Index k = 0; k < grid_.n_mid(); ++k) out.push_back(step(controls_at(fields, k)));
    return out;
  }

  /// states[m][k] = x_m(t_k).
  std::vector<std::vector<CVector>> forward(const std::vector<CMatrix>& es) const {
    std::vector<std::vector<CVector>> out(initial_.size());
    for (std::size_t m = 0; m < initial_.size(); ++m) {
      auto& xs = out[m];
      xs.reserve(es.size() + 1);
      xs.push_back(initial_[m]);
      for (const auto& e : es) xs.push_back(e * xs.back());
    }
    return out;
  }

  /// chi[m][k], propagated back from chi(T) with the adjoint steps.
  std::vector<std::vector<CVector>> backward(const std::vector<CMatrix>& es,
                                             const std::vector<CVector>& chi_t) const {
    std::vector<std::vector<CVector>> out(chi_t.size());
    for (std::size_t m = 0; m < chi_t.size(); ++m) {
      auto& cs = out[m];
      cs.resize(es.size() + 1);
      cs.back() = chi_t[m];
      for (std::size_t k = es.size(); k-- > 0;) cs[k] = es[k].adjoint() * cs[k + 1];
    }
    return out;
  }

  std::vector<CVector> final_states(const std::vector<ControlField>& fields) const {
    const auto es = steps(fields);
    std::vector<CVector> out;
    for (const auto& x0 : initial_) {
      CVector x = x0;
      for (const auto& e : es) x = e * x;
      out.push_back(std::move(x));
    }
    return out;
  }

  double evaluate(const std::vector<ControlField>& fields) const {
    return cost_.value(final_states(fields));
  }

 private:
  ControlProblem(TimeGrid g, std::vector<CVector> x0, FinalCost c)
      : grid_(g), initial_(std::move(x0)), cost_(std::move(c)) {
    if (initial_.empty()) throw Error(ErrorCode::invalid_argument, "ControlProblem: no states");
  }

  TimeGrid grid_;
  std::vector<CVector> initial_;
  FinalCost cost_;
  bool open_ = false;
  int n_controls_ = 0;
  ControlledHamiltonian h_;
  Liouvillian l_;
  std::vector<CMatrix> dA_;
};

// ---- final costs -----------------------------------------------------------

/// J = 1 - (1/M) sum_m |<t_m|x_m>|^2 over kets.
inline FinalCost state_to_state_cost(std::vector<CVector> targets) {
  const double m = double(targets.size());
  auto t = std::make_shared<std::vector<CVector>>(std::move(targets));
  return {"state_to_state",
          [t, m](const std::vector<CVector>& xs) {
            double f = 0.0;
            for (std::size_t i = 0; i < xs.size(); ++i) f += std::norm((*t)[i].dot(xs[i]));
            return 1.0 - f / m;
          },
          [t, m](const std::vector<CVector>& xs) {
            std::vector<CVector> chi;
            for (std::size_t i = 0; i < xs.size(); ++i)
              chi.push_back((*t)[i] * ((*t)[i].dot(xs[i]) / m));
            return chi;
          }};
}

/// J = 1 - (1/M) sum_m Re tr(O_m rho_m); linear in rho. With O_m a
/// projector this is a target-population cost.
inline FinalCost observable_cost(std::vector<CMatrix> ops, std::string name = "observable") {
  const double m = double(ops.size());
  auto v = std::make_shared<std::vector<CVector>>();
  for (const auto& o : ops) v->push_back(vec(CMatrix(o.adjoint())));
  return {std::move(name),
          [v, m](const std::vector<CVector>& xs) {
            double f = 0.0;
            for (std::size_t i = 0; i < xs.size(); ++i) f += (*v)[i].dot(xs[i]).real();
            return 1.0 - f / m;
          },
          [v, m](const std::vector<CVector>&) {
            std::vector<CVector> chi;
            for (const auto& a : *v) chi.push_back(a / (2.0 * m));
            return chi;
          }};
}

/// Gate cost on the members x_m = U|e_m>, e_m the logical basis:
/// phase sensitive J = 1 - Re(tau)/N, otherwise J = 1 - |tau|^2/N^2, with
/// tau = sum_m <O e_m|x_m>.
inline FinalCost gate_cost(const CMatrix& gate, const LogicalSubspace& sub, bool phase_sensitive = true) {
  require_unitary(gate, "gate_cost");
  const CMatrix t = sub.embedding() * gate;
  const double n = double(t.cols());
  auto tc = std::make_shared<CMatrix>(t);
  auto tau = [tc](const std::vector<CVector>& xs) {
    cplx s = 0.0;
    for (std::size_t m = 0; m < xs.size(); ++m) s += tc->col(Eigen::Index(m)).dot(xs[m]);
    return s;
  };
  if (phase_sensitive) {
    return {"gate",
            [tau, n](const std::vector<CVector>& xs) { return 1.0 - tau(xs).real() / n; },
            [tc, n](const std::vector<CVector>& xs) {
              std::vector<CVector> chi;
              for (std::size_t m = 0; m < xs.size(); ++m) chi.push_back(tc->col(Eigen::Index(m)) / (2.0 * n));
              return chi;
            }};
  }
  return {"gate_phase_insensitive",
          [tau, n](const std::vector<CVector>& xs) { return 1.0 - std::norm(tau(xs)) / (n * n); },
          [tc, tau, n](const std::vector<CVector>& xs) {
            const cplx s = tau(xs);
            std::vector<CVector> chi;
            for (std::size_t m = 0; m < xs.size(); ++m) chi.push_back(tc->col(Eigen::Index(m)) * (s / (n * n)));
            return chi;
          }};
}

/// Initial kets e_m of the logical basis, for use with gate_cost.
inline std::vector<CVector> logical_basis_states(const LogicalSubspace& sub) {
  const CMatrix e = sub.embedding();
  std::vector<CVector> out;
  for (Eigen::Index m = 0; m < e.cols(); ++m) out.push_back(e.col(m));
  return out;
}

/// J = (1/M) sum_m 1/2 ||rho_m - target_m||^2, i.e. one minus the mean
/// Hilbert-Schmidt state fidelity. Used with the three-state set.
inline FinalCost density_distance_cost(std::vector<CMatrix> targets, std::string name = "density_distance") {
  const double m = double(targets.size());
  auto t = std::make_shared<std::vector<CVector>>();
  for (const auto& r : targets) t->push_back(vec(r));
  return {std::move(name),
          [t, m](const std::vector<CVector>& xs) {
            double f = 0.0;
            for (std::size_t i = 0; i < xs.size(); ++i) f += 0.5 * (xs[i] - (*t)[i]).squaredNorm();
            return f / m;
          },
          [t, m](const std::vector<CVector>& xs) {
            std::vector<CVector> chi;
            for (std::size_t i = 0; i < xs.size(); ++i) chi.push_back(((*t)[i] - xs[i]) / (2.0 * m));
            return chi;
          }};
}

/// Cost f(U) of the full propagator, members x_m = U|m>. The gradient is
/// taken by central differences along the Lie algebra,
/// U -> U exp(i eps X_a), so f only needs to be defined on unitaries.
inline FinalCost unitary_function_cost(std::function<double(const CMatrix&)> f, Eigen::Index n,
                                       std::string name, double eps = 1e-6) {
  auto basis = std::make_shared<std::vector<CMatrix>>(gell_mann_basis(n));
  basis->push_back(CMatrix::Identity(n, n) / std::sqrt(double(n)));
  auto assemble = [n](const std::vector<CVector>& xs) {
    CMatrix u(n, n);
    for (Eigen::Index m = 0; m < n; ++m) u.col(m) = xs[std::size_t(m)];
    return u;
  };
  auto fn = std::make_shared<std::function<double(const CMatrix&)>>(std::move(f));
  return {std::move(name),
          [fn, assemble](const std::vector<CVector>& xs) { return (*fn)(assemble(xs)); },
          [fn, assemble, basis, n, eps](const std::vector<CVector>& xs) {
            const CMatrix u = assemble(xs);
            CMatrix y = CMatrix::Zero(n, n);
            for (const auto& x : *basis) {
              const double d = ((*fn)(u * expm_hermitian(-x, eps)) - (*fn)(u * expm_hermitian(x, eps))) / (2.0 * eps);
              y += (0.5 * kI * d) * x;
            }
            const CMatrix chi = -(u * y);
            std::vector<CVector> out;
            for (Eigen::Index m = 0; m < n; ++m) out.push_back(chi.col(m));
            return out;
          }};
}

}  // namespace qoc
