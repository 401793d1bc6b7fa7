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
#include <vector>

#include "qoc/optimize/problem.hpp"
#include "qoc/optimize/record.hpp"

namespace qoc {

struct KrotovSettings {
  double lambda = 1.0;
  /// S(t) per control on the midpoints; empty means flattop_shape for all.
  std::vector<ControlField> update_shape;
  int max_iters = 100;
  double j_threshold = 1e-4;
  double dj_threshold = 0.0;
  /// lambda *= factor when the relative improvement drops below
  /// stall_ratio; 1 keeps lambda fixed.
  double lambda_stall_factor = 1.0;
  double stall_ratio = 1e-3;
  /// Revert an iteration that raised J and retry with 2 lambda.
  bool reject_increase = false;
};

namespace detail {

inline std::vector<ControlField> update_shapes(const ControlProblem& p, const KrotovSettings& s) {
  if (s.update_shape.empty()) return std::vector<ControlField>(std::size_t(p.n_controls()), flattop_shape(p.grid()));
  if (int(s.update_shape.size()) != p.n_controls()) {
    throw Error(ErrorCode::dimension_mismatch, "krotov: one update shape per control");
  }
  for (const auto& sh : s.update_shape) {
    if (!(sh.grid() == p.grid())) throw Error(ErrorCode::invalid_argument, "krotov: update shape grid");
    if (sh[0] != 0.0 || sh[sh.size() - 1] != 0.0) {
      throw Error(ErrorCode::invalid_argument, "krotov: update shape must vanish at both ends");
    }
  }
  return s.update_shape;
}

inline void require_finite(double j, int iter) {
  if (!std::isfinite(j)) {
    throw Error(ErrorCode::numerics, "non-finite functional at iteration " + std::to_string(iter));
  }
}

}  // namespace detail

/// First-order Krotov. Each iteration back-propagates the co-states with
/// the old field, then sweeps forward updating midpoint k from the states
/// at t_k (already propagated with the new field):
///   du_j(k) = S_j(k)/lambda sum_m Re <chi_m(t_k)| dA/du_j |x_m(t_k)>,
/// which for closed systems is S/lambda Im <chi|H_j|psi>.
inline OptimizationRecord krotov(const ControlProblem& p, std::vector<ControlField> fields,
                                 const KrotovSettings& s, const std::string& phase = "krotov") {
  if (!(s.lambda > 0.0)) throw Error(ErrorCode::invalid_argument, "krotov: lambda must be positive");
  p.check(fields);
  const auto shapes = detail::update_shapes(p, s);
  const Eigen::Index nk = p.grid().n_mid();
  const double dt = p.grid().dt();
  Stopwatch clock;
  OptimizationRecord rec;
  double lambda = s.lambda;

  auto es = p.steps(fields);
  auto xs = p.forward(es);
  std::vector<CVector> xt;
  for (const auto& x : xs) xt.push_back(x.back());
  double j = p.cost().value(xt);
  detail::require_finite(j, 0);
  rec.propagations = 1;
  rec.iterations.push_back({0, j, 0.0, clock.ms(), phase});
  rec.reason = ConvergedReason::max_iters;

  for (int it = 1; it <= s.max_iters; ++it) {
    const auto chi = p.backward(es, p.cost().costate(xt));
    std::vector<ControlField> trial = fields;
    std::vector<CMatrix> new_es(static_cast<std::size_t>(nk));
    std::vector<CVector> x = p.initial();
    double running = 0.0;
    RVector u(p.n_controls());
    for (Eigen::Index k = 0; k < nk; ++k) {
      for (int c = 0; c < p.n_controls(); ++c) {
        const double sk = shapes[std::size_t(c)][k];
        double du = 0.0;
        if (sk != 0.0) {
          const CMatrix& da = p.generator_derivative(c);
          double g = 0.0;
          for (std::size_t m = 0; m < x.size(); ++m) g += chi[m][std::size_t(k)].dot(da * x[m]).real();
          du = sk / lambda * g;
          running += lambda / sk * du * du * dt;
        }
        trial[std::size_t(c)][k] += du;
        u(c) = trial[std::size_t(c)][k];
      }
      new_es[std::size_t(k)] = p.step(u);
      for (auto& xm : x) xm = new_es[std::size_t(k)] * xm;
    }
    const double jn = p.cost().value(x);
    detail::require_finite(jn, it);
    rec.propagations += 2;
    if (s.reject_increase && jn > j + 1e-12) {
      lambda *= 2.0;
      --it;
      if (lambda > 1e12 * s.lambda) {
        rec.reason = ConvergedReason::dj_threshold;
        break;
      }
      continue;
    }
    const double dj = j - jn;
    fields = std::move(trial);
    es = std::move(new_es);
    xt = std::move(x);
    j = jn;
    rec.iterations.push_back({it, j, running, clock.ms(), phase});
    if (j < s.j_threshold) {
      rec.reason = ConvergedReason::j_threshold;
      break;
    }
    if (std::abs(dj) <= s.dj_threshold) {
      rec.reason = ConvergedReason::dj_threshold;
      break;
    }
    if (s.lambda_stall_factor != 1.0 && dj < s.stall_ratio * j) lambda *= s.lambda_stall_factor;
  }
  rec.final_fields = std::move(fields);
  return rec;
}

}  // namespace qoc
