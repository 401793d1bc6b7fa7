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

#include "qoc/optimize/krotov.hpp"

namespace qoc {

/// Exact gradient dJ/du_j(k) of the discretized problem:
///   -2 Re sum_m <chi_m(t_{k+1})| dE_k/du_j |x_m(t_k)>,
/// with dE_k the Frechet derivative of the step propagator.
inline std::vector<RVector> grape_gradient(const ControlProblem& p, const std::vector<ControlField>& fields,
                                           double* j_out = nullptr) {
  const auto es = p.steps(fields);
  const auto xs = p.forward(es);
  std::vector<CVector> xt;
  for (const auto& x : xs) xt.push_back(x.back());
  if (j_out) *j_out = p.cost().value(xt);
  const auto chi = p.backward(es, p.cost().costate(xt));
  const Eigen::Index nk = p.grid().n_mid();
  std::vector<RVector> grad(std::size_t(p.n_controls()), RVector::Zero(nk));
  for (Eigen::Index k = 0; k < nk; ++k) {
    const RVector u = controls_at(fields, k);
    for (int c = 0; c < p.n_controls(); ++c) {
      const CMatrix de = p.step_derivative(u, c);
      double g = 0.0;
      for (std::size_t m = 0; m < xs.size(); ++m)
        g += chi[m][std::size_t(k + 1)].dot(de * xs[m][std::size_t(k)]).real();
      grad[std::size_t(c)](k) = -2.0 * g;
    }
  }
  return grad;
}

struct GrapeSettings {
  double step = 1.0;  // initial step along -S * gradient
  bool line_search = true;
  std::vector<ControlField> update_shape;  // empty: flattop
  int max_iters = 100;
  double j_threshold = 1e-4;
  double dj_threshold = 0.0;
};

/// Concurrent update u <- u - alpha S grad. With line_search the step is
/// backtracked until the Armijo condition holds and grown after success.
inline OptimizationRecord grape(const ControlProblem& p, std::vector<ControlField> fields, const GrapeSettings& s) {
  KrotovSettings ks;
  ks.update_shape = s.update_shape;
  const auto shapes = detail::update_shapes(p, ks);
  Stopwatch clock;
  OptimizationRecord rec;
  double j = 0.0;
  auto grad = grape_gradient(p, fields, &j);
  detail::require_finite(j, 0);
  rec.propagations = 2;
  rec.iterations.push_back({0, j, 0.0, clock.ms(), "grape"});
  rec.reason = ConvergedReason::max_iters;
  double alpha = s.step;
  for (int it = 1; it <= s.max_iters; ++it) {
    double g2 = 0.0;
    for (int c = 0; c < p.n_controls(); ++c)
      g2 += (shapes[std::size_t(c)].samples().array() * grad[std::size_t(c)].array().square()).sum();
    auto trial_at = [&](double a) {
      std::vector<ControlField> t = fields;
      for (int c = 0; c < p.n_controls(); ++c)
        t[std::size_t(c)].samples() -= a * (shapes[std::size_t(c)].samples().array() * grad[std::size_t(c)].array()).matrix();
      return t;
    };
    std::vector<ControlField> trial = trial_at(alpha);
    double jn = p.evaluate(trial);
    ++rec.propagations;
    if (s.line_search) {
      int tries = 0;
      while (!(jn <= j - 1e-4 * alpha * g2) && tries < 40) {
        alpha *= 0.5;
        trial = trial_at(alpha);
        jn = p.evaluate(trial);
        ++rec.propagations;
        ++tries;
      }
      if (tries == 40) {
        rec.reason = ConvergedReason::line_search_failed;
        break;
      }
    }
    detail::require_finite(jn, it);
    const double dj = j - jn;
    fields = std::move(trial);
    grad = grape_gradient(p, fields, &j);
    rec.propagations += 2;
    rec.iterations.push_back({it, j, 0.0, clock.ms(), "grape"});
    if (s.line_search) alpha *= 2.0;
    if (j < s.j_threshold) {
      rec.reason = ConvergedReason::j_threshold;
      break;
    }
    if (std::abs(dj) <= s.dj_threshold) {
      rec.reason = ConvergedReason::dj_threshold;
      break;
    }
  }
  rec.final_fields = std::move(fields);
  return rec;
}

}  // namespace qoc
