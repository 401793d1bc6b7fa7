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
#include <functional>
#include <limits>
#include <vector>

#include <gsl/gsl_errno.h>
#include <gsl/gsl_multimin.h>

#include "qoc/optimize/krotov.hpp"
#include "qoc/optimize/parametrization.hpp"
#include "qoc/optimize/problem.hpp"
#include "qoc/optimize/record.hpp"

namespace qoc {

struct GradientFreeSettings {
  int budget = 200;          // cost evaluations
  double size_tol = 1e-6;    // simplex size at which to stop
  double initial_step = 0.1; // relative to the coefficient range or scale
};

struct GradientFreeResult {
  OptimizationRecord record;
  RVector best;
};

/// Nelder-Mead (GSL nmsimplex2) over the coefficients. Practical for up
/// to roughly 20 parameters.
inline GradientFreeResult gradient_free_search(const ControlProblem& p, const Parametrization& par,
                                               const GradientFreeSettings& s = {}) {
  Stopwatch clock;
  GradientFreeResult out;
  OptimizationRecord& rec = out.record;
  const RVector x0 = par.clamp(par.coefficients);
  out.best = x0;
  double best_j = p.evaluate(par.render(x0));
  rec.propagations = 1;
  rec.iterations.push_back({0, best_j, 0.0, clock.ms(), "gradient_free"});
  const Eigen::Index n = par.size();
  if (n == 0) {
    rec.reason = ConvergedReason::no_parameters;
    rec.final_fields = par.render(x0);
    return out;
  }

  struct Ctx {
    const ControlProblem* p;
    const Parametrization* par;
    OptimizationRecord* rec;
    RVector* best;
    double* best_j;
  } ctx{&p, &par, &rec, &out.best, &best_j};
  gsl_multimin_function fn;
  fn.n = std::size_t(n);
  fn.params = &ctx;
  fn.f = [](const gsl_vector* v, void* params) {
    auto* c = static_cast<Ctx*>(params);
    RVector x(Eigen::Index(v->size));
    for (std::size_t i = 0; i < v->size; ++i) x(Eigen::Index(i)) = gsl_vector_get(v, i);
    x = c->par->clamp(x);
    const double j = c->p->evaluate(c->par->render(x));
    ++c->rec->propagations;
    if (j < *c->best_j) {
      *c->best_j = j;
      *c->best = x;
    }
    return std::isfinite(j) ? j : std::numeric_limits<double>::max();
  };

  gsl_vector* x = gsl_vector_alloc(std::size_t(n));
  gsl_vector* step = gsl_vector_alloc(std::size_t(n));
  for (Eigen::Index i = 0; i < n; ++i) {
    gsl_vector_set(x, std::size_t(i), x0(i));
    const double range = par.upper(i) - par.lower(i);
    const double scale = std::isfinite(range) ? range : std::max(1.0, std::abs(x0(i)));
    gsl_vector_set(step, std::size_t(i), s.initial_step * scale);
  }
  gsl_multimin_fminimizer* m = gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2, std::size_t(n));
  gsl_multimin_fminimizer_set(m, &fn, x, step);
  rec.reason = ConvergedReason::budget_exhausted;
  for (int it = 1; rec.propagations < s.budget; ++it) {
    if (gsl_multimin_fminimizer_iterate(m) != GSL_SUCCESS) {
      rec.reason = ConvergedReason::dj_threshold;
      break;
    }
    rec.iterations.push_back({it, best_j, 0.0, clock.ms(), "gradient_free"});
    if (gsl_multimin_test_size(gsl_multimin_fminimizer_size(m), s.size_tol) == GSL_SUCCESS) {
      rec.reason = ConvergedReason::dj_threshold;
      break;
    }
  }
  gsl_multimin_fminimizer_free(m);
  gsl_vector_free(x);
  gsl_vector_free(step);
  rec.final_fields = par.render(out.best);
  return out;
}

struct HybridSettings {
  bool gradient_free = true;
  bool krotov = true;
  GradientFreeSettings search;
  KrotovSettings krotov_settings;
};

/// Gradient-free pre-optimization, rendered as the guess for Krotov. The
/// record concatenates both phases.
inline OptimizationRecord hybrid_optimize(const ControlProblem& p, const Parametrization& par,
                                          const HybridSettings& s) {
  OptimizationRecord rec;
  std::vector<ControlField> guess = par.render();
  if (s.gradient_free) {
    auto gf = gradient_free_search(p, par, s.search);
    rec = gf.record;
    guess = gf.record.final_fields;
  }
  if (s.krotov) {
    auto kr = krotov(p, guess, s.krotov_settings);
    if (s.gradient_free) {
      rec.append(kr);
      rec.reason = kr.reason;
      rec.final_fields = kr.final_fields;
    } else {
      rec = std::move(kr);
    }
  }
  if (!s.gradient_free && !s.krotov) {
    Stopwatch clock;
    rec.iterations.push_back({0, p.evaluate(guess), 0.0, clock.ms(), "guess"});
    rec.propagations = 1;
    rec.reason = ConvergedReason::disabled;
    rec.final_fields = guess;
  }
  return rec;
}

}  // namespace qoc
