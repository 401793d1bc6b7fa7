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

#include "qoc/optimize/krotov.hpp"
#include "qoc/scenario/common.hpp"

namespace qoc {

struct QubitResetConfig {
  double coupling = 1.0;        // J
  double aux_decay = 1e-4;      // kappa, in absolute units
  double aux_excitation = 0.05; // thermal excited population p
  double guess_detuning = 0.3;  // constant sigma_z drive of the guess, in units of J
  double from = 0.5, to = 1.3, step = 0.05;  // durations in units of pi/(2J)
  double steps_per_unit = 100.0;             // grid points per 1/J
  double knee_tol = 1e-3;
  KrotovSettings krotov;
};

inline QubitResetConfig parse_qubit_reset(const nlohmann::json& cfg) {
  using namespace config;
  allow_sections(cfg, {"params", "optimizer"}, "qubit_reset");
  const json p = section(cfg, "params");
  check_keys(p, {"coupling", "aux_decay", "aux_excitation", "guess_detuning", "durations", "steps_per_unit",
                 "knee_tol"},
             "params");
  QubitResetConfig c;
  c.coupling = number_or(p, "coupling", 1.0, "params");
  c.aux_decay = number_or(p, "aux_decay", 1e-4 * c.coupling, "params");
  c.aux_excitation = number_or(p, "aux_excitation", 0.05, "params");
  c.guess_detuning = number_or(p, "guess_detuning", 0.3, "params");
  c.steps_per_unit = number_or(p, "steps_per_unit", 100.0, "params");
  c.knee_tol = number_or(p, "knee_tol", 1e-3, "params");
  if (p.contains("durations")) {
    const json& d = p.at("durations");
    check_keys(d, {"from", "to", "step"}, "params.durations");
    c.from = number_or(d, "from", c.from, "params.durations");
    c.to = number_or(d, "to", c.to, "params.durations");
    c.step = number_or(d, "step", c.step, "params.durations");
  }
  if (!(c.coupling > 0.0) || c.aux_decay < 0.0 || c.aux_excitation < 0.0 || c.aux_excitation > 0.5) {
    fail("params", "need coupling > 0, aux_decay >= 0, 0 <= aux_excitation <= 0.5");
  }
  if (!(c.from > 0.0) || !(c.to >= c.from) || !(c.step > 0.0) || !(c.steps_per_unit >= 10.0)) {
    fail("params", "bad duration sweep");
  }
  const json o = section(cfg, "optimizer");
  check_keys(o, {"method", "lambda", "max_iters", "j_threshold", "dj_threshold"}, "optimizer");
  if (string_or(o, "method", "krotov", "optimizer") != "krotov") fail("optimizer", "qubit_reset uses krotov");
  c.krotov.lambda = number_or(o, "lambda", 1.0, "optimizer");
  c.krotov.max_iters = int(integer_or(o, "max_iters", 150, "optimizer"));
  c.krotov.j_threshold = number_or(o, "j_threshold", 0.0, "optimizer");
  c.krotov.dj_threshold = number_or(o, "dj_threshold", 1e-9, "optimizer");
  return c;
}

namespace detail {

/// Qubit (first factor) and auxiliary TLS in the frame rotating with both
/// (resonant) transition frequencies: the sigma_x sigma_x coupling leaves
/// the flip-flop J (s+ s- + s- s+), the drive is u(t) sigma_z on the qubit,
/// and the auxiliary decays with sqrt(kappa) sigma_minus.
inline Liouvillian reset_model(const QubitResetConfig& c) {
  const Operator flip = tensor_product(pauli::plus(), pauli::minus()) + tensor_product(pauli::minus(), pauli::plus());
  const ControlledHamiltonian h(c.coupling * flip, {{tensor_product(pauli::z(), pauli::id()), 0}});
  return Liouvillian(h, {std::sqrt(c.aux_decay) * tensor_product(pauli::id(), pauli::minus())});
}

}  // namespace detail

/// Sweeps the protocol duration, maximizing the qubit's ground population
/// at each T with Krotov, and reports the reduced-state purity. The knee is
/// the shortest T whose purity is within knee_tol of the best one.
inline ResultBundle run_qubit_reset(const QubitResetConfig& c, const RunContext& ctx) {
  ResultBundle b;
  b.scenario = "qubit_reset";
  const Liouvillian l = detail::reset_model(c);
  const double p = c.aux_excitation;
  CMatrix aux = CMatrix::Zero(2, 2);
  aux(0, 0) = 1.0 - p;
  aux(1, 1) = p;
  const CMatrix rho0 = kron(CMatrix::Identity(2, 2) / 2.0, aux);
  const CMatrix ground = kron(projector(2, 0).matrix(), CMatrix::Identity(2, 2));
  const double tmin = kPi / (2.0 * c.coupling);
  const int n = int(std::floor((c.to - c.from) / c.step + 1e-9)) + 1;

  Table t;
  t.columns = {"duration", "duration_over_tmin", "purity", "ground_population", "iterations", "monotone"};
  std::vector<double> ts, purities;
  OptimizationRecord longest;
  for (int i = 0; i < n; ++i) {
    const double frac = c.from + i * c.step;
    const double dur = frac * tmin;
    const auto nt = Eigen::Index(std::ceil(dur * c.coupling * c.steps_per_unit)) + 1;
    const TimeGrid g(0.0, dur, nt);
    const auto prob = ControlProblem::open(l, g, {rho0}, observable_cost({ground}, "ground_population"));
    ControlField guess = flattop_shape(g);
    guess.samples() *= c.guess_detuning * c.coupling;
    auto rec = krotov(prob, {guess}, c.krotov);
    b.invariants.add_record(rec);
    const auto tr = track(b.invariants, propagate_density(l, rec.final_fields, g, QuantumState::density(rho0)));
    const CMatrix q = partial_trace_second(tr.final().rho(), 2, 2);
    const double pur = purity(q);
    ts.push_back(dur);
    purities.push_back(pur);
    t.add({dur, frac, pur, q(0, 0).real(), long(rec.n_iterations()), rec.monotone(1e-12, "krotov")});
    ctx.info("qubit_reset: T/Tmin = " + format_number(frac) + ", purity = " + format_number(pur));
    if (i == n - 1) {
      longest = std::move(rec);
      b.trajectory = tr;
    }
  }
  const double plateau = *std::max_element(purities.begin(), purities.end());
  double knee = ts.back();
  for (std::size_t i = 0; i < ts.size(); ++i)
    if (purities[i] >= plateau - c.knee_tol) {
      knee = ts[i];
      break;
    }
  b.fields = longest.final_fields;
  b.record = std::move(longest);
  b.tables["qubit_reset"] = std::move(t);
  b.results = {{"coupling", c.coupling},
               {"t_min", tmin},
               {"knee_duration", knee},
               {"knee_over_tmin", knee / tmin},
               {"grid_step", c.step * tmin},
               {"plateau_purity", plateau},
               {"aux_initial_purity", (1.0 - p) * (1.0 - p) + p * p}};
  return b;
}

}  // namespace qoc
