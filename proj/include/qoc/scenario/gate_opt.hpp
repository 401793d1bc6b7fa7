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
#include <memory>

#include "qoc/functionals/gate.hpp"
#include "qoc/functionals/two_qubit.hpp"
#include "qoc/functionals/verification.hpp"
#include "qoc/optimize/gradient_free.hpp"
#include "qoc/optimize/grape.hpp"
#include "qoc/optimize/krotov.hpp"
#include "qoc/scenario/common.hpp"

namespace qoc {

enum class CostKind { state_to_state, gate, perfect_entangler, three_state, observable };

struct GateOptConfig {
  config::SystemSpec system;
  TimeGrid grid;
  std::vector<ControlField> guess;
  CostKind cost = CostKind::gate;
  bool open = false;
  // state_to_state / observable
  std::vector<QuantumState> initial, targets;
  std::vector<Operator> observables;
  // gate / three_state
  CMatrix gate;
  LogicalSubspace subspace;
  bool phase_sensitive = true;

  std::string method = "krotov";
  KrotovSettings krotov;
  GrapeSettings grape;
  GradientFreeSettings search;
  bool hybrid_gradient_free = true, hybrid_krotov = true;
  std::optional<nlohmann::json> parametrization;
};

namespace detail {

inline std::vector<QuantumState> state_list(const nlohmann::json& j, const char* key, const std::string& where) {
  const auto& a = config::at(j, key, where);
  if (!a.is_array() || a.empty()) config::fail(where, std::string(key) + " must be a non-empty list");
  std::vector<QuantumState> out;
  for (const auto& s : a) out.push_back(config::state(s, where + "." + key));
  return out;
}

inline Parametrization make_parametrization(const nlohmann::json& j, const std::vector<ControlField>& base) {
  using namespace config;
  const std::string where = "optimizer.parametrization";
  const std::string basis = string_or(j, "basis", "", where);
  const double bound = number_or(j, "amplitude_bound", std::numeric_limits<double>::infinity(), where);
  if (basis == "fourier") {
    check_keys(j, {"basis", "n_terms", "amplitude_bound"}, where);
    const long n = integer(j, "n_terms", where);
    if (n < 0) fail(where, "n_terms must be >= 0");
    return fourier_parametrization(base, int(n), bound);
  }
  if (basis == "gaussian") {
    check_keys(j, {"basis", "pulses", "free", "amplitude_bound"}, where);
    std::vector<GaussianPulse> pulses;
    for (const auto& q : at(j, "pulses", where)) {
      check_keys(q, {"control", "amplitude", "center", "width", "carrier"}, where + ".pulses");
      pulses.push_back({int(integer(q, "control", where)), number(q, "amplitude", where), number(q, "center", where),
                        number(q, "width", where), number_or(q, "carrier", 0.0, where)});
    }
    GaussianFreeParams free;
    if (j.contains("free")) {
      const json& f = j.at("free");
      check_keys(f, {"amplitude", "center", "width"}, where + ".free");
      free.amplitude = boolean_or(f, "amplitude", true, where);
      free.center = boolean_or(f, "center", true, where);
      free.width = boolean_or(f, "width", false, where);
    }
    return gaussian_parametrization(base.front().grid(), int(base.size()), pulses, free, bound);
  }
  fail(where, "basis is fourier or gaussian");
}

}  // namespace detail

inline GateOptConfig parse_gate_opt(const nlohmann::json& cfg) {
  using namespace config;
  allow_sections(cfg, {"system", "grid", "fields", "cost", "optimizer"}, "gate_opt");
  GateOptConfig c;
  c.system = system(at(cfg, "system", "gate_opt"));
  c.grid = grid(at(cfg, "grid", "gate_opt"));
  const Eigen::Index n = c.system.h.dim();

  const json& fs = at(cfg, "fields", "gate_opt");
  if (!fs.is_array() || int(fs.size()) != c.system.h.n_controls()) {
    fail("fields", "need one guess per control (" + std::to_string(c.system.h.n_controls()) + ")");
  }
  for (const auto& f : fs) c.guess.push_back(field(f, c.grid, "fields"));

  const json& cost = at(cfg, "cost", "gate_opt");
  const std::string type = string_or(cost, "type", "", "cost");
  auto read_gate = [&] {
    c.gate = op(at(cost, "gate", "cost"), "cost.gate").matrix();
    std::vector<Eigen::Index> idx;
    if (cost.contains("subspace")) {
      for (const auto& i : cost.at("subspace")) {
        if (!i.is_number_integer() || i.get<long>() < 0 || i.get<long>() >= n) fail("cost", "bad subspace index");
        idx.push_back(i.get<Eigen::Index>());
      }
      c.subspace = {n, idx};
    } else {
      c.subspace = LogicalSubspace::whole(n);
    }
    if (c.gate.rows() != c.subspace.dim()) fail("cost", "gate dimension differs from the logical subspace");
    if (unitarity_defect(c.gate) > 1e-9) fail("cost", "gate is not unitary");
  };
  if (type == "state_to_state") {
    check_keys(cost, {"type", "initial", "targets"}, "cost");
    c.cost = CostKind::state_to_state;
    c.initial = detail::state_list(cost, "initial", "cost");
    c.targets = detail::state_list(cost, "targets", "cost");
    if (c.initial.size() != c.targets.size()) fail("cost", "initial and targets differ in length");
    for (const auto& s : c.targets)
      if (!s.is_ket()) fail("cost", "state_to_state targets are kets");
  } else if (type == "gate") {
    check_keys(cost, {"type", "gate", "subspace", "phase_sensitive"}, "cost");
    c.cost = CostKind::gate;
    read_gate();
    c.phase_sensitive = boolean_or(cost, "phase_sensitive", true, "cost");
  } else if (type == "perfect_entangler") {
    check_keys(cost, {"type"}, "cost");
    c.cost = CostKind::perfect_entangler;
    if (n != 4) fail("cost", "perfect_entangler needs a two-qubit system");
  } else if (type == "three_state") {
    check_keys(cost, {"type", "gate"}, "cost");
    c.cost = CostKind::three_state;
    c.gate = op(at(cost, "gate", "cost"), "cost.gate").matrix();
    c.subspace = LogicalSubspace::whole(n);
    if (c.gate.rows() != n || unitarity_defect(c.gate) > 1e-9) fail("cost", "gate must be unitary on the full space");
  } else if (type == "observable") {
    check_keys(cost, {"type", "initial", "observables"}, "cost");
    c.cost = CostKind::observable;
    c.initial = detail::state_list(cost, "initial", "cost");
    for (const auto& o : at(cost, "observables", "cost")) c.observables.push_back(op(o, "cost.observables"));
    if (c.observables.size() != c.initial.size()) fail("cost", "one observable per initial state");
  } else {
    fail("cost", "type is state_to_state, gate, perfect_entangler, three_state or observable");
  }
  for (const auto& s : c.initial)
    if (s.dim() != n) fail("cost", "state dimension differs from the system");
  for (const auto& s : c.targets)
    if (s.dim() != n) fail("cost", "state dimension differs from the system");
  for (const auto& o : c.observables)
    if (o.dim() != n) fail("cost", "observable dimension differs from the system");

  const bool mixed_input = std::any_of(c.initial.begin(), c.initial.end(), [](const auto& s) { return s.is_density(); });
  c.open = !c.system.jumps.empty() || c.cost == CostKind::three_state || c.cost == CostKind::observable || mixed_input;
  if (c.open && (c.cost == CostKind::gate || c.cost == CostKind::perfect_entangler)) {
    fail("cost", "gate and perfect_entangler costs need closed dynamics; use three_state with jumps");
  }

  const json o = section(cfg, "optimizer");
  check_keys(o, {"method", "lambda", "max_iters", "j_threshold", "dj_threshold", "ramp_fraction", "lambda_stall_factor",
                 "step", "line_search", "budget", "size_tol", "initial_step", "parametrization", "gradient_free",
                 "krotov"},
             "optimizer");
  c.method = string_or(o, "method", "krotov", "optimizer");
  if (c.method != "krotov" && c.method != "grape" && c.method != "gradient_free" && c.method != "hybrid" &&
      c.method != "none") {
    fail("optimizer", "method is krotov, grape, gradient_free, hybrid or none");
  }
  const int max_iters = int(integer_or(o, "max_iters", 100, "optimizer"));
  const double jt = number_or(o, "j_threshold", 1e-4, "optimizer");
  const double djt = number_or(o, "dj_threshold", 0.0, "optimizer");
  const double ramp = number_or(o, "ramp_fraction", 0.05, "optimizer");
  if (!(ramp > 0.0 && ramp <= 0.5)) fail("optimizer", "ramp_fraction in (0, 0.5]");
  c.krotov.lambda = number_or(o, "lambda", 1.0, "optimizer");
  c.krotov.max_iters = max_iters;
  c.krotov.j_threshold = jt;
  c.krotov.dj_threshold = djt;
  c.krotov.lambda_stall_factor = number_or(o, "lambda_stall_factor", 1.0, "optimizer");
  c.krotov.update_shape.assign(c.guess.size(), flattop_shape(c.grid, ramp));
  c.grape.step = number_or(o, "step", 1.0, "optimizer");
  c.grape.line_search = boolean_or(o, "line_search", true, "optimizer");
  c.grape.max_iters = max_iters;
  c.grape.j_threshold = jt;
  c.grape.dj_threshold = djt;
  c.grape.update_shape = c.krotov.update_shape;
  c.search.budget = int(integer_or(o, "budget", 200, "optimizer"));
  c.search.size_tol = number_or(o, "size_tol", 1e-6, "optimizer");
  c.search.initial_step = number_or(o, "initial_step", 0.1, "optimizer");
  c.hybrid_gradient_free = boolean_or(o, "gradient_free", true, "optimizer");
  c.hybrid_krotov = boolean_or(o, "krotov", true, "optimizer");
  if (o.contains("parametrization")) c.parametrization = o.at("parametrization");
  if ((c.method == "gradient_free" || c.method == "hybrid") && !c.parametrization) {
    fail("optimizer", c.method + " needs a parametrization");
  }
  if (c.parametrization) detail::make_parametrization(*c.parametrization, c.guess);  // validate now
  return c;
}

namespace detail {

inline ControlProblem make_problem(const GateOptConfig& c) {
  const Eigen::Index n = c.system.h.dim();
  auto kets = [](const std::vector<QuantumState>& v) {
    std::vector<CVector> out;
    for (const auto& s : v) out.push_back(s.ket_vector());
    return out;
  };
  auto rhos = [](const std::vector<QuantumState>& v) {
    std::vector<CMatrix> out;
    for (const auto& s : v) out.push_back(s.density_matrix());
    return out;
  };
  const Liouvillian l(c.system.h, c.system.jumps);
  switch (c.cost) {
    case CostKind::state_to_state:
      if (!c.open) return ControlProblem::closed(c.system.h, c.grid, kets(c.initial), state_to_state_cost(kets(c.targets)));
      return ControlProblem::open(l, c.grid, rhos(c.initial), density_distance_cost(rhos(c.targets), "state_to_state"));
    case CostKind::gate:
      return ControlProblem::closed(c.system.h, c.grid, logical_basis_states(c.subspace),
                                    gate_cost(c.gate, c.subspace, c.phase_sensitive));
    case CostKind::perfect_entangler:
      return ControlProblem::closed(c.system.h, c.grid, logical_basis_states(LogicalSubspace::whole(n)),
                                    unitary_function_cost([](const CMatrix& u) { return pe_distance(weyl_coordinates(u)); },
                                                          n, "perfect_entangler"));
    case CostKind::three_state: {
      const auto set = verification_states(n);
      std::vector<CMatrix> r0, tg;
      for (const auto* s : set.all()) {
        r0.push_back(s->rho());
        tg.push_back(c.gate * s->rho() * c.gate.adjoint());
      }
      return ControlProblem::open(l, c.grid, r0, density_distance_cost(tg, "three_state"));
    }
    case CostKind::observable: {
      std::vector<CMatrix> ops;
      for (const auto& o : c.observables) ops.push_back(o.matrix());
      return ControlProblem::open(l, c.grid, rhos(c.initial), observable_cost(ops));
    }
  }
  throw Error(ErrorCode::invalid_argument, "unknown cost");
}

}  // namespace detail

inline OptimizationRecord optimize(const GateOptConfig& c, const ControlProblem& p, const std::vector<ControlField>& guess) {
  if (c.method == "krotov") return krotov(p, guess, c.krotov);
  if (c.method == "grape") return grape(p, guess, c.grape);
  if (c.method == "none") {
    OptimizationRecord r;
    r.iterations.push_back({0, p.evaluate(guess), 0.0, 0.0, "none"});
    r.final_fields = guess;
    r.reason = ConvergedReason::disabled;
    r.propagations = 1;
    return r;
  }
  const Parametrization par = detail::make_parametrization(*c.parametrization, guess);
  if (c.method == "gradient_free") return gradient_free_search(p, par, c.search).record;
  return hybrid_optimize(p, par, {c.hybrid_gradient_free, c.hybrid_krotov, c.search, c.krotov});
}

/// Generic optimization: system, guess, cost and optimizer from the config.
inline ResultBundle run_gate_opt(const GateOptConfig& c, const RunContext& ctx) {
  ResultBundle b;
  b.scenario = "gate_opt";
  std::vector<ControlField> guess = c.guess;
  if (ctx.seed) {
    if (ctx.seed->size() != guess.size()) throw Error(ErrorCode::invalid_argument, "seed field: control count");
    for (const auto& f : *ctx.seed)
      if (!(f.grid() == c.grid)) throw Error(ErrorCode::invalid_argument, "seed field: grid differs from config");
    guess = *ctx.seed;
  }
  const ControlProblem p = detail::make_problem(c);
  ctx.info("gate_opt: " + c.method + " on " + std::string(p.is_open() ? "open" : "closed") + " dynamics, " +
           std::to_string(p.n_members()) + " members");
  OptimizationRecord rec = optimize(c, p, guess);
  b.invariants.add_record(rec);
  const auto& fields = rec.final_fields;

  // re-propagate every member with the final fields for the invariant log
  const Eigen::Index n = c.system.h.dim();
  const Liouvillian l(c.system.h, c.system.jumps);
  std::vector<CVector> finals;
  for (std::size_t m = 0; m < p.n_members(); ++m) {
    const CVector& x0 = p.initial()[m];
    Trajectory tr = p.is_open() ? propagate_density(l, fields, c.grid, QuantumState::density(unvec(x0, n)))
                                : propagate_ket(c.system.h, fields, c.grid, QuantumState::ket(x0));
    finals.push_back(tr.final().is_ket() ? tr.final().ket_vector() : vec(tr.final().rho()));
    track(b.invariants, tr);
    if (m == 0) b.trajectory = std::move(tr);
  }

  b.results = {{"method", c.method},
               {"cost", p.cost().name},
               {"dynamics", p.is_open() ? "open" : "closed"},
               {"initial_j", rec.iterations.front().j_tf},
               {"final_j", p.cost().value(finals)},
               {"iterations", rec.n_iterations()},
               {"propagations", rec.propagations},
               {"converged_reason", to_string(rec.reason)}};
  if (!p.is_open()) {
    const CMatrix u = propagator(c.system.h, fields, c.grid);
    if (c.cost == CostKind::gate) {
      b.results["gate_error"] = j_gate(u, c.gate, c.subspace, c.phase_sensitive);
    }
    const CMatrix ul = c.cost == CostKind::gate ? c.subspace.restrict(u) : u;
    if (ul.rows() == 4 && unitarity_defect(ul) < 1e-6) {
      const auto w = weyl_coordinates(ul);
      const auto g = local_invariants(ul);
      b.results["weyl_coordinates"] = {w.c1, w.c2, w.c3};
      b.results["local_invariants"] = {g(0), g(1), g(2)};
      b.results["pe_distance"] = pe_distance(w);
      b.results["perfect_entangler"] = is_perfect_entangler(w);
    }
  }
  if (c.cost == CostKind::three_state) {
    nlohmann::json per = nlohmann::json::array();
    double agg = 0.0;
    const auto set = verification_states(n);
    const auto states = set.all();
    for (std::size_t i = 0; i < 3; ++i) {
      const CMatrix d = unvec(finals[i], n) - c.gate * states[i]->rho() * c.gate.adjoint();
      const double f = 1.0 - 0.5 * (d * d.adjoint()).trace().real();
      per.push_back(f);
      agg += f / 3.0;
    }
    b.results["three_state_fidelity"] = {{"aggregate", agg}, {"per_state", per}};
  }
  b.fields = fields;
  b.record = std::move(rec);
  return b;
}

}  // namespace qoc
