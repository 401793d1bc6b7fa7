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
#include <cmath>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qoc/core/state.hpp"
#include "qoc/dynamics/hamiltonian.hpp"
#include "qoc/dynamics/time_grid.hpp"
#include "qoc/frames/frames.hpp"
#include "qoc/functionals/two_qubit.hpp"

namespace qoc::config {

using json = nlohmann::json;

[[noreturn]] inline void fail(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::schema, where + ": " + what);
}

inline void require_object(const json& j, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
}

/// Rejects keys outside `allowed`.
inline void check_keys(const json& j, std::initializer_list<const char*> allowed, const std::string& where) {
  require_object(j, where);
  for (const auto& [k, v] : j.items()) {
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return k == a; })) {
      fail(where, "unknown key '" + k + "'");
    }
  }
}

inline const json& at(const json& j, const char* key, const std::string& where) {
  if (!j.contains(key)) fail(where, std::string("missing key '") + key + "'");
  return j.at(key);
}

inline double number(const json& j, const char* key, const std::string& where) {
  const json& v = at(j, key, where);
  if (!v.is_number()) fail(where, std::string("'") + key + "' must be a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) fail(where, std::string("'") + key + "' must be finite");
  return x;
}

inline double number_or(const json& j, const char* key, double def, const std::string& where) {
  return j.contains(key) ? number(j, key, where) : def;
}

inline long integer(const json& j, const char* key, const std::string& where) {
  const json& v = at(j, key, where);
  if (!v.is_number_integer()) fail(where, std::string("'") + key + "' must be an integer");
  return v.get<long>();
}

inline long integer_or(const json& j, const char* key, long def, const std::string& where) {
  return j.contains(key) ? integer(j, key, where) : def;
}

inline bool boolean_or(const json& j, const char* key, bool def, const std::string& where) {
  if (!j.contains(key)) return def;
  if (!j.at(key).is_boolean()) fail(where, std::string("'") + key + "' must be a boolean");
  return j.at(key).get<bool>();
}

inline std::string string_or(const json& j, const char* key, const std::string& def, const std::string& where) {
  if (!j.contains(key)) return def;
  if (!j.at(key).is_string()) fail(where, std::string("'") + key + "' must be a string");
  return j.at(key).get<std::string>();
}

inline std::vector<double> numbers(const json& j, const char* key, const std::string& where) {
  const json& v = at(j, key, where);
  if (!v.is_array()) fail(where, std::string("'") + key + "' must be an array");
  std::vector<double> out;
  for (const auto& x : v) {
    if (!x.is_number()) fail(where, std::string("'") + key + "' must hold numbers");
    out.push_back(x.get<double>());
  }
  return out;
}

inline cplx complex_number(const json& v, const std::string& where) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
    return {v[0].get<double>(), v[1].get<double>()};
  }
  fail(where, "complex numbers are written as x or [re, im]");
}

inline TimeGrid grid(const json& j, const std::string& where = "grid") {
  check_keys(j, {"t0", "tf", "nt"}, where);
  const long nt = integer(j, "nt", where);
  if (nt < 2) fail(where, "nt must be >= 2");
  const double t0 = number_or(j, "t0", 0.0, where), tf = number(j, "tf", where);
  if (!(tf > t0)) fail(where, "tf must exceed t0");
  return TimeGrid(t0, tf, nt);
}

/// Operator specs:
///   {"pauli": "x"|"y"|"z"|"id"|"minus"|"plus"}
///   {"matrix": [[a, b], [c, d]]} with entries x or [re, im]
///   {"diag": [e0, e1, ...]}
///   {"transition": [n, row, col]}, {"projector": [n, k]}
///   {"kron": [spec, spec, ...]}, {"sum": [spec, ...]}
///   {"named": "cnot"|"cz"|"swap"|"hadamard"}
/// each optionally with "scale".
inline Operator op(const json& j, const std::string& where = "operator") {
  require_object(j, where);
  check_keys(j, {"pauli", "matrix", "diag", "transition", "projector", "kron", "sum", "named", "scale"}, where);
  const double scale = number_or(j, "scale", 1.0, where);
  std::optional<Operator> out;
  int kinds = 0;
  if (j.contains("pauli")) {
    ++kinds;
    const std::string p = j.at("pauli").is_string() ? j.at("pauli").get<std::string>() : "";
    if (p == "x") out = pauli::x();
    else if (p == "y") out = pauli::y();
    else if (p == "z") out = pauli::z();
    else if (p == "id") out = pauli::id();
    else if (p == "minus") out = pauli::minus();
    else if (p == "plus") out = pauli::plus();
    else fail(where, "unknown pauli '" + p + "'");
  }
  if (j.contains("named")) {
    ++kinds;
    const std::string n = j.at("named").is_string() ? j.at("named").get<std::string>() : "";
    if (n == "cnot") out = Operator(cnot());
    else if (n == "cz") out = Operator(cphase(kPi));
    else if (n == "swap") out = Operator(CMatrix(kron(pauli::x().matrix(), pauli::x().matrix()) + kron(pauli::y().matrix(), pauli::y().matrix()) + kron(pauli::z().matrix(), pauli::z().matrix()) + CMatrix::Identity(4, 4)) * 0.5);
    else if (n == "hadamard") out = (1.0 / std::sqrt(2.0)) * (pauli::x() + pauli::z());
    else fail(where, "unknown named operator '" + n + "'");
  }
  if (j.contains("matrix")) {
    ++kinds;
    const json& m = j.at("matrix");
    if (!m.is_array() || m.empty()) fail(where, "matrix must be a non-empty array of rows");
    const auto n = Eigen::Index(m.size());
    CMatrix a(n, n);
    for (Eigen::Index r = 0; r < n; ++r) {
      const json& row = m[std::size_t(r)];
      if (!row.is_array() || Eigen::Index(row.size()) != n) fail(where, "matrix must be square");
      for (Eigen::Index c = 0; c < n; ++c) a(r, c) = complex_number(row[std::size_t(c)], where);
    }
    out = Operator(a);
  }
  if (j.contains("diag")) {
    ++kinds;
    const auto d = numbers(j, "diag", where);
    if (d.empty()) fail(where, "diag must not be empty");
    out = diagonal(Eigen::Map<const RVector>(d.data(), Eigen::Index(d.size())));
  }
  if (j.contains("transition") || j.contains("projector")) {
    ++kinds;
    const bool tr = j.contains("transition");
    const json& a = j.at(tr ? "transition" : "projector");
    if (!a.is_array() || a.size() != (tr ? 3u : 2u)) fail(where, tr ? "transition is [n, row, col]" : "projector is [n, k]");
    for (const auto& x : a)
      if (!x.is_number_integer()) fail(where, "indices must be integers");
    const auto n = a[0].get<Eigen::Index>();
    const auto r = a[1].get<Eigen::Index>();
    const auto c = tr ? a[2].get<Eigen::Index>() : r;
    if (n < 1 || r < 0 || c < 0 || r >= n || c >= n) fail(where, "index out of range");
    out = transition(n, r, c);
  }
  if (j.contains("kron") || j.contains("sum")) {
    ++kinds;
    const bool kr = j.contains("kron");
    const json& a = j.at(kr ? "kron" : "sum");
    if (!a.is_array() || a.empty()) fail(where, "kron/sum need a non-empty list");
    Operator acc = op(a[0], where);
    for (std::size_t k = 1; k < a.size(); ++k) {
      const Operator b = op(a[k], where);
      if (kr) {
        acc = tensor_product(acc, b);
      } else {
        if (b.dim() != acc.dim()) fail(where, "sum terms differ in dimension");
        acc = acc + b;
      }
    }
    out = acc;
  }
  if (kinds != 1) fail(where, "exactly one of pauli/matrix/diag/transition/projector/kron/sum/named");
  return scale == 1.0 ? *out : scale * *out;
}

/// State specs: {"basis": [n, k]}, {"ket": [...]}, {"density": <operator>},
/// {"maximally_mixed": n}, {"kron": [state, state]}.
inline QuantumState state(const json& j, const std::string& where = "state") {
  check_keys(j, {"basis", "ket", "density", "maximally_mixed", "kron"}, where);
  if (j.size() != 1) fail(where, "exactly one of basis/ket/density/maximally_mixed/kron");
  if (j.contains("basis")) {
    const json& a = j.at("basis");
    if (!a.is_array() || a.size() != 2 || !a[0].is_number_integer() || !a[1].is_number_integer()) {
      fail(where, "basis is [n, k]");
    }
    const auto n = a[0].get<Eigen::Index>(), k = a[1].get<Eigen::Index>();
    if (n < 1 || k < 0 || k >= n) fail(where, "basis index out of range");
    return QuantumState::basis(n, k);
  }
  if (j.contains("ket")) {
    const json& a = j.at("ket");
    if (!a.is_array() || a.empty()) fail(where, "ket must be a non-empty list");
    CVector v(Eigen::Index(a.size()));
    for (std::size_t k = 0; k < a.size(); ++k) v(Eigen::Index(k)) = complex_number(a[k], where);
    return QuantumState::normalized_ket(v);
  }
  if (j.contains("density")) return QuantumState::density(op(j.at("density"), where).matrix());
  if (j.contains("maximally_mixed")) {
    if (!j.at("maximally_mixed").is_number_integer() || j.at("maximally_mixed").get<long>() < 1) {
      fail(where, "maximally_mixed takes the dimension");
    }
    return QuantumState::maximally_mixed(j.at("maximally_mixed").get<Eigen::Index>());
  }
  const json& a = j.at("kron");
  if (!a.is_array() || a.size() < 2) fail(where, "kron needs at least two states");
  QuantumState acc = state(a[0], where);
  for (std::size_t k = 1; k < a.size(); ++k) {
    const QuantumState b = state(a[k], where);
    if (acc.is_ket() && b.is_ket()) {
      acc = QuantumState::ket(kron(CMatrix(acc.ket_vector()), CMatrix(b.ket_vector())).col(0));
    } else {
      acc = QuantumState::density(kron(acc.density_matrix(), b.density_matrix()));
    }
  }
  return acc;
}

/// Field specs on a grid:
///   {"shape": "flat", "amplitude": a}
///   {"shape": "gaussian", "amplitude": a, "center": tc, "sigma": s}
///   {"shape": "sin2_ramp", "amplitude": a, "ramp_fraction": r}
///   {"shape": "chirped", "amplitude": a, "omega": w, "alpha": c, "envelope": <field>}
///   {"shape": "linear", "start": a, "stop": b}
///   {"shape": "samples", "values": [...]}
inline ControlField field(const json& j, const TimeGrid& g, const std::string& where = "field") {
  require_object(j, where);
  const std::string shape = string_or(j, "shape", "", where);
  if (shape == "flat") {
    check_keys(j, {"shape", "amplitude"}, where);
    return ControlField::constant(g, number(j, "amplitude", where));
  }
  if (shape == "gaussian") {
    check_keys(j, {"shape", "amplitude", "center", "sigma"}, where);
    ControlField f = gaussian_shape(g, number(j, "center", where), number(j, "sigma", where));
    f.samples() *= number(j, "amplitude", where);
    return f;
  }
  if (shape == "sin2_ramp") {
    check_keys(j, {"shape", "amplitude", "ramp_fraction"}, where);
    ControlField f = flattop_shape(g, number_or(j, "ramp_fraction", 0.05, where));
    f.samples() *= number(j, "amplitude", where);
    return f;
  }
  if (shape == "chirped") {
    check_keys(j, {"shape", "amplitude", "omega", "alpha", "envelope"}, where);
    const ControlField env = j.contains("envelope") ? field(j.at("envelope"), g, where + ".envelope")
                                                    : ControlField::constant(g, 1.0);
    return chirped_field(number(j, "amplitude", where), env, number(j, "omega", where),
                         number_or(j, "alpha", 0.0, where));
  }
  if (shape == "linear") {
    check_keys(j, {"shape", "start", "stop"}, where);
    const double a = number(j, "start", where), b = number(j, "stop", where);
    return ControlField::from_function(g, [&](double t) { return a + (b - a) * (t - g.t0()) / g.duration(); });
  }
  if (shape == "samples") {
    check_keys(j, {"shape", "values"}, where);
    const auto v = numbers(j, "values", where);
    if (Eigen::Index(v.size()) != g.n_mid()) fail(where, "samples need nt-1 values");
    return ControlField(g, Eigen::Map<const RVector>(v.data(), Eigen::Index(v.size())));
  }
  fail(where, "unknown shape '" + shape + "' (flat, gaussian, sin2_ramp, chirped, linear, samples)");
}

/// {"drift": op, "couplings": [{"op": op, "control": j}], "jumps": [op]}
struct SystemSpec {
  ControlledHamiltonian h;
  std::vector<Operator> jumps;
};

inline SystemSpec system(const json& j, const std::string& where = "system") {
  check_keys(j, {"drift", "couplings", "jumps"}, where);
  SystemSpec s;
  const Operator drift = op(at(j, "drift", where), where + ".drift");
  std::vector<Coupling> cs;
  if (j.contains("couplings")) {
    if (!j.at("couplings").is_array()) fail(where, "couplings must be a list");
    for (const auto& c : j.at("couplings")) {
      check_keys(c, {"op", "control"}, where + ".couplings");
      cs.push_back({op(at(c, "op", where), where + ".couplings.op"), int(integer(c, "control", where))});
    }
  }
  try {
    s.h = ControlledHamiltonian(drift, cs);
  } catch (const Error& e) {
    fail(where, e.what());
  }
  if (j.contains("jumps")) {
    if (!j.at("jumps").is_array()) fail(where, "jumps must be a list");
    for (const auto& l : j.at("jumps")) {
      s.jumps.push_back(op(l, where + ".jumps"));
      if (s.jumps.back().dim() != drift.dim()) fail(where, "jump dimension mismatch");
    }
  }
  return s;
}

}  // namespace qoc::config
