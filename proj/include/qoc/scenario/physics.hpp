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
#include <numeric>

#include <Eigen/Eigenvalues>

#include "qoc/adiabatic/counterdiabatic.hpp"
#include "qoc/functionals/interference.hpp"
#include "qoc/scenario/common.hpp"

namespace qoc {

// ---- rabi ------------------------------------------------------------------

struct RabiConfig {
  TimeGrid grid;
  double omega0 = 0.0, omega_l = 0.0, rabi = 0.0, phase = 0.0;
  Frame frame = Frame::carrier;
  std::string shape = "flat";
};

inline RabiConfig parse_rabi(const nlohmann::json& cfg) {
  using namespace config;
  allow_sections(cfg, {"grid", "params"}, "rabi");
  const json p = section(cfg, "params");
  check_keys(p, {"omega0", "omega_l", "rabi", "frame", "shape", "phase"}, "params");
  RabiConfig c;
  c.grid = grid(at(cfg, "grid", "rabi"));
  c.omega0 = number(p, "omega0", "params");
  c.omega_l = number_or(p, "omega_l", c.omega0, "params");
  c.rabi = number(p, "rabi", "params");
  c.phase = number_or(p, "phase", 0.0, "params");
  c.frame = frame_from_string(string_or(p, "frame", "carrier", "params"));
  c.shape = string_or(p, "shape", "flat", "params");
  if (c.shape != "flat" && c.shape != "sin2") fail("params", "shape is flat or sin2");
  return c;
}

/// Driven two-level system from |0>. Reports the deviation from the RWA
/// Rabi formula Omega^2/W^2 sin^2(W t / 2) for flat drives.
inline ResultBundle run_rabi(const RabiConfig& c, const RunContext&) {
  ResultBundle b;
  b.scenario = "rabi";
  const auto shape = c.shape == "flat" ? ControlField::constant(c.grid, 1.0) : sin2_shape(c.grid);
  TwoLevelDriveSpec spec{c.omega0, c.omega_l, c.rabi, shape, {}};
  if (c.phase != 0.0) spec.phase = ControlField::constant(c.grid, c.phase);
  const auto sys = rwa_two_level(spec, c.frame);
  b.trajectory = track(b.invariants, propagate_ket(sys.h, sys.controls, c.grid, QuantumState::basis(2, 0)));
  b.fields = sys.controls;
  const RVector pf = b.trajectory->final().populations();
  b.results = {{"frame", std::string(to_string(c.frame))},
               {"detuning", spec.detuning()},
               {"validity_ratio", sys.validity_ratio},
               {"final_populations", {pf(0), pf(1)}}};
  if (c.shape == "flat") {
    const double d = spec.detuning(), w = std::hypot(c.rabi, d);
    double dev = 0.0;
    for (Eigen::Index k = 0; k < c.grid.nt(); ++k) {
      const double t = c.grid.t(k) - c.grid.t0();
      const double p1 = w > 0.0 ? c.rabi * c.rabi / (w * w) * std::pow(std::sin(0.5 * w * t), 2) : 0.0;
      dev = std::max(dev, std::abs(b.trajectory->states[std::size_t(k)].populations()(1) - p1));
    }
    b.results["max_formula_deviation"] = dev;
  }
  return b;
}

// ---- landau_zener ----------------------------------------------------------

struct LandauZenerConfig {
  double gap = 1.0;
  std::vector<double> adiabaticity;  // g^2 / eps
  double sweep_extent = 200.0;       // eps T / g at each end
  double dt = 0.005;
  bool counterdiabatic = true;
};

inline LandauZenerConfig parse_landau_zener(const nlohmann::json& cfg) {
  using namespace config;
  allow_sections(cfg, {"params"}, "landau_zener");
  const json p = at(cfg, "params", "landau_zener");
  check_keys(p, {"gap", "adiabaticity", "sweep_extent", "dt", "counterdiabatic"}, "params");
  LandauZenerConfig c;
  c.gap = number_or(p, "gap", 1.0, "params");
  c.adiabaticity = numbers(p, "adiabaticity", "params");
  c.sweep_extent = number_or(p, "sweep_extent", 200.0, "params");
  c.dt = number_or(p, "dt", 0.005, "params");
  c.counterdiabatic = boolean_or(p, "counterdiabatic", true, "params");
  if (!(c.gap > 0.0) || !(c.dt > 0.0) || !(c.sweep_extent > 0.0)) fail("params", "gap, dt, sweep_extent must be positive");
  if (c.adiabaticity.empty()) fail("params", "adiabaticity list is empty");
  for (double a : c.adiabaticity)
    if (!(a > 0.0)) fail("params", "adiabaticity values must be positive");
  return c;
}

namespace detail {

/// Lower eigenvector of -1/2 (det sigma_z + rabi sigma_x).
inline CVector tls_ground(double rabi, double det) {
  CMatrix h(2, 2);
  h << -0.5 * det, -0.5 * rabi, -0.5 * rabi, 0.5 * det;
  Eigen::SelfAdjointEigenSolver<CMatrix> es(h);
  return es.eigenvectors().col(0);
}

}  // namespace detail

/// H = -1/2 (eps t sigma_z + g sigma_x) over t in [-T, T]. The diabatic
/// probability is the weight outside the instantaneous ground state at +T
/// when starting in it at -T.
inline ResultBundle run_landau_zener(const LandauZenerConfig& c, const RunContext& ctx) {
  ResultBundle b;
  b.scenario = "landau_zener";
  Table t;
  t.columns = {"adiabaticity", "sweep_rate", "duration", "p_diabatic", "p_formula", "rel_error", "cd_max_infidelity"};
  const ControlledHamiltonian h(Operator::zero(2), {{-0.5 * pauli::x(), 0}, {-0.5 * pauli::z(), 1}, {pauli::y(), 2}});
  double worst_rel = 0.0, worst_cd = 0.0;
  for (double a : c.adiabaticity) {
    const double eps = c.gap * c.gap / a;
    const double tmax = c.sweep_extent * c.gap / eps;
    const auto nt = Eigen::Index(std::ceil(2.0 * tmax / c.dt)) + 1;
    const TimeGrid g(-tmax, tmax, nt);
    const auto rabi = ControlField::constant(g, c.gap);
    const auto det = ControlField::from_function(g, [&](double x) { return eps * x; });
    const auto psi0 = QuantumState::ket(detail::tls_ground(c.gap, -eps * tmax));
    const auto bare = track(b.invariants, propagate_ket(h, {rabi, det, ControlField::zeros(g)}, g, psi0));
    const double pd = 1.0 - std::norm(detail::tls_ground(c.gap, eps * tmax).dot(bare.final().ket_vector()));
    const double pf = std::exp(-kPi * c.gap * c.gap / (2.0 * eps));
    const double rel = std::abs(pd - pf) / pf;
    worst_rel = std::max(worst_rel, rel);
    nlohmann::json cd_inf = nullptr;
    if (c.counterdiabatic) {
      const auto cd = counterdiabatic_tls(rabi, det, ControlField::zeros(g), ControlField::constant(g, eps));
      const auto tr = track(b.invariants, propagate_ket(h, {rabi, det, cd}, g, psi0));
      double w = 0.0;
      for (Eigen::Index k = 0; k < g.nt(); ++k) {
        const double f = std::norm(detail::tls_ground(c.gap, eps * g.t(k)).dot(tr.states[std::size_t(k)].ket_vector()));
        w = std::max(w, 1.0 - f);
      }
      worst_cd = std::max(worst_cd, w);
      cd_inf = w;
    }
    t.add({a, eps, 2.0 * tmax, pd, pf, rel, cd_inf});
    ctx.info("landau_zener: g^2/eps = " + format_number(a) + ", P_d = " + format_number(pd));
  }
  b.tables["landau_zener"] = std::move(t);
  b.results = {{"max_rel_error", worst_rel}, {"rates", c.adiabaticity.size()}};
  if (c.counterdiabatic) b.results["max_cd_infidelity"] = worst_cd;
  return b;
}

// ---- stirap ----------------------------------------------------------------

struct StirapConfig {
  TimeGrid grid;
  double rabi_max = 0.0, sigma = 0.0, delay = 0.0, gamma = 0.0, delta1 = 0.0;
};

inline StirapConfig parse_stirap(const nlohmann::json& cfg) {
  using namespace config;
  allow_sections(cfg, {"grid", "params"}, "stirap");
  const json p = at(cfg, "params", "stirap");
  check_keys(p, {"rabi_max", "sigma", "delay", "gamma", "delta1"}, "params");
  StirapConfig c;
  c.grid = grid(at(cfg, "grid", "stirap"));
  c.rabi_max = number(p, "rabi_max", "params");
  c.sigma = number(p, "sigma", "params");
  c.delay = number(p, "delay", "params");
  c.gamma = number_or(p, "gamma", 0.0, "params");
  c.delta1 = number_or(p, "delta1", 0.0, "params");
  if (!(c.sigma > 0.0) || c.gamma < 0.0 || c.delay < 0.0) fail("params", "need sigma > 0, gamma >= 0, delay >= 0");
  return c;
}

namespace detail {

/// Resonant ladder |1>,|2>,|3> plus a sink |4>; |2> decays into the sink
/// at rate gamma.
inline Liouvillian stirap_model(const StirapConfig& c) {
  const auto z = ControlField::zeros(c.grid);
  const auto sys = rwa_three_level({Eigen::Vector3d(0.0, 1.0, 2.0), z, z, 1.0 + c.delta1, 1.0 - c.delta1});
  CMatrix e = CMatrix::Zero(4, 3);
  e.topRows(3).setIdentity();
  auto lift = [&](const Operator& o) { return Operator(e * o.matrix() * e.adjoint()); };
  std::vector<Coupling> cs;
  for (const auto& x : sys.h.couplings()) cs.push_back({lift(x.op), x.control});
  const ControlledHamiltonian h(lift(sys.h.drift()), cs);
  return Liouvillian(h, {std::sqrt(c.gamma) * transition(4, 3, 1)});
}

}  // namespace detail

/// Counterintuitive (Stokes first) and intuitive orderings of the same two
/// Gaussian pulses.
inline ResultBundle run_stirap(const StirapConfig& c, const RunContext&) {
  ResultBundle b;
  b.scenario = "stirap";
  const Liouvillian l = detail::stirap_model(c);
  const double tc = 0.5 * (c.grid.t0() + c.grid.tf());
  auto pulse = [&](double center) {
    ControlField f = gaussian_shape(c.grid, center, c.sigma);
    f.samples() *= c.rabi_max;
    return f;
  };
  const auto rho0 = QuantumState::density(projector(4, 0).matrix());
  Table t;
  t.columns = {"ordering", "P1", "P2", "P3", "P_loss", "peak_P2"};
  for (const bool counter : {true, false}) {
    const auto pump = pulse(counter ? tc + 0.5 * c.delay : tc - 0.5 * c.delay);
    const auto stokes = pulse(counter ? tc - 0.5 * c.delay : tc + 0.5 * c.delay);
    auto tr = track(b.invariants, propagate_density(l, {pump, stokes}, c.grid, rho0));
    double peak = 0.0;
    for (const auto& s : tr.states) peak = std::max(peak, s.populations()(1));
    const RVector p = tr.final().populations();
    const std::string name = counter ? "counterintuitive" : "intuitive";
    t.add({name, p(0), p(1), p(2), p(3), peak});
    b.results["p3_" + name] = p(2);
    b.results["peak_p2_" + name] = peak;
    if (counter) {
      b.trajectory = std::move(tr);
      b.fields = {pump, stokes};
      // counterdiabatic coupling between |1> and |3> is the mixing-angle
      // rate, tan(theta) = Omega_P / Omega_S; reported only
      RVector th(c.grid.n_mid());
      for (Eigen::Index k = 0; k < th.size(); ++k) th(k) = std::atan2(pump[k], stokes[k]);
      b.results["cd_peak_coupling"] = ControlField(c.grid, th).derivative().samples().cwiseAbs().maxCoeff();
    }
  }
  b.tables["stirap"] = std::move(t);
  return b;
}

// ---- bichromatic -----------------------------------------------------------

struct BichromaticConfig {
  TimeGrid grid;
  Eigen::Vector3d energies = Eigen::Vector3d::Zero();
  double d1 = 1.0, d2 = 1.0, e0 = 0.01, sigma = 1.0;
  cplx c1 = 1.0, c2 = 1.0;
  int n_phi = 16;
};

inline BichromaticConfig parse_bichromatic(const nlohmann::json& cfg) {
  using namespace config;
  allow_sections(cfg, {"grid", "params"}, "bichromatic");
  const json p = at(cfg, "params", "bichromatic");
  check_keys(p, {"energies", "dipoles", "amplitudes", "field_amplitude", "sigma", "n_phi"}, "params");
  BichromaticConfig c;
  c.grid = grid(at(cfg, "grid", "bichromatic"));
  const auto e = numbers(p, "energies", "params");
  const auto d = numbers(p, "dipoles", "params");
  if (e.size() != 3 || d.size() != 2) fail("params", "energies has 3 entries, dipoles 2");
  c.energies = Eigen::Vector3d(e[0], e[1], e[2]);
  c.d1 = d[0];
  c.d2 = d[1];
  const json& a = at(p, "amplitudes", "params");
  if (!a.is_array() || a.size() != 2) fail("params", "amplitudes is [c1, c2]");
  c.c1 = complex_number(a[0], "params");
  c.c2 = complex_number(a[1], "params");
  if (std::abs(std::norm(c.c1) + std::norm(c.c2) - 1.0) > 1e-9) fail("params", "amplitudes must be normalized");
  c.e0 = number(p, "field_amplitude", "params");
  c.sigma = number(p, "sigma", "params");
  c.n_phi = int(integer_or(p, "n_phi", 16, "params"));
  if (c.n_phi < 2 || !(c.sigma > 0.0)) fail("params", "need n_phi >= 2 and sigma > 0");
  return c;
}

/// Lab-frame Lambda system |1>,|2> -> |f> under a weak two-colour Gaussian
/// pulse centred at t = 0; P_f against the relative phase of the colours.
/// c1, c2 are interaction-picture amplitudes at the start of the grid.
inline ResultBundle run_bichromatic(const BichromaticConfig& c, const RunContext&) {
  ResultBundle b;
  b.scenario = "bichromatic";
  const auto& e = c.energies;
  CMatrix dip = CMatrix::Zero(3, 3);
  dip(2, 0) = dip(0, 2) = c.d1;
  dip(2, 1) = dip(1, 2) = c.d2;
  const ControlledHamiltonian h(diagonal(RVector(e)), {{Operator(dip), 0}});
  CVector psi(3);
  psi << c.c1 * std::exp(-kI * e(0) * c.grid.t0()), c.c2 * std::exp(-kI * e(1) * c.grid.t0()), 0.0;
  const auto psi0 = QuantumState::ket(psi);
  Table t;
  t.columns = {"phi", "p_f", "p_f_formula"};
  std::vector<double> sim, ref;
  for (int k = 0; k < c.n_phi; ++k) {
    const double phi = 2.0 * kPi * k / c.n_phi;
    const auto u = ControlField::from_function(c.grid, [&](double x) {
      return c.e0 * std::exp(-x * x / (2.0 * c.sigma * c.sigma)) *
             (std::cos((e(2) - e(0)) * x) + std::cos((e(2) - e(1)) * x + phi));
    });
    auto tr = track(b.invariants, propagate_ket(h, {u}, c.grid, psi0));
    sim.push_back(tr.final().populations()(2));
    ref.push_back(bichromatic_population(c.d1, c.d2, c.c1, c.c2, phi));
    t.add({phi, sim.back(), ref.back()});
    if (k == 0) {
      b.trajectory = std::move(tr);
      b.fields = {u};
    }
  }
  // formula is first order with an arbitrary overall scale; compare shapes
  const auto [lo, hi] = std::minmax_element(sim.begin(), sim.end());
  const double vs = (*hi - *lo) / (*hi + *lo);
  const double vr = bichromatic_visibility(c.d1, c.d2, c.c1, c.c2);
  const double ms = std::accumulate(sim.begin(), sim.end(), 0.0) / double(sim.size());
  const double mr = std::accumulate(ref.begin(), ref.end(), 0.0) / double(ref.size());
  double shape_dev = 0.0;
  for (std::size_t k = 0; k < sim.size(); ++k) shape_dev = std::max(shape_dev, std::abs(sim[k] / ms - ref[k] / mr));
  b.tables["bichromatic"] = std::move(t);
  b.results = {{"visibility", vs},
               {"visibility_formula", vr},
               {"visibility_rel_error", vr > 0.0 ? std::abs(vs - vr) / vr : std::abs(vs)},
               {"normalized_shape_deviation", shape_dev}};
  return b;
}

}  // namespace qoc
