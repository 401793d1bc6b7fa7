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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qoc/dynamics/hamiltonian.hpp"
#include "qoc/dynamics/propagate.hpp"

namespace qoc {

/// Frame in which a driven two-level system is written.
///   lab:           no transformation, full carrier
///   drift:         rotating at omega0
///   carrier:       rotating at omegaL (default; static detuning)
///   instantaneous: rotating at omegaL t + phi(t)
enum class Frame { lab, drift, carrier, instantaneous };

inline std::string_view to_string(Frame f) {
  switch (f) {
    case Frame::lab: return "lab";
    case Frame::drift: return "drift";
    case Frame::carrier: return "carrier";
    case Frame::instantaneous: return "instantaneous";
  }
  return "carrier";
}

inline Frame frame_from_string(std::string_view s) {
  if (s == "lab") return Frame::lab;
  if (s == "drift") return Frame::drift;
  if (s == "carrier") return Frame::carrier;
  if (s == "instantaneous") return Frame::instantaneous;
  throw Error(ErrorCode::schema, "unknown frame '" + std::string(s) + "'");
}

using PhaseFunction = std::function<RVector(double)>;

/// H'(t) = U^dag H U - i U^dag dU/dt with U = diag(exp(-i theta(t))), which
/// reduces to U^dag H U - diag(theta_dot). Evaluated at the midpoints.
inline std::vector<CMatrix> rotating_frame(const std::vector<CMatrix>& h_mid,
                                           const TimeGrid& grid,
                                           const PhaseFunction& theta,
                                           const PhaseFunction& theta_dot) {
  if (!theta_dot) {
    throw Error(ErrorCode::missing_derivative,
                "rotating_frame: analytic derivative of theta is required");
  }
  if (static_cast<Eigen::Index>(h_mid.size()) != grid.n_mid()) {
    throw Error(ErrorCode::invalid_argument, "rotating_frame: one H per midpoint");
  }
  std::vector<CMatrix> out;
  out.reserve(h_mid.size());
  for (Eigen::Index k = 0; k < grid.n_mid(); ++k) {
    const double t = grid.mid(k);
    const RVector th = theta(t);
    const RVector thd = theta_dot(t);
    const CMatrix& h = h_mid[std::size_t(k)];
    require_same_dim(th.size(), h.rows(), "rotating_frame theta");
    CMatrix hp(h.rows(), h.cols());
    for (Eigen::Index a = 0; a < h.rows(); ++a)
      for (Eigen::Index b = 0; b < h.cols(); ++b)
        hp(a, b) = std::exp(kI * (th(a) - th(b))) * h(a, b);
    for (Eigen::Index a = 0; a < h.rows(); ++a) hp(a, a) -= thd(a);
    out.push_back(hp);
  }
  return out;
}

inline std::vector<CMatrix> rotating_frame(const ControlledHamiltonian& h,
                                           const std::vector<ControlField>& controls,
                                           const TimeGrid& grid,
                                           const PhaseFunction& theta,
                                           const PhaseFunction& theta_dot) {
  return rotating_frame(hamiltonian_sequence(h, controls, grid), grid, theta, theta_dot);
}

struct TwoLevelDriveSpec {
  double omega0 = 0.0;
  double omegaL = 0.0;
  double rabi0 = 0.0;
  ControlField shape;
  std::optional<ControlField> phase;

  double detuning() const { return omega0 - omegaL; }
};

struct DrivenSystem {
  ControlledHamiltonian h;
  std::vector<ControlField> controls;
  Frame frame = Frame::carrier;
  /// omega0 / rabi0; the RWA needs this to be large. Reported only.
  double validity_ratio = 0.0;
};

/// Driven two-level system. The lab Hamiltonian is
///   H = omega0/2 sigma_z - rabi0 S(t) cos(omegaL t + phi(t)) sigma_x,
/// and the RWA frames drop the terms at omega0 + omegaL. In the carrier
/// frame this is H = Delta/2 sigma_z - rabi0 S/2 (cos phi sigma_x + sin phi
/// sigma_y) with Delta = omega0 - omegaL.
inline DrivenSystem rwa_two_level(const TwoLevelDriveSpec& spec,
                                  Frame frame = Frame::carrier) {
  const TimeGrid& g = spec.shape.grid();
  for (Eigen::Index k = 0; k < spec.shape.size(); ++k) {
    if (spec.shape[k] < -1e-12 || spec.shape[k] > 1.0 + 1e-12) {
      throw Error(ErrorCode::invalid_argument, "drive shape must lie in [0, 1]");
    }
  }
  if (spec.phase && !(spec.phase->grid() == g)) {
    throw Error(ErrorCode::invalid_argument, "phase field grid mismatch");
  }
  auto phi = [&](Eigen::Index k) { return spec.phase ? (*spec.phase)[k] : 0.0; };
  const double delta = spec.detuning();
  DrivenSystem out;
  out.frame = frame;
  out.validity_ratio =
      spec.rabi0 != 0.0 ? spec.omega0 / std::abs(spec.rabi0) : std::numeric_limits<double>::infinity();

  RVector u1(g.n_mid()), u2(g.n_mid());
  switch (frame) {
    case Frame::lab: {
      for (Eigen::Index k = 0; k < g.n_mid(); ++k)
        u1(k) = -spec.rabi0 * spec.shape[k] * std::cos(spec.omegaL * g.mid(k) + phi(k));
      out.h = ControlledHamiltonian(0.5 * spec.omega0 * pauli::z(), {{pauli::x(), 0}});
      out.controls = {ControlField(g, u1)};
      return out;
    }
    case Frame::drift: {
      // off-diagonal -rabi0 S/2 exp(i(Delta t - phi))
      for (Eigen::Index k = 0; k < g.n_mid(); ++k) {
        const double a = delta * g.mid(k) - phi(k);
        u1(k) = spec.rabi0 * spec.shape[k] * std::cos(a);
        u2(k) = -spec.rabi0 * spec.shape[k] * std::sin(a);
      }
      out.h = ControlledHamiltonian(Operator::zero(2),
                                    {{-0.5 * pauli::x(), 0}, {-0.5 * pauli::y(), 1}});
      out.controls = {ControlField(g, u1), ControlField(g, u2)};
      return out;
    }
    case Frame::carrier: {
      for (Eigen::Index k = 0; k < g.n_mid(); ++k) {
        u1(k) = spec.rabi0 * spec.shape[k] * std::cos(phi(k));
        u2(k) = spec.rabi0 * spec.shape[k] * std::sin(phi(k));
      }
      out.h = ControlledHamiltonian(0.5 * delta * pauli::z(),
                                    {{-0.5 * pauli::x(), 0}, {-0.5 * pauli::y(), 1}});
      out.controls = {ControlField(g, u1), ControlField(g, u2)};
      return out;
    }
    case Frame::instantaneous: {
      // detuning picks up -phi_dot; coupling is real
      const RVector phid = spec.phase ? spec.phase->derivative().samples()
                                      : RVector(RVector::Zero(g.n_mid()));
      for (Eigen::Index k = 0; k < g.n_mid(); ++k) u1(k) = spec.rabi0 * spec.shape[k];
      out.h = ControlledHamiltonian(0.5 * delta * pauli::z(),
                                    {{-0.5 * pauli::x(), 0}, {-0.5 * pauli::z(), 1}});
      out.controls = {ControlField(g, u1), ControlField(g, phid)};
      return out;
    }
  }
  return out;
}

struct ThreeLevelDriveSpec {
  Eigen::Vector3d energies = Eigen::Vector3d::Zero();
  ControlField rabi1;  // couples 1-2 (pump)
  ControlField rabi2;  // couples 2-3 (Stokes)
  double omega1 = 0.0;
  double omega2 = 0.0;

  double w21() const { return energies(1) - energies(0); }
  double w32() const { return energies(2) - energies(1); }
  double w31() const { return energies(2) - energies(0); }
  double delta1() const { return omega1 - w21(); }
  double delta2() const { return omega2 - w32(); }
  /// two-photon detuning; equals -(delta1 + delta2)
  double delta2p() const { return w31() - (omega1 + omega2); }
};

/// Two-photon RWA ladder Hamiltonian in the frame with phases
/// (E1, E1 + w1, E1 + w1 + w2) t:
///   diag(0, -Delta1, Delta2P), off-diagonals Omega1/2, Omega2/2.
/// Controls are (Omega1, Omega2).
inline DrivenSystem rwa_three_level(const ThreeLevelDriveSpec& spec) {
  if (!(spec.rabi1.grid() == spec.rabi2.grid())) {
    throw Error(ErrorCode::invalid_argument, "rabi fields must share a grid");
  }
  RVector d(3);
  d << 0.0, -spec.delta1(), spec.delta2p();
  DrivenSystem out;
  out.frame = Frame::carrier;
  out.h = ControlledHamiltonian(
      diagonal(d),
      {{0.5 * (transition(3, 0, 1) + transition(3, 1, 0)), 0},
       {0.5 * (transition(3, 1, 2) + transition(3, 2, 1)), 1}});
  out.controls = {spec.rabi1, spec.rabi2};
  const double rmax = std::max(spec.rabi1.samples().cwiseAbs().maxCoeff(),
                               spec.rabi2.samples().cwiseAbs().maxCoeff());
  out.validity_ratio = rmax > 0.0 ? std::min(std::abs(spec.omega1), std::abs(spec.omega2)) / rmax
                                  : std::numeric_limits<double>::infinity();
  return out;
}

/// Lab-frame field E0 S(t) cos(omegaL t + alpha t^2) on the midpoints.
/// Refuses grids with fewer than 20 samples per period of the largest
/// instantaneous frequency |omegaL + 2 alpha t|.
inline ControlField chirped_field(double e0, const ControlField& shape, double omegaL,
                                  double alpha, int samples_per_period = 20) {
  const TimeGrid& g = shape.grid();
  const double fmax = std::max(std::abs(omegaL + 2.0 * alpha * g.t0()),
                               std::abs(omegaL + 2.0 * alpha * g.tf()));
  if (fmax > 0.0) {
    const double dt_max = 2.0 * kPi / fmax / samples_per_period;
    if (g.dt() > dt_max) {
      const auto need = static_cast<long long>(std::ceil(g.duration() / dt_max)) + 1;
      throw Error(ErrorCode::under_resolved,
                  "chirped_field: carrier under-resolved, need nt >= " + std::to_string(need));
    }
  }
  RVector s(g.n_mid());
  for (Eigen::Index k = 0; k < g.n_mid(); ++k) {
    const double t = g.mid(k);
    s(k) = e0 * shape[k] * std::cos(omegaL * t + alpha * t * t);
  }
  return ControlField(g, s);
}

}  // namespace qoc
