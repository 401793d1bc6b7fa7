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
#include <limits>
#include <numeric>
#include <optional>
#include <vector>

#include <Eigen/Eigenvalues>

#include "qoc/dynamics/hamiltonian.hpp"
#include "qoc/dynamics/propagate.hpp"

namespace qoc {

/// Instantaneous eigensystem on a sequence of times (the control midpoints
/// when built from a ControlledHamiltonian).
///
/// Column n of eigenvectors[k] follows one dressed state through the grid:
/// at step 0 the states are sorted by energy, afterwards each column is
/// matched to the predecessor with maximal overlap and its phase is fixed so
/// that <phi_n(t_k)|phi_n(t_{k+1})> is real and positive. eigenvalues[k] is
/// permuted the same way; away from level crossings it stays ascending.
struct DressedFrame {
  std::vector<double> times;
  double dt = 0.0;
  std::vector<RVector> eigenvalues;
  std::vector<CMatrix> eigenvectors;
  /// Steps where tracking is unreliable: successive overlap < 0.9 or
  /// smallest gap < 1e-10 ||H||.
  std::vector<Eigen::Index> flagged;
  /// smallest successive overlap seen
  double min_overlap = 1.0;

  std::size_t size() const { return times.size(); }
  bool ok() const { return flagged.empty(); }
};

inline DressedFrame dressed_frame(const std::vector<CMatrix>& hs,
                                  const std::vector<double>& times) {
  if (hs.size() != times.size() || hs.empty()) {
    throw Error(ErrorCode::invalid_argument, "dressed_frame: need one H per time");
  }
  DressedFrame f;
  f.times = times;
  f.dt = times.size() > 1 ? times[1] - times[0] : 0.0;
  const Eigen::Index n = hs.front().rows();
  for (std::size_t k = 0; k < hs.size(); ++k) {
    if (hermiticity_defect(hs[k]) > 1e-10 * std::max(1.0, hs[k].norm())) {
      throw Error(ErrorCode::invalid_argument, "dressed_frame: H not Hermitian");
    }
    Eigen::SelfAdjointEigenSolver<CMatrix> es(hs[k]);
    RVector w = es.eigenvalues();
    CMatrix v = es.eigenvectors();
    const double scale = std::max(hs[k].norm(), std::numeric_limits<double>::min());
    bool flag = false;
    for (Eigen::Index i = 0; i + 1 < n; ++i)
      if (w(i + 1) - w(i) <= 1e-10 * scale) flag = true;

    if (k > 0) {
      const CMatrix& prev = f.eigenvectors.back();
      const RMatrix ov = (prev.adjoint() * v).cwiseAbs();
      // greedy assignment by largest overlap
      std::vector<Eigen::Index> perm(std::size_t(n), -1);
      std::vector<bool> used_prev(std::size_t(n), false), used_new(std::size_t(n), false);
      for (Eigen::Index step = 0; step < n; ++step) {
        double best = -1.0;
        Eigen::Index bi = 0, bj = 0;
        for (Eigen::Index i = 0; i < n; ++i) {
          if (used_prev[std::size_t(i)]) continue;
          for (Eigen::Index j = 0; j < n; ++j) {
            if (used_new[std::size_t(j)]) continue;
            if (ov(i, j) > best) { best = ov(i, j); bi = i; bj = j; }
          }
        }
        perm[std::size_t(bi)] = bj;
        used_prev[std::size_t(bi)] = true;
        used_new[std::size_t(bj)] = true;
        f.min_overlap = std::min(f.min_overlap, best);
        if (best < 0.9) flag = true;
      }
      CMatrix vs(n, n);
      RVector ws(n);
      for (Eigen::Index i = 0; i < n; ++i) {
        const Eigen::Index j = perm[std::size_t(i)];
        CVector col = v.col(j);
        const cplx o = prev.col(i).dot(col);
        if (std::abs(o) > 0.0) col *= std::conj(o) / std::abs(o);
        vs.col(i) = col;
        ws(i) = w(j);
      }
      v = vs;
      w = ws;
    }
    if (flag) f.flagged.push_back(Eigen::Index(k));
    f.eigenvalues.push_back(w);
    f.eigenvectors.push_back(v);
  }
  return f;
}

inline DressedFrame dressed_frame(const ControlledHamiltonian& h,
                                  const std::vector<ControlField>& controls,
                                  const TimeGrid& grid) {
  if (!h.is_hermitian()) {
    throw Error(ErrorCode::invalid_argument, "dressed_frame: generators must be Hermitian");
  }
  std::vector<double> times(std::size_t(grid.n_mid()));
  for (Eigen::Index k = 0; k < grid.n_mid(); ++k) times[std::size_t(k)] = grid.mid(k);
  return dressed_frame(hamiltonian_sequence(h, controls, grid), times);
}

/// Mixing angles of a two-level Hamiltonian, tan theta = 2|W| / (E_a - E_b)
/// with E_a = H_00, E_b = H_11, W = H_01 and phi = arg W.
struct MixingAngles {
  ControlField theta;
  ControlField phi;
};

inline MixingAngles mixing_angles(const ControlledHamiltonian& h,
                                  const std::vector<ControlField>& controls,
                                  const TimeGrid& grid) {
  if (h.dim() != 2) throw Error(ErrorCode::dimension_mismatch, "mixing_angles: two-level only");
  const auto hs = hamiltonian_sequence(h, controls, grid);
  RVector th(grid.n_mid()), ph(grid.n_mid());
  for (Eigen::Index k = 0; k < grid.n_mid(); ++k) {
    const CMatrix& m = hs[std::size_t(k)];
    th(k) = std::atan2(2.0 * std::abs(m(0, 1)), (m(0, 0) - m(1, 1)).real());
    ph(k) = std::arg(m(0, 1));
  }
  return {ControlField(grid, th), ControlField(grid, ph)};
}

/// Mixing angle for H = -1/2 (Delta sigma_z + Omega0 sigma_x):
/// theta = atan2(Omega0, Delta).
inline ControlField mixing_angle_tls(const ControlField& rabi, const ControlField& detuning) {
  RVector th(rabi.size());
  for (Eigen::Index k = 0; k < rabi.size(); ++k) th(k) = std::atan2(rabi[k], detuning[k]);
  return ControlField(rabi.grid(), th);
}

/// d theta/dt = (Delta dOmega0/dt - Omega0 dDelta/dt) / (Omega0^2 + Delta^2).
/// Without analytic derivatives the fields are differentiated numerically.
inline ControlField theta_dot_tls(const ControlField& rabi, const ControlField& detuning,
                                  const std::optional<ControlField>& rabi_dot = std::nullopt,
                                  const std::optional<ControlField>& detuning_dot = std::nullopt) {
  if (!(rabi.grid() == detuning.grid())) {
    throw Error(ErrorCode::invalid_argument, "rabi and detuning grids differ");
  }
  const ControlField rd = rabi_dot ? *rabi_dot : rabi.derivative();
  const ControlField dd = detuning_dot ? *detuning_dot : detuning.derivative();
  RVector out(rabi.size());
  for (Eigen::Index k = 0; k < rabi.size(); ++k) {
    const double o2 = rabi[k] * rabi[k] + detuning[k] * detuning[k];
    out(k) = o2 > 0.0 ? (detuning[k] * rd[k] - rabi[k] * dd[k]) / o2 : 0.0;
  }
  return ControlField(rabi.grid(), out);
}

/// 1/2 |d theta/dt| / |E_+ - E_-| per sample; infinity at zero gap.
inline ControlField adiabaticity_margin(const DressedFrame& frame, const ControlField& theta_dot) {
  if (static_cast<Eigen::Index>(frame.size()) != theta_dot.size()) {
    throw Error(ErrorCode::dimension_mismatch, "adiabaticity_margin: sample count");
  }
  RVector r(theta_dot.size());
  for (Eigen::Index k = 0; k < r.size(); ++k) {
    const RVector& w = frame.eigenvalues[std::size_t(k)];
    if (w.size() != 2) throw Error(ErrorCode::dimension_mismatch, "adiabaticity_margin: two-level only");
    const double gap = std::abs(w(1) - w(0));
    const double num = 0.5 * std::abs(theta_dot[k]);
    r(k) = gap > 0.0 ? num / gap : (num == 0.0 ? 0.0 : std::numeric_limits<double>::infinity());
  }
  return ControlField(theta_dot.grid(), r);
}

inline ControlField adiabaticity_margin(const DressedFrame& frame, const MixingAngles& angles) {
  return adiabaticity_margin(frame, angles.theta.derivative());
}

}  // namespace qoc
