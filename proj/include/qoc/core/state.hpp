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
#include <string>
#include <utility>

#include <Eigen/Eigenvalues>

#include "qoc/core/operator.hpp"

namespace qoc {

enum class StateKind { ket, density };

/// Smallest eigenvalue of the Hermitian part of `rho`.
inline double min_eigenvalue(const CMatrix& rho) {
  const CMatrix h = 0.5 * (rho + rho.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

/// A pure state |psi> or a density matrix rho.
///
/// The checked factories enforce the physical invariants (unit norm; unit
/// trace, Hermiticity and positivity up to tol::positivity). Propagators use
/// `unchecked` so that drift can be measured rather than rejected.
class QuantumState {
 public:
  static QuantumState ket(CVector psi) {
    if (psi.size() == 0) {
      throw Error(ErrorCode::invalid_state, "ket: empty vector");
    }
    const double n = psi.norm();
    if (std::abs(n - 1.0) > tol::ket_norm) {
      throw Error(ErrorCode::invalid_state,
                  "ket: norm " + std::to_string(n) + " differs from 1");
    }
    return QuantumState(StateKind::ket, std::move(psi), {});
  }

  /// Normalizes `psi` before wrapping it.
  static QuantumState normalized_ket(const CVector& psi) {
    const double n = psi.norm();
    if (n == 0.0) throw Error(ErrorCode::invalid_state, "ket: zero vector");
    return QuantumState(StateKind::ket, psi / n, {});
  }

  static QuantumState basis(Eigen::Index dim, Eigen::Index k) {
    CVector v = CVector::Zero(dim);
    v(k) = 1.0;
    return QuantumState(StateKind::ket, std::move(v), {});
  }

  static QuantumState density(CMatrix rho) {
    if (rho.rows() != rho.cols() || rho.rows() == 0) {
      throw Error(ErrorCode::invalid_state, "density: not square");
    }
    if (hermiticity_defect(rho) > tol::hermitian) {
      throw Error(ErrorCode::invalid_state, "density: not Hermitian");
    }
    if (std::abs(rho.trace() - cplx(1.0)) > tol::trace) {
      throw Error(ErrorCode::invalid_state, "density: trace differs from 1");
    }
    if (min_eigenvalue(rho) < -tol::positivity) {
      throw Error(ErrorCode::invalid_state, "density: negative eigenvalue");
    }
    return QuantumState(StateKind::density, {}, std::move(rho));
  }

  static QuantumState maximally_mixed(Eigen::Index dim) {
    return QuantumState(StateKind::density, {},
                        CMatrix::Identity(dim, dim) / double(dim));
  }

  static QuantumState unchecked_ket(CVector psi) {
    return QuantumState(StateKind::ket, std::move(psi), {});
  }
  static QuantumState unchecked_density(CMatrix rho) {
    return QuantumState(StateKind::density, {}, std::move(rho));
  }

  StateKind kind() const noexcept { return kind_; }
  bool is_ket() const noexcept { return kind_ == StateKind::ket; }
  bool is_density() const noexcept { return kind_ == StateKind::density; }

  Eigen::Index dim() const noexcept {
    return is_ket() ? ket_.size() : rho_.rows();
  }

  const CVector& ket_vector() const {
    if (!is_ket()) throw Error(ErrorCode::invalid_state, "not a ket");
    return ket_;
  }

  /// Density matrix; a ket is lifted to |psi><psi|.
  CMatrix density_matrix() const {
    if (is_ket()) return ket_ * ket_.adjoint();
    return rho_;
  }

  const CMatrix& rho() const {
    if (!is_density()) {
      throw Error(ErrorCode::convert_first,
                  "density variant required; convert the ket first");
    }
    return rho_;
  }

  QuantumState to_density() const {
    return QuantumState(StateKind::density, {}, density_matrix());
  }

  /// Diagonal of the density matrix.
  RVector populations() const {
    if (is_ket()) return ket_.cwiseAbs2();
    return rho_.diagonal().real();
  }

  /// |norm - 1| for kets, |tr - 1| for densities.
  double normalization_defect() const {
    if (is_ket()) return std::abs(ket_.norm() - 1.0);
    return std::abs(rho_.trace() - cplx(1.0));
  }

 private:
  QuantumState(StateKind k, CVector psi, CMatrix rho)
      : kind_(k), ket_(std::move(psi)), rho_(std::move(rho)) {}

  StateKind kind_;
  CVector ket_;
  CMatrix rho_;
};

}  // namespace qoc
