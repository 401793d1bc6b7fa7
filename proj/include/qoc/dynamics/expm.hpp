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

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/MatrixFunctions>

#include "qoc/core/types.hpp"

namespace qoc {

/// exp(-i H dt) for Hermitian H via eigendecomposition.
inline CMatrix expm_hermitian(const CMatrix& h, double dt) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(h);
  const RVector& w = es.eigenvalues();
  CVector phase(w.size());
  for (Eigen::Index k = 0; k < w.size(); ++k) phase(k) = std::exp(-kI * w(k) * dt);
  return es.eigenvectors() * phase.asDiagonal() * es.eigenvectors().adjoint();
}

/// exp(A) for a general (non-normal) matrix; Pade with scaling and squaring.
inline CMatrix expm(const CMatrix& a) { return a.exp(); }

/// Frechet derivative of exp(-i H dt) along direction B, via the divided
/// differences of f(x) = exp(-i x dt) in the eigenbasis of H.
inline CMatrix expm_hermitian_derivative(const CMatrix& h, const CMatrix& b,
                                         double dt) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(h);
  const RVector& w = es.eigenvalues();
  const CMatrix& v = es.eigenvectors();
  const Eigen::Index n = w.size();
  CMatrix bt = v.adjoint() * b * v;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      // (f(w_i) - f(w_j)) / (w_i - w_j) written as a sinc around the mean
      const double x = 0.5 * (w(i) - w(j)) * dt;
      const double sinc = std::abs(x) < 1e-6 ? 1.0 - x * x / 6.0 : std::sin(x) / x;
      const cplx g = -kI * dt * std::exp(-kI * 0.5 * (w(i) + w(j)) * dt) * sinc;
      bt(i, j) *= g;
    }
  }
  return v * bt * v.adjoint();
}

/// Frechet derivative of exp(A dt) along B: upper-right block of
/// exp([[A, B], [0, A]] dt).
inline CMatrix expm_derivative(const CMatrix& a, const CMatrix& b, double dt) {
  const Eigen::Index n = a.rows();
  CMatrix big = CMatrix::Zero(2 * n, 2 * n);
  big.topLeftCorner(n, n) = a * dt;
  big.bottomRightCorner(n, n) = a * dt;
  big.topRightCorner(n, n) = b * dt;
  const CMatrix e = big.exp();
  return e.topRightCorner(n, n);
}

}  // namespace qoc
