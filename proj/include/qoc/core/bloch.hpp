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

#include "qoc/core/state.hpp"

namespace qoc {

/// Generalized Gell-Mann basis normalized so that tr(A_i A_j) = delta_ij.
///
/// Ordering: all symmetric (j<k) pairs, then all antisymmetric pairs, then
/// the N-1 diagonal elements. For N = 2 this is (sigma_x, sigma_y, sigma_z)
/// divided by sqrt(2).
inline std::vector<CMatrix> gell_mann_basis(Eigen::Index n) {
  std::vector<CMatrix> out;
  out.reserve(static_cast<std::size_t>(n * n - 1));
  const double s = 1.0 / std::sqrt(2.0);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index k = j + 1; k < n; ++k) {
      CMatrix a = CMatrix::Zero(n, n);
      a(j, k) = s;
      a(k, j) = s;
      out.push_back(std::move(a));
    }
  }
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index k = j + 1; k < n; ++k) {
      CMatrix a = CMatrix::Zero(n, n);
      a(j, k) = -kI * s;
      a(k, j) = kI * s;
      out.push_back(std::move(a));
    }
  }
  for (Eigen::Index l = 1; l < n; ++l) {
    CMatrix a = CMatrix::Zero(n, n);
    const double c = 1.0 / std::sqrt(double(l * (l + 1)));
    for (Eigen::Index m = 0; m < l; ++m) a(m, m) = c;
    a(l, l) = -double(l) * c;
    out.push_back(std::move(a));
  }
  return out;
}

/// Real coefficients r_k = tr(rho A_k) in the Gell-Mann basis above, so
/// that rho = 1/N + sum_k r_k A_k. A pure qubit has |r| = 1/sqrt(2) in this
/// normalization; see pauli_bloch_vector for the unit-sphere view.
struct BlochVector {
  Eigen::Index dim = 0;
  RVector components;

  double norm() const { return components.norm(); }
};

inline BlochVector bloch_vector(const QuantumState& rho) {
  const CMatrix& m = rho.rho();
  const auto basis = gell_mann_basis(rho.dim());
  BlochVector out{rho.dim(), RVector(static_cast<Eigen::Index>(basis.size()))};
  for (std::size_t k = 0; k < basis.size(); ++k) {
    out.components(static_cast<Eigen::Index>(k)) =
        (m * basis[k]).trace().real();
  }
  return out;
}

/// Inverse of bloch_vector. No positivity check; use QuantumState::density
/// on the result if one is needed.
inline CMatrix from_bloch(const BlochVector& r) {
  const Eigen::Index n = r.dim;
  if (r.components.size() != n * n - 1) {
    throw Error(ErrorCode::dimension_mismatch, "from_bloch: length != N^2-1");
  }
  const auto basis = gell_mann_basis(n);
  CMatrix rho = CMatrix::Identity(n, n) / double(n);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    rho += r.components(static_cast<Eigen::Index>(k)) * basis[k];
  }
  return rho;
}

/// Qubit Bloch vector (<sigma_x>, <sigma_y>, <sigma_z>); unit length for
/// pure states. Equals sqrt(2) times the orthonormal components.
inline Eigen::Vector3d pauli_bloch_vector(const QuantumState& state) {
  if (state.dim() != 2) {
    throw Error(ErrorCode::dimension_mismatch, "pauli_bloch_vector: N != 2");
  }
  const CMatrix rho = state.density_matrix();
  return {2.0 * rho(0, 1).real(), -2.0 * rho(0, 1).imag(),
          (rho(0, 0) - rho(1, 1)).real()};
}

inline CMatrix from_pauli_bloch(const Eigen::Vector3d& r) {
  CMatrix rho(2, 2);
  rho << 0.5 * (1.0 + r(2)), 0.5 * cplx(r(0), -r(1)),
      0.5 * cplx(r(0), r(1)), 0.5 * (1.0 - r(2));
  return rho;
}

}  // namespace qoc
