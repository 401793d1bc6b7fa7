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

#include "qoc/core/state.hpp"

namespace qoc {

/// tr(rho_a rho_b).
inline double hilbert_schmidt_overlap(const QuantumState& a,
                                      const QuantumState& b) {
  require_same_dim(a.dim(), b.dim(), "hilbert_schmidt_overlap");
  return (a.rho() * b.rho()).trace().real();
}

/// 1/2 tr((rho_a - rho_b)^2).
inline double hilbert_schmidt_distance(const QuantumState& a,
                                       const QuantumState& b) {
  require_same_dim(a.dim(), b.dim(), "hilbert_schmidt_distance");
  const CMatrix d = a.rho() - b.rho();
  return 0.5 * (d * d).trace().real();
}

/// tr(rho^2); accepts kets (always 1).
inline double purity(const QuantumState& s) {
  if (s.is_ket()) return s.ket_vector().squaredNorm() *
                         s.ket_vector().squaredNorm();
  return (s.rho() * s.rho()).trace().real();
}

inline double purity(const CMatrix& rho) { return (rho * rho).trace().real(); }

/// <psi|A|psi> or tr(A rho).
inline cplx expectation_complex(const Operator& op, const QuantumState& s) {
  require_same_dim(op.dim(), s.dim(), "expectation");
  if (s.is_ket()) {
    return s.ket_vector().dot(op.matrix() * s.ket_vector());
  }
  return (op.matrix() * s.rho()).trace();
}

/// Real expectation value; for a Hermitian `op` the imaginary part is
/// round-off and dropped.
inline double expectation(const Operator& op, const QuantumState& s) {
  return expectation_complex(op, s).real();
}

/// Partial trace over the second factor of a (da x db) bipartite matrix.
inline CMatrix partial_trace_second(const CMatrix& rho, Eigen::Index da,
                                    Eigen::Index db) {
  CMatrix out = CMatrix::Zero(da, da);
  for (Eigen::Index i = 0; i < da; ++i)
    for (Eigen::Index j = 0; j < da; ++j)
      for (Eigen::Index k = 0; k < db; ++k)
        out(i, j) += rho(i * db + k, j * db + k);
  return out;
}

inline CMatrix partial_trace_first(const CMatrix& rho, Eigen::Index da,
                                   Eigen::Index db) {
  CMatrix out = CMatrix::Zero(db, db);
  for (Eigen::Index i = 0; i < db; ++i)
    for (Eigen::Index j = 0; j < db; ++j)
      for (Eigen::Index k = 0; k < da; ++k)
        out(i, j) += rho(k * db + i, k * db + j);
  return out;
}

}  // namespace qoc
