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

#include <numeric>
#include <vector>

#include "qoc/core/state.hpp"

namespace qoc {

inline double unitarity_defect(const CMatrix& u) {
  return (u.adjoint() * u - CMatrix::Identity(u.cols(), u.cols())).cwiseAbs().maxCoeff();
}

inline void require_unitary(const CMatrix& u, const char* context) {
  if (u.rows() != u.cols() || unitarity_defect(u) > tol::unitary) {
    throw Error(ErrorCode::not_unitary, std::string(context) + ": operator is not unitary");
  }
}

/// |<target|final>|^2; 1 at the optimum.
inline double j_state_to_state(const QuantumState& final_state, const QuantumState& target) {
  require_same_dim(final_state.dim(), target.dim(), "j_state_to_state");
  return std::norm(target.ket_vector().dot(final_state.ket_vector()));
}

/// Logical subspace spanned by a subset of basis states of the full space.
struct LogicalSubspace {
  Eigen::Index full_dim = 0;
  std::vector<Eigen::Index> basis;

  static LogicalSubspace whole(Eigen::Index n) {
    LogicalSubspace s{n, std::vector<Eigen::Index>(std::size_t(n))};
    std::iota(s.basis.begin(), s.basis.end(), Eigen::Index(0));
    return s;
  }

  Eigen::Index dim() const { return Eigen::Index(basis.size()); }

  /// full_dim x dim isometry E with P = E E^dag.
  CMatrix embedding() const {
    CMatrix e = CMatrix::Zero(full_dim, dim());
    for (std::size_t k = 0; k < basis.size(); ++k) e(basis[k], Eigen::Index(k)) = 1.0;
    return e;
  }

  CMatrix projector() const {
    const CMatrix e = embedding();
    return e * e.adjoint();
  }

  /// Restriction E^dag U E of a full-space operator.
  CMatrix restrict(const CMatrix& u) const {
    const CMatrix e = embedding();
    return e.adjoint() * u * e;
  }
};

/// 1 - (1/N) Re tr(O^dag P U P). Phase sensitive; 0 iff U acts as O on the
/// subspace. With phase_sensitive = false: 1 - |tr(O^dag P U P)|^2 / N^2.
inline double j_gate(const CMatrix& realized, const CMatrix& gate, const LogicalSubspace& sub,
                     bool phase_sensitive = true) {
  require_unitary(gate, "j_gate");
  require_same_dim(realized.rows(), sub.full_dim, "j_gate realized");
  require_same_dim(gate.rows(), sub.dim(), "j_gate gate");
  const cplx tau = (gate.adjoint() * sub.restrict(realized)).trace();
  const double n = double(sub.dim());
  if (phase_sensitive) return 1.0 - tau.real() / n;
  return 1.0 - std::norm(tau) / (n * n);
}

inline double j_gate(const CMatrix& realized, const CMatrix& gate, bool phase_sensitive = true) {
  return j_gate(realized, gate, LogicalSubspace::whole(realized.rows()), phase_sensitive);
}

}  // namespace qoc
