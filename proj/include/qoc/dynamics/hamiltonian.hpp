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
#include <string>
#include <utility>
#include <vector>

#include "qoc/core/operator.hpp"
#include "qoc/dynamics/time_grid.hpp"

namespace qoc {

struct Coupling {
  Operator op;
  int control = 0;
};

/// H(t) = H0 + sum_j u_{c_j}(t) H_j. Several couplings may share a control.
class ControlledHamiltonian {
 public:
  ControlledHamiltonian() = default;
  explicit ControlledHamiltonian(Operator drift,
                                 std::vector<Coupling> couplings = {})
      : drift_(std::move(drift)), couplings_(std::move(couplings)) {
    int max_index = -1;
    for (const auto& c : couplings_) {
      require_same_dim(c.op.dim(), drift_.dim(), "ControlledHamiltonian");
      if (c.control < 0) {
        throw Error(ErrorCode::invalid_argument, "negative control index");
      }
      max_index = std::max(max_index, c.control);
    }
    n_controls_ = max_index + 1;
    for (int j = 0; j < n_controls_; ++j) {
      const bool used = std::any_of(couplings_.begin(), couplings_.end(),
                                    [&](const Coupling& c) { return c.control == j; });
      if (!used) {
        throw Error(ErrorCode::invalid_argument,
                    "control indices must be contiguous from 0");
      }
    }
  }

  const Operator& drift() const noexcept { return drift_; }
  const std::vector<Coupling>& couplings() const noexcept { return couplings_; }
  Eigen::Index dim() const noexcept { return drift_.dim(); }
  int n_controls() const noexcept { return n_controls_; }

  /// Sum of the coupling operators attached to control j.
  CMatrix control_operator(int j) const {
    CMatrix m = CMatrix::Zero(dim(), dim());
    for (const auto& c : couplings_)
      if (c.control == j) m += c.op.matrix();
    return m;
  }

  CMatrix at(const RVector& u) const {
    if (u.size() != n_controls_) {
      throw Error(ErrorCode::dimension_mismatch, "control vector size");
    }
    CMatrix h = drift_.matrix();
    for (const auto& c : couplings_) h += u(c.control) * c.op.matrix();
    return h;
  }

  bool is_hermitian() const {
    if (!drift_.is_hermitian()) return false;
    return std::all_of(couplings_.begin(), couplings_.end(),
                       [](const Coupling& c) { return c.op.is_hermitian(); });
  }

 private:
  Operator drift_;
  std::vector<Coupling> couplings_;
  int n_controls_ = 0;
};

/// Control values at midpoint k, one per control.
inline RVector controls_at(const std::vector<ControlField>& fields,
                           Eigen::Index k) {
  RVector u(static_cast<Eigen::Index>(fields.size()));
  for (std::size_t j = 0; j < fields.size(); ++j)
    u(static_cast<Eigen::Index>(j)) = fields[j][k];
  return u;
}

inline void check_controls(const ControlledHamiltonian& h,
                           const std::vector<ControlField>& fields,
                           const TimeGrid& grid) {
  if (static_cast<int>(fields.size()) != h.n_controls()) {
    throw Error(ErrorCode::invalid_argument,
                "expected " + std::to_string(h.n_controls()) +
                    " control fields, got " + std::to_string(fields.size()));
  }
  for (const auto& f : fields) {
    if (!(f.grid() == grid)) {
      throw Error(ErrorCode::invalid_argument, "control field grid mismatch");
    }
  }
}

// Superoperators act on column-stacked vec(rho): vec(A X B) = (B^T (x) A) vec X.

inline CMatrix left_super(const CMatrix& a) {
  return kron(CMatrix::Identity(a.rows(), a.cols()), a);
}
inline CMatrix right_super(const CMatrix& b) {
  return kron(b.transpose(), CMatrix::Identity(b.rows(), b.cols()));
}

/// -i[H, .]
inline CMatrix commutator_super(const CMatrix& h) {
  return -kI * (left_super(h) - right_super(h));
}

/// L . L^dag - 1/2 {L^dag L, .}
inline CMatrix dissipator_super(const CMatrix& l) {
  const CMatrix ldl = l.adjoint() * l;
  return kron(l.conjugate(), l) - 0.5 * left_super(ldl) - 0.5 * right_super(ldl);
}

inline CVector vec(const CMatrix& m) {
  return Eigen::Map<const CVector>(m.data(), m.size());
}

inline CMatrix unvec(const CVector& v, Eigen::Index n) {
  return Eigen::Map<const CMatrix>(v.data(), n, n);
}

/// GKLS generator: d rho/dt = -i[H(t), rho] + sum_a D[L_a] rho.
/// Jump operators are time independent (drive-dependent dissipation is not
/// modeled).
class Liouvillian {
 public:
  Liouvillian() = default;
  Liouvillian(ControlledHamiltonian h, std::vector<Operator> jumps)
      : h_(std::move(h)), jumps_(std::move(jumps)) {
    const Eigen::Index n = h_.dim();
    drift_ = commutator_super(h_.drift().matrix());
    for (const auto& l : jumps_) {
      require_same_dim(l.dim(), n, "Liouvillian jump operator");
      drift_ += dissipator_super(l.matrix());
    }
    for (int j = 0; j < h_.n_controls(); ++j)
      controls_.push_back(commutator_super(h_.control_operator(j)));
  }

  const ControlledHamiltonian& hamiltonian() const noexcept { return h_; }
  const std::vector<Operator>& jumps() const noexcept { return jumps_; }
  Eigen::Index dim() const noexcept { return h_.dim(); }
  int n_controls() const noexcept { return h_.n_controls(); }

  const CMatrix& drift_super() const noexcept { return drift_; }
  const CMatrix& control_super(int j) const { return controls_.at(std::size_t(j)); }

  CMatrix generator(const RVector& u) const {
    CMatrix g = drift_;
    for (int j = 0; j < n_controls(); ++j) g += u(j) * controls_[std::size_t(j)];
    return g;
  }

 private:
  ControlledHamiltonian h_;
  std::vector<Operator> jumps_;
  CMatrix drift_;
  std::vector<CMatrix> controls_;
};

}  // namespace qoc
