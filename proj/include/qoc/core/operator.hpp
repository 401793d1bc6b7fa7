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

#include <utility>

#include "qoc/core/types.hpp"

namespace qoc {

/// Largest entrywise |A - A^dagger|.
inline double hermiticity_defect(const CMatrix& a) {
  if (a.size() == 0) return 0.0;
  return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

/// Dense square operator on a Hilbert space of dimension `dim()`.
///
/// Operators are immutable; the Hermiticity flag is computed once at
/// construction with an absolute entrywise tolerance of tol::hermitian.
class Operator {
 public:
  Operator() = default;

  explicit Operator(CMatrix entries) : m_(std::move(entries)) {
    if (m_.rows() != m_.cols() || m_.rows() == 0) {
      throw Error(ErrorCode::invalid_argument,
                  "Operator: entries must be a non-empty square matrix");
    }
    hermitian_ = hermiticity_defect(m_) <= tol::hermitian;
  }

  static Operator identity(Eigen::Index n) {
    return Operator(CMatrix::Identity(n, n));
  }
  static Operator zero(Eigen::Index n) { return Operator(CMatrix::Zero(n, n)); }

  Eigen::Index dim() const noexcept { return m_.rows(); }
  const CMatrix& matrix() const noexcept { return m_; }
  bool is_hermitian() const noexcept { return hermitian_; }

  cplx operator()(Eigen::Index r, Eigen::Index c) const { return m_(r, c); }

  Operator adjoint() const { return Operator(m_.adjoint()); }

  double norm() const { return m_.norm(); }

  friend Operator operator+(const Operator& a, const Operator& b) {
    require_same_dim(a.dim(), b.dim(), "Operator +");
    return Operator(a.m_ + b.m_);
  }
  friend Operator operator-(const Operator& a, const Operator& b) {
    require_same_dim(a.dim(), b.dim(), "Operator -");
    return Operator(a.m_ - b.m_);
  }
  friend Operator operator*(const Operator& a, const Operator& b) {
    require_same_dim(a.dim(), b.dim(), "Operator *");
    return Operator(a.m_ * b.m_);
  }
  friend Operator operator*(cplx s, const Operator& a) {
    return Operator(s * a.m_);
  }
  friend Operator operator*(double s, const Operator& a) {
    return Operator(s * a.m_);
  }

 private:
  CMatrix m_;
  bool hermitian_ = false;
};

/// Kronecker product a (x) b.
inline CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

inline Operator tensor_product(const Operator& a, const Operator& b) {
  return Operator(kron(a.matrix(), b.matrix()));
}

inline Operator commutator(const Operator& a, const Operator& b) {
  require_same_dim(a.dim(), b.dim(), "commutator");
  return Operator(a.matrix() * b.matrix() - b.matrix() * a.matrix());
}

/// Pauli operators. Basis ordering is |0>, |1> with sigma_z = diag(1, -1);
/// sigma_minus = |0><1| lowers |1> to |0>.
namespace pauli {

inline Operator id() { return Operator::identity(2); }

inline Operator x() {
  CMatrix m(2, 2);
  m << 0, 1, 1, 0;
  return Operator(m);
}

inline Operator y() {
  CMatrix m(2, 2);
  m << 0, -kI, kI, 0;
  return Operator(m);
}

inline Operator z() {
  CMatrix m(2, 2);
  m << 1, 0, 0, -1;
  return Operator(m);
}

inline Operator minus() {
  CMatrix m = CMatrix::Zero(2, 2);
  m(0, 1) = 1.0;
  return Operator(m);
}

inline Operator plus() {
  CMatrix m = CMatrix::Zero(2, 2);
  m(1, 0) = 1.0;
  return Operator(m);
}

}  // namespace pauli

/// |row><col| on an n-dimensional space.
inline Operator transition(Eigen::Index n, Eigen::Index row, Eigen::Index col) {
  CMatrix m = CMatrix::Zero(n, n);
  m(row, col) = 1.0;
  return Operator(m);
}

inline Operator projector(Eigen::Index n, Eigen::Index k) {
  return transition(n, k, k);
}

inline Operator diagonal(const RVector& d) {
  return Operator(d.cast<cplx>().asDiagonal().toDenseMatrix());
}

}  // namespace qoc
