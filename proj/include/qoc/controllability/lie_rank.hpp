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

#include <vector>

#include "qoc/dynamics/hamiltonian.hpp"

namespace qoc {

struct LieAlgebraReport {
  int dimension_found = 0;
  int target_dimension = 0;
  bool full_rank = false;
  int depth_reached = 0;
  bool truncated = false;
};

namespace detail {

// real coordinates (Re, Im) of a matrix
inline RVector realify(const CMatrix& m) {
  RVector v(2 * m.size());
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    v(2 * i) = m.data()[i].real();
    v(2 * i + 1) = m.data()[i].imag();
  }
  return v;
}

/// Orthonormal accumulator over the real span of complex matrices.
class RealSpan {
 public:
  explicit RealSpan(double drop_tol) : tol_(drop_tol) {}

  /// Adds m if independent; returns the normalized new direction, if any.
  /// `scale` is the size m would have without cancellation; anything
  /// below 1e-12 scale is round-off and dropped.
  bool add(const CMatrix& m, CMatrix* direction = nullptr, double scale = 0.0) {
    const RVector v0 = realify(m);
    const double n0 = v0.norm();
    if (n0 == 0.0 || n0 <= 1e-12 * scale) return false;
    RVector v = v0;
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& b : basis_) v -= b.dot(v) * b;
    const double n = v.norm();
    if (n <= tol_ * n0) return false;
    basis_.push_back(v / n);
    if (direction) {
      // rebuild the complex matrix from the residual
      CMatrix d(m.rows(), m.cols());
      for (Eigen::Index i = 0; i < d.size(); ++i) d.data()[i] = cplx(v(2 * i), v(2 * i + 1)) / n;
      *direction = d;
    }
    return true;
  }

  int size() const { return int(basis_.size()); }

 private:
  double tol_;
  std::vector<RVector> basis_;
};

}  // namespace detail

/// Dimension of the dynamical Lie algebra spanned by {iH_0, iH_j} and
/// their nested commutators. Breadth first: level d brackets every
/// generator with the directions added at level d-1; a level that adds
/// nothing means the span is closed. max_depth < 0 selects 2 N^2.
inline LieAlgebraReport lie_rank(const ControlledHamiltonian& h, int max_depth = -1,
                                 double drop_tol = 1e-10) {
  const Eigen::Index n = h.dim();
  if (max_depth < 0) max_depth = int(2 * n * n);
  std::vector<CMatrix> gens;
  gens.push_back(kI * h.drift().matrix());
  for (int j = 0; j < h.n_controls(); ++j) gens.push_back(kI * h.control_operator(j));
  for (const auto& g : gens) {
    if (hermiticity_defect(-kI * g) > tol::hermitian) {
      throw Error(ErrorCode::invalid_argument, "lie_rank: generators must be Hermitian");
    }
  }

  bool traceless = true;
  for (const auto& g : gens) traceless = traceless && std::abs(g.trace()) <= 1e-12 * std::max(1.0, g.norm());
  LieAlgebraReport r;
  r.target_dimension = int(traceless ? n * n - 1 : n * n);

  detail::RealSpan span(drop_tol);
  std::vector<CMatrix> frontier, units;
  for (const auto& g : gens) {
    CMatrix d;
    if (span.add(g, &d)) {
      frontier.push_back(d);
      units.push_back(g / g.norm());
    }
  }
  int depth = 0;
  while (!frontier.empty() && span.size() < r.target_dimension) {
    if (depth == max_depth) {
      r.truncated = true;
      break;
    }
    ++depth;
    std::vector<CMatrix> next;
    for (const auto& x : frontier)
      for (const auto& g : units) {
        CMatrix d;
        if (span.add(g * x - x * g, &d, 2.0)) next.push_back(d);  // |g| = |x| = 1
      }
    if (!next.empty()) r.depth_reached = depth;
    frontier = std::move(next);
  }
  r.dimension_found = span.size();
  r.full_rank = r.dimension_found == r.target_dimension;
  if (r.full_rank) r.truncated = false;
  return r;
}

}  // namespace qoc
