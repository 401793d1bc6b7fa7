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
#include <array>
#include <cmath>
#include <limits>

#include <Eigen/Eigenvalues>

#include "qoc/core/operator.hpp"
#include "qoc/dynamics/expm.hpp"
#include "qoc/functionals/gate.hpp"

namespace qoc {

/// Bell-like magic basis, columns as in Makhlin's construction.
inline CMatrix magic_basis() {
  CMatrix q(4, 4);
  q << 1, 0, 0, kI,
       0, kI, 1, 0,
       0, kI, -1, 0,
       1, 0, 0, -kI;
  return q / std::sqrt(2.0);
}

/// (g1, g2, g3) with g1 + i g2 = tr(m)^2 / (16 det U) and
/// g3 = (tr(m)^2 - tr(m^2)) / (4 det U), m = U_B^T U_B in the magic basis.
inline Eigen::Vector3d local_invariants(const CMatrix& u) {
  require_same_dim(u.rows(), 4, "local_invariants");
  require_unitary(u, "local_invariants");
  const CMatrix q = magic_basis();
  const CMatrix ub = q.adjoint() * u * q;
  const CMatrix m = ub.transpose() * ub;
  const cplx det = u.determinant();
  const cplx tr = m.trace();
  const cplx g12 = tr * tr / (16.0 * det);
  const cplx g3 = (tr * tr - (m * m).trace()) / (4.0 * det);
  return {g12.real(), g12.imag(), g3.real()};
}

/// Canonical nonlocal coordinates with the convention
///   U = k1 exp(i/2 (c1 XX + c2 YY + c3 ZZ)) k2,
/// c1 in [0, pi], pi - c1 >= c2 >= c3 >= 0 and c1 <= pi/2 when c3 = 0.
/// CNOT sits at (pi/2, 0, 0).
struct WeylCoordinates {
  double c1 = 0.0, c2 = 0.0, c3 = 0.0;

  Eigen::Vector3d vec() const { return {c1, c2, c3}; }
};

/// Canonical gate exp(i/2 (c1 XX + c2 YY + c3 ZZ)).
inline CMatrix canonical_gate(double c1, double c2, double c3) {
  const CMatrix xx = kron(pauli::x().matrix(), pauli::x().matrix());
  const CMatrix yy = kron(pauli::y().matrix(), pauli::y().matrix());
  const CMatrix zz = kron(pauli::z().matrix(), pauli::z().matrix());
  // exp(i A) = exp(-i (-A) * 1)
  return expm_hermitian(-0.5 * (c1 * xx + c2 * yy + c3 * zz), 1.0);
}

inline WeylCoordinates weyl_coordinates(const CMatrix& u_in) {
  require_same_dim(u_in.rows(), 4, "weyl_coordinates");
  require_unitary(u_in, "weyl_coordinates");
  const CMatrix u = u_in / std::pow(u_in.determinant(), 0.25);
  const CMatrix syy = kron(pauli::y().matrix(), pauli::y().matrix());
  const CMatrix ut = syy * u.transpose() * syy;
  Eigen::ComplexEigenSolver<CMatrix> es(u * ut, false);
  std::array<double, 4> s{};
  for (int i = 0; i < 4; ++i) {
    // branch cut at -1/2 with a margin: degenerate spectra (SWAP) sit on it
    double two_s = std::arg(es.eigenvalues()(i)) / kPi;
    if (two_s <= -0.5 + 1e-9) two_s += 2.0;
    s[std::size_t(i)] = two_s / 2.0;
  }
  std::sort(s.begin(), s.end(), std::greater<>());
  double sum = 0.0;
  for (double v : s) sum += v;
  const int n = int(std::lround(sum));
  if (n > 0) {
    for (int i = 0; i < n; ++i) s[std::size_t(i)] -= 1.0;
  } else {
    for (int i = 0; i < -n; ++i) s[std::size_t(3 - i)] += 1.0;
  }
  std::sort(s.begin(), s.end(), std::greater<>());
  double c1 = s[0] + s[1];
  double c2 = s[0] + s[2];
  double c3 = s[1] + s[2];
  if (c3 < 0.0) {
    c1 = 1.0 - c1;
    c3 = -c3;
  }
  // on the base the mirror image c1 -> 1 - c1 is the same class
  constexpr double eps = 1e-12;
  if (c3 < eps && c1 > 0.5 + eps) c1 = 1.0 - c1;
  auto snap = [](double x) { return std::abs(x) < eps ? 0.0 : x; };
  c1 = snap(c1);
  c2 = snap(c2);
  c3 = snap(c3);
  return {c1 * kPi, c2 * kPi, c3 * kPi};
}

/// Perfect-entangler polyhedron in units of pi: c1 + c2 >= 1/2,
/// c1 - c2 <= 1/2, c2 + c3 <= 1/2.
inline bool is_perfect_entangler(const WeylCoordinates& c, double tol = 1e-12) {
  const double a = c.c1 / kPi, b = c.c2 / kPi, d = c.c3 / kPi;
  return a + b >= 0.5 - tol && a - b <= 0.5 + tol && b + d <= 0.5 + tol;
}

namespace detail {

/// Closest point on triangle abc to p (Ericson, Real-Time Collision Detection).
inline Eigen::Vector3d closest_on_triangle(const Eigen::Vector3d& p, const Eigen::Vector3d& a,
                                           const Eigen::Vector3d& b, const Eigen::Vector3d& c) {
  const Eigen::Vector3d ab = b - a, ac = c - a, ap = p - a;
  const double d1 = ab.dot(ap), d2 = ac.dot(ap);
  if (d1 <= 0 && d2 <= 0) return a;
  const Eigen::Vector3d bp = p - b;
  const double d3 = ab.dot(bp), d4 = ac.dot(bp);
  if (d3 >= 0 && d4 <= d3) return b;
  const double vc = d1 * d4 - d3 * d2;
  if (vc <= 0 && d1 >= 0 && d3 <= 0) return a + d1 / (d1 - d3) * ab;
  const Eigen::Vector3d cp = p - c;
  const double d5 = ab.dot(cp), d6 = ac.dot(cp);
  if (d6 >= 0 && d5 <= d6) return c;
  const double vb = d5 * d2 - d1 * d6;
  if (vb <= 0 && d2 >= 0 && d6 <= 0) return a + d2 / (d2 - d6) * ac;
  const double va = d3 * d6 - d5 * d4;
  if (va <= 0 && (d4 - d3) >= 0 && (d5 - d6) >= 0)
    return b + (d4 - d3) / ((d4 - d3) + (d5 - d6)) * (c - b);
  const double denom = 1.0 / (va + vb + vc);
  return a + ab * (vb * denom) + ac * (vc * denom);
}

}  // namespace detail

/// Euclidean distance from c to the perfect-entangler polyhedron; 0 inside
/// (same 1e-12 membership tolerance as is_perfect_entangler).
inline double pe_distance(const WeylCoordinates& c) {
  if (is_perfect_entangler(c)) return 0.0;
  static const std::array<Eigen::Vector3d, 6> v = {
      Eigen::Vector3d(0.5, 0.0, 0.0),   Eigen::Vector3d(0.25, 0.25, 0.0),
      Eigen::Vector3d(0.75, 0.25, 0.0), Eigen::Vector3d(0.25, 0.25, 0.25),
      Eigen::Vector3d(0.75, 0.25, 0.25), Eigen::Vector3d(0.5, 0.5, 0.0)};
  const Eigen::Vector3d p = c.vec() / kPi;
  double best = std::numeric_limits<double>::infinity();
  // every face of the hull is a union of vertex triangles, and triangles
  // inside the hull are never closer than its boundary
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      for (std::size_t k = j + 1; k < v.size(); ++k)
        best = std::min(best, (p - detail::closest_on_triangle(p, v[i], v[j], v[k])).norm());
  return best * kPi;
}

inline CMatrix cnot() {
  CMatrix m = CMatrix::Zero(4, 4);
  m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1.0;
  return m;
}

inline CMatrix cphase(double phi) {
  CMatrix m = CMatrix::Identity(4, 4);
  m(3, 3) = std::exp(kI * phi);
  return m;
}

}  // namespace qoc
