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

#include <gtest/gtest.h>

#include <random>

#include "oracles/oracles.hpp"
#include "qoc/core/bloch.hpp"
#include "qoc/core/metrics.hpp"
#include "qoc/core/serialize.hpp"

using namespace qoc;

namespace {

double max_abs(const CMatrix& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

}  // namespace

TEST(TensorProduct, IdentityTimesIdentity) {
  EXPECT_EQ(max_abs(tensor_product(pauli::id(), pauli::id()).matrix() -
                    CMatrix::Identity(4, 4)),
            0.0);
}

TEST(TensorProduct, XxIsAntiDiagonal) {
  const CMatrix m = tensor_product(pauli::x(), pauli::x()).matrix();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) EXPECT_EQ(m(i, j), cplx(i + j == 3 ? 1.0 : 0.0));
}

TEST(TensorProduct, ZxBlockDiagonal) {
  const CMatrix m = tensor_product(pauli::z(), pauli::x()).matrix();
  EXPECT_EQ(max_abs(m.topLeftCorner(2, 2) - pauli::x().matrix()), 0.0);
  EXPECT_EQ(max_abs(m.bottomRightCorner(2, 2) + pauli::x().matrix()), 0.0);
  EXPECT_EQ(max_abs(m.topRightCorner(2, 2)), 0.0);
}

TEST(TensorProduct, AssociativeAndDimMultiplicative) {
  std::mt19937 rng(1);
  const Operator a(oracle::random_hermitian(2, rng));
  const Operator b(oracle::random_hermitian(3, rng));
  const Operator c(oracle::random_hermitian(2, rng));
  const Operator l = tensor_product(tensor_product(a, b), c);
  const Operator r = tensor_product(a, tensor_product(b, c));
  EXPECT_EQ(l.dim(), 12);
  EXPECT_LE(max_abs(l.matrix() - r.matrix()), 1e-14);
}

TEST(Commutator, PauliAlgebra) {
  EXPECT_LE(max_abs(commutator(pauli::x(), pauli::y()).matrix() -
                    2.0 * kI * pauli::z().matrix()),
            1e-15);
  EXPECT_LE(max_abs(commutator(pauli::z(), pauli::x()).matrix() -
                    2.0 * kI * pauli::y().matrix()),
            1e-15);
  EXPECT_EQ(max_abs(commutator(pauli::x(), pauli::x()).matrix()), 0.0);
}

TEST(Commutator, DimensionMismatchThrows) {
  try {
    commutator(pauli::x(), Operator::identity(3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::dimension_mismatch);
  }
}

TEST(Commutator, JacobiIdentity) {
  std::mt19937 rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    const Operator a(oracle::random_hermitian(4, rng));
    const Operator b(oracle::random_hermitian(4, rng));
    const Operator c(oracle::random_hermitian(4, rng));
    const CMatrix j = commutator(a, commutator(b, c)).matrix() +
                      commutator(b, commutator(c, a)).matrix() +
                      commutator(c, commutator(a, b)).matrix();
    EXPECT_LE(max_abs(j), 1e-12);
  }
}

TEST(OperatorTest, HermiticityFlag) {
  EXPECT_TRUE(pauli::y().is_hermitian());
  EXPECT_FALSE(pauli::minus().is_hermitian());
  EXPECT_THROW(Operator(CMatrix::Zero(2, 3)), Error);
}

TEST(State, InvariantsEnforced) {
  CVector v(2);
  v << 1.0, 1.0;
  EXPECT_THROW(QuantumState::ket(v), Error);
  CMatrix rho(2, 2);
  rho << 1.2, 0, 0, -0.2;
  EXPECT_THROW(QuantumState::density(rho), Error);
  rho << 0.5, 0.1, 0.2, 0.5;
  EXPECT_THROW(QuantumState::density(rho), Error);
}

TEST(Bloch, BasisIsOrthonormalAndTraceless) {
  for (int n = 2; n <= 5; ++n) {
    const auto b = gell_mann_basis(n);
    ASSERT_EQ(int(b.size()), n * n - 1);
    for (std::size_t i = 0; i < b.size(); ++i) {
      EXPECT_LE(std::abs(b[i].trace()), 1e-14);
      EXPECT_LE(hermiticity_defect(b[i]), 0.0);
      for (std::size_t j = 0; j < b.size(); ++j)
        EXPECT_NEAR(std::abs((b[i] * b[j]).trace()), i == j ? 1.0 : 0.0, 1e-14);
    }
  }
}

TEST(Bloch, MaximallyMixedIsOrigin) {
  const auto r = bloch_vector(QuantumState::maximally_mixed(2));
  EXPECT_LE(r.components.cwiseAbs().maxCoeff(), 1e-15);
}

TEST(Bloch, GroundStateOnlyZ) {
  const auto r = bloch_vector(QuantumState::basis(2, 0).to_density());
  EXPECT_NEAR(r.components(0), 0.0, 1e-15);
  EXPECT_NEAR(r.components(1), 0.0, 1e-15);
  EXPECT_GT(std::abs(r.components(2)), 0.5);
}

TEST(Bloch, KetRequiresConversion) {
  try {
    bloch_vector(QuantumState::basis(2, 0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::convert_first);
  }
}

TEST(Bloch, RoundTripUpToDimEight) {
  std::mt19937 rng(3);
  for (int n = 2; n <= 8; ++n) {
    const CMatrix rho = oracle::random_density(n, rng);
    const auto r = bloch_vector(QuantumState::density(rho));
    EXPECT_LE(max_abs(from_bloch(r) - rho), 1e-12) << "n=" << n;
  }
}

TEST(Bloch, PureQubitNorms) {
  std::mt19937 rng(4);
  for (int i = 0; i < 10; ++i) {
    const auto s = QuantumState::ket(oracle::random_ket(2, rng));
    // orthonormal-basis components carry the 1/sqrt(2) of the basis
    EXPECT_NEAR(bloch_vector(s.to_density()).norm(), 1.0 / std::sqrt(2.0), 1e-10);
    EXPECT_NEAR(pauli_bloch_vector(s).norm(), 1.0, 1e-10);
    EXPECT_LE(max_abs(from_pauli_bloch(pauli_bloch_vector(s)) - s.density_matrix()), 1e-12);
  }
}

TEST(Metrics, OverlapAndPurity) {
  const auto pure = QuantumState::basis(2, 1).to_density();
  EXPECT_NEAR(hilbert_schmidt_overlap(pure, pure), 1.0, 1e-15);
  const auto mixed = QuantumState::maximally_mixed(2);
  EXPECT_NEAR(hilbert_schmidt_overlap(mixed, mixed), 0.5, 1e-15);
  EXPECT_NEAR(purity(pure), 1.0, 1e-15);
  EXPECT_NEAR(purity(QuantumState::maximally_mixed(5)), 0.2, 1e-15);
  CMatrix d = CMatrix::Zero(2, 2);
  d(0, 0) = 0.75;
  d(1, 1) = 0.25;
  EXPECT_NEAR(purity(QuantumState::density(d)), 0.625, 1e-15);
}

TEST(Metrics, OverlapMatchesBlochDecomposition) {
  std::mt19937 rng(5);
  for (int i = 0; i < 20; ++i) {
    const auto a = QuantumState::density(oracle::random_density(2, rng));
    const auto b = QuantumState::density(oracle::random_density(2, rng));
    // oracle: Pauli components, tr(ab) = (1 + ra.rb)/2
    const Eigen::Vector3d ra = pauli_bloch_vector(a), rb = pauli_bloch_vector(b);
    EXPECT_NEAR(hilbert_schmidt_overlap(a, b), 0.5 * (1.0 + ra.dot(rb)), 1e-12);
    EXPECT_NEAR(hilbert_schmidt_overlap(a, a), purity(a), 1e-15);
  }
}

TEST(Metrics, DistanceIdentities) {
  const auto p0 = QuantumState::basis(2, 0).to_density();
  const auto p1 = QuantumState::basis(2, 1).to_density();
  EXPECT_NEAR(hilbert_schmidt_distance(p0, p1), 1.0, 1e-15);
  EXPECT_EQ(hilbert_schmidt_distance(p0, p0), 0.0);
  std::mt19937 rng(6);
  for (int i = 0; i < 20; ++i) {
    const auto a = QuantumState::density(oracle::random_density(3, rng));
    const auto b = QuantumState::density(oracle::random_density(3, rng));
    EXPECT_NEAR(hilbert_schmidt_distance(a, b),
                0.5 * (purity(a) + purity(b)) - hilbert_schmidt_overlap(a, b), 1e-12);
    EXPECT_NEAR(hilbert_schmidt_distance(a, b), hilbert_schmidt_distance(b, a), 1e-15);
  }
  EXPECT_THROW(hilbert_schmidt_distance(p0, QuantumState::maximally_mixed(3)), Error);
}

TEST(Serialize, OperatorAndStateRoundTrip) {
  std::mt19937 rng(7);
  const Operator op(oracle::random_hermitian(3, rng));
  const json j = to_json(op);
  EXPECT_EQ(j["dim"], 3);
  EXPECT_EQ(j["entries"].size(), 9u);
  EXPECT_EQ(max_abs(operator_from_json(json::parse(j.dump())).matrix() - op.matrix()), 0.0);

  const auto s = QuantumState::density(oracle::random_density(2, rng));
  EXPECT_LE(max_abs(state_from_json(json::parse(to_json(s).dump())).rho() - s.rho()), 1e-15);
  const auto k = QuantumState::ket(oracle::random_ket(3, rng));
  EXPECT_LE((state_from_json(to_json(k)).ket_vector() - k.ket_vector()).norm(), 1e-15);
  EXPECT_THROW(operator_from_json(json{{"dim", 2}, {"entries", {1, 2, 3}}}), Error);
}
