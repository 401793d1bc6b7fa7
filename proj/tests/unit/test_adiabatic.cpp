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
#include "qoc/adiabatic/counterdiabatic.hpp"
#include "qoc/adiabatic/stirap.hpp"

using namespace qoc;

namespace {

// H = -1/2 (Delta sigma_z + Omega0 sigma_x) with controls (Omega0, Delta)
ControlledHamiltonian tls() {
  return ControlledHamiltonian(Operator::zero(2), {{-0.5 * pauli::x(), 0}, {-0.5 * pauli::z(), 1}});
}

CVector ground_tls(double rabi, double delta) {
  // oracle: closed-form ground state of -1/2 (delta sz + rabi sx)
  const double th = std::atan2(rabi, delta);
  return Eigen::Vector2cd(std::cos(th / 2), std::sin(th / 2));
}

}  // namespace

TEST(DressedFrameTest, StaticHamiltonian) {
  const TimeGrid g(0.0, 1.0, 21);
  const auto f = dressed_frame(ControlledHamiltonian(Operator(0.3 * pauli::z().matrix() + 0.2 * pauli::x().matrix())), {}, g);
  EXPECT_TRUE(f.ok());
  for (std::size_t k = 1; k < f.size(); ++k) {
    EXPECT_LE((f.eigenvectors[k] - f.eigenvectors[0]).cwiseAbs().maxCoeff(), 1e-14);
    EXPECT_LE((f.eigenvalues[k] - f.eigenvalues[0]).cwiseAbs().maxCoeff(), 1e-14);
  }
}

TEST(DressedFrameTest, TwoLevelEnergies) {
  const TimeGrid g(0.0, 1.0, 11);
  const double rabi = 0.8, delta = -0.6;
  const auto f = dressed_frame(tls(), {ControlField::constant(g, rabi), ControlField::constant(g, delta)}, g);
  const double e = 0.5 * std::sqrt(rabi * rabi + delta * delta);
  EXPECT_NEAR(f.eigenvalues[0](0), -e, 1e-14);
  EXPECT_NEAR(f.eigenvalues[0](1), e, 1e-14);
}

TEST(DressedFrameTest, LandauZenerAvoidedCrossing) {
  const double gap = 0.7, eps = 2.0;
  const TimeGrid g(-5.0, 5.0, 1002);
  const auto f = dressed_frame(tls(), {ControlField::constant(g, gap),
                                       ControlField::from_function(g, [&](double t) { return eps * t; })}, g);
  EXPECT_TRUE(f.ok());
  double min_gap = 1e9;
  for (const auto& w : f.eigenvalues) min_gap = std::min(min_gap, w(1) - w(0));
  EXPECT_NEAR(min_gap, gap, 1e-4);
  EXPECT_GE(f.min_overlap, 0.9);
}

TEST(DressedFrameTest, EigenvaluesMatchDirectDiagonalization) {
  std::mt19937 rng(21);
  const ControlledHamiltonian h(Operator(oracle::random_hermitian(4, rng)),
                                {{Operator(oracle::random_hermitian(4, rng)), 0}});
  const TimeGrid g(0.0, 3.0, 301);
  const std::vector<ControlField> u{ControlField::from_function(g, [](double t) { return std::sin(t); })};
  const auto f = dressed_frame(h, u, g);
  for (Eigen::Index k = 0; k < g.n_mid(); ++k) {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(h.at(controls_at(u, k)));
    RVector a = f.eigenvalues[std::size_t(k)];
    std::sort(a.data(), a.data() + a.size());
    EXPECT_LE((a - es.eigenvalues()).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(DressedFrameTest, DegeneracyFlagged) {
  const TimeGrid g(-1.0, 1.0, 4);
  const auto f = dressed_frame(tls(), {ControlField::zeros(g), ControlField(g, Eigen::Vector3d(-1.0, 0.0, 1.0))}, g);
  EXPECT_FALSE(f.ok());
  EXPECT_THROW(counterdiabatic_generic(f), Error);
}

TEST(MixingAnglesTest, TangentRelation) {
  const TimeGrid g(0.0, 1.0, 11);
  const auto sys = tls();
  const std::vector<ControlField> u{ControlField::from_function(g, [](double t) { return 1.0 + t; }),
                                    ControlField::from_function(g, [](double t) { return 0.5 - t; })};
  const auto a = mixing_angles(sys, u, g);
  const auto hs = hamiltonian_sequence(sys, u, g);
  for (Eigen::Index k = 0; k < g.n_mid(); ++k) {
    const CMatrix& m = hs[std::size_t(k)];
    EXPECT_NEAR(std::tan(a.theta[k]), 2 * std::abs(m(0, 1)) / (m(0, 0) - m(1, 1)).real(), 1e-12);
  }
}

TEST(Adiabaticity, ConstantHamiltonianGivesZero) {
  const TimeGrid g(0.0, 1.0, 11);
  const std::vector<ControlField> u{ControlField::constant(g, 1.0), ControlField::constant(g, 0.3)};
  const auto m = adiabaticity_margin(dressed_frame(tls(), u, g), mixing_angles(tls(), u, g));
  EXPECT_EQ(m.samples().cwiseAbs().maxCoeff(), 0.0);
}

TEST(Adiabaticity, SlowGaussianReturnsToBareState) {
  const double delta = 2.0, peak = 3.0, sigma = 8.0;
  const TimeGrid g(0.0, 80.0, 8001);
  const auto rabi = ControlField::from_function(g, [&](double t) { return peak * std::exp(-std::pow(t - 40.0, 2) / (2 * sigma * sigma)); });
  const auto det = ControlField::constant(g, delta);
  const auto f = dressed_frame(tls(), {rabi, det}, g);
  const auto m = adiabaticity_margin(f, theta_dot_tls(rabi, det));
  EXPECT_LT(m.samples().maxCoeff(), 0.05);
  const auto tr = propagate_ket(tls(), {rabi, det}, g, QuantumState::basis(2, 0));
  EXPECT_GT(tr.final().populations()(0), 0.999);
}

TEST(Adiabaticity, FastSweepIsDiabatic) {
  const double gap = 1.0, eps = 10.0;
  const TimeGrid g(-10.0, 10.0, 20001);
  const auto rabi = ControlField::constant(g, gap);
  const auto det = ControlField::from_function(g, [&](double t) { return eps * t; });
  const auto m = adiabaticity_margin(dressed_frame(tls(), {rabi, det}, g), theta_dot_tls(rabi, det));
  EXPECT_GT(m.samples().maxCoeff(), 1.0);
  const auto tr = propagate_ket(tls(), {rabi, det}, g, QuantumState::ket(ground_tls(gap, -eps * 10.0)));
  const double p_ground = std::norm(ground_tls(gap, eps * 10.0).dot(tr.final().ket_vector()));
  EXPECT_GT(1.0 - p_ground, 0.1);
}

TEST(Counterdiabatic, ConstantControlsGiveZero) {
  const TimeGrid g(0.0, 1.0, 11);
  const auto c = counterdiabatic_tls(ControlField::constant(g, 1.0), ControlField::constant(g, -2.0));
  EXPECT_EQ(c.samples().cwiseAbs().maxCoeff(), 0.0);
}

TEST(Counterdiabatic, LandauZenerLorentzian) {
  const double gap = 0.5, eps = 3.0;
  const TimeGrid g(-4.0, 4.0, 801);
  const auto rabi = ControlField::constant(g, gap);
  const auto det = ControlField::from_function(g, [&](double t) { return eps * t; });
  const auto exact = counterdiabatic_tls(rabi, det, ControlField::zeros(g), ControlField::constant(g, eps));
  const auto numeric = counterdiabatic_tls(rabi, det);
  for (Eigen::Index k = 0; k < g.n_mid(); ++k) {
    const double t = g.mid(k);
    const double lor = -(gap * eps / 2) / (gap * gap + eps * eps * t * t);
    EXPECT_NEAR(exact[k], lor, 1e-14);
    EXPECT_NEAR(numeric[k], lor, 1e-12);
  }
}

TEST(Counterdiabatic, SuppressesTransitionsAtAllRates) {
  const double gap = 1.0, tf = 10.0;
  for (double eps : {0.2, 2.0, 20.0}) {
    const TimeGrid g(-tf, tf, 20001);
    const auto rabi = ControlField::constant(g, gap);
    const auto det = ControlField::from_function(g, [&](double t) { return eps * t; });
    const auto cd = counterdiabatic_tls(rabi, det, ControlField::zeros(g), ControlField::constant(g, eps));
    const ControlledHamiltonian h(Operator::zero(2), {{-0.5 * pauli::x(), 0}, {-0.5 * pauli::z(), 1}, {pauli::y(), 2}});
    const auto tr = propagate_ket(h, {rabi, det, cd}, g, QuantumState::ket(ground_tls(gap, -eps * tf)));
    double worst = 0.0;
    for (Eigen::Index k = 0; k < g.nt(); ++k) {
      const double f = std::norm(ground_tls(gap, eps * g.t(k)).dot(tr.states[std::size_t(k)].ket_vector()));
      worst = std::max(worst, 1.0 - f);
    }
    EXPECT_LT(worst, 1e-6) << "eps " << eps;
  }
}

TEST(Counterdiabatic, GenericMatchesTwoLevel) {
  const double gap = 0.8, eps = 1.5;
  const TimeGrid g(-3.0, 3.0, 6001);
  const auto rabi = ControlField::from_function(g, [&](double t) { return gap * (1.0 + 0.2 * std::cos(t)); });
  const auto det = ControlField::from_function(g, [&](double t) { return eps * t; });
  const auto f = dressed_frame(tls(), {rabi, det}, g);
  const auto hcd = counterdiabatic_generic(f);
  const auto c = counterdiabatic_tls(rabi, det,
                                     ControlField::from_function(g, [&](double t) { return -0.2 * gap * std::sin(t); }),
                                     ControlField::constant(g, eps));
  for (Eigen::Index k = 0; k < g.n_mid(); ++k) {
    const CMatrix expect = c[k] * pauli::y().matrix();
    EXPECT_LE((hcd[std::size_t(k)] - expect).cwiseAbs().maxCoeff(), 1e-6) << k;
    EXPECT_LE(hermiticity_defect(hcd[std::size_t(k)]), 1e-8);
  }
}

TEST(Counterdiabatic, StaticIsZero) {
  const TimeGrid g(0.0, 1.0, 11);
  std::mt19937 rng(22);
  const auto f = dressed_frame(ControlledHamiltonian(Operator(oracle::random_hermitian(3, rng))), {}, g);
  for (const auto& m : counterdiabatic_generic(f)) EXPECT_LE(m.cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Counterdiabatic, StirapNeedsOneThreeCoupling) {
  const TimeGrid g(0.0, 10.0, 1001);
  const auto pump = ControlField::from_function(g, [](double t) { return std::exp(-std::pow(t - 6.0, 2)); });
  const auto stokes = ControlField::from_function(g, [](double t) { return std::exp(-std::pow(t - 4.0, 2)); });
  const auto sys = rwa_three_level({Eigen::Vector3d(0, 1, 2), pump, stokes, 1.0, 1.0});
  const auto hcd = counterdiabatic_generic(dressed_frame(sys.h, sys.controls, g));
  double m13 = 0.0;
  for (const auto& m : hcd) m13 = std::max(m13, std::abs(m(0, 2)));
  EXPECT_GT(m13, 1e-2);
}

TEST(Stirap, DarkStateLimits) {
  const TimeGrid g(0.0, 1.0, 3);
  const Eigen::Vector3d e(0, 1, 2);
  const auto a = stirap_dark_state({e, ControlField::zeros(g), ControlField::constant(g, 1.0), 1.0, 1.0});
  EXPECT_NEAR(std::abs(a.states[0].ket_vector()(0)), 1.0, 1e-15);
  const auto b = stirap_dark_state({e, ControlField::constant(g, 1.0), ControlField::zeros(g), 1.0, 1.0});
  EXPECT_NEAR(std::abs(b.states[0].ket_vector()(2)), 1.0, 1e-15);
}

TEST(Stirap, CounterintuitiveRotatesOneToThree) {
  const TimeGrid g(0.0, 10.0, 101);
  const auto pump = ControlField::from_function(g, [](double t) { return std::exp(-std::pow(t - 6.0, 2)); });
  const auto stokes = ControlField::from_function(g, [](double t) { return std::exp(-std::pow(t - 4.0, 2)); });
  const auto d = stirap_dark_state({Eigen::Vector3d(0, 1, 2), pump, stokes, 1.0, 1.0});
  EXPECT_GT(std::norm(d.states.front().ket_vector()(0)), 0.999);
  EXPECT_GT(std::norm(d.states.back().ket_vector()(2)), 0.999);
  for (const auto& s : d.states) EXPECT_LE(std::abs(s.ket_vector()(1)), 1e-10);
}

TEST(Stirap, DetuningRefused) {
  const TimeGrid g(0.0, 1.0, 3);
  try {
    stirap_dark_state({Eigen::Vector3d(0, 1, 2), ControlField::constant(g, 1.0), ControlField::constant(g, 1.0), 1.2, 1.0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::detuning_condition);
  }
}
