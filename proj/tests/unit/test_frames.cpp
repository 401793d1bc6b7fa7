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

#include "oracles/oracles.hpp"
#include "qoc/frames/frames.hpp"

using namespace qoc;

namespace {

RVector final_populations(const DrivenSystem& s, const TimeGrid& g, Eigen::Index start = 0) {
  return propagate_ket(s.h, s.controls, g, QuantumState::basis(s.h.dim(), start))
      .final()
      .populations();
}

}  // namespace

TEST(RotatingFrame, ZeroPhaseIsIdentity) {
  const TimeGrid g(0.0, 1.0, 11);
  const ControlledHamiltonian h(0.3 * pauli::z(), {{pauli::x(), 0}});
  const std::vector<ControlField> u{ControlField::from_function(g, [](double t) { return t; })};
  const auto zero = [](double) { return RVector(RVector::Zero(2)); };
  const auto hp = rotating_frame(h, u, g, zero, zero);
  const auto hs = hamiltonian_sequence(h, u, g);
  for (std::size_t k = 0; k < hp.size(); ++k)
    EXPECT_EQ((hp[k] - hs[k]).cwiseAbs().maxCoeff(), 0.0);
}

TEST(RotatingFrame, MissingDerivativeRefused) {
  const TimeGrid g(0.0, 1.0, 11);
  try {
    rotating_frame(ControlledHamiltonian(pauli::z()), {}, g,
                   [](double) { return RVector(RVector::Zero(2)); }, nullptr);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::missing_derivative);
  }
}

TEST(RotatingFrame, OffDiagonalPhaseFactors) {
  // theta = (0, w0 t): the off-diagonal of -E cos(wL t) sigma_x becomes
  // -E/2 (exp(i(wL - w0)t) + exp(-i(wL + w0)t))
  const double w0 = 3.0, wl = 2.5, e = 0.4;
  const TimeGrid g(0.0, 4.0, 41);
  const ControlledHamiltonian h(0.5 * w0 * pauli::z(), {{pauli::x(), 0}});
  const std::vector<ControlField> u{
      ControlField::from_function(g, [&](double t) { return -e * std::cos(wl * t); })};
  const auto hp = rotating_frame(h, u, g, [&](double t) { return RVector(Eigen::Vector2d(0, w0 * t)); },
                                 [&](double) { return RVector(Eigen::Vector2d(0, w0)); });
  for (Eigen::Index k = 0; k < g.n_mid(); ++k) {
    const double t = g.mid(k);
    const cplx expect = -0.5 * e * (std::exp(kI * (wl - w0) * t) + std::exp(-kI * (wl + w0) * t));
    EXPECT_LE(std::abs(hp[std::size_t(k)](0, 1) - expect), 1e-12);
    EXPECT_LE(std::abs(hp[std::size_t(k)](1, 0) - std::conj(expect)), 1e-12);
  }
}

TEST(RotatingFrame, PopulationEquivalence) {
  const double w0 = 2.0, e = 0.5;
  const TimeGrid g(0.0, 2.0, 100001);
  // time-independent lab Hamiltonian so that the lab propagation is exact
  const ControlledHamiltonian h(Operator(0.5 * w0 * pauli::z().matrix() + e * pauli::x().matrix()));
  const auto lab = propagate_ket(h, {}, g, QuantumState::basis(2, 0));
  const auto hp = rotating_frame(h, {}, g, [&](double t) { return RVector(Eigen::Vector2d(0.5 * w0 * t, -0.5 * w0 * t)); },
                                 [&](double) { return RVector(Eigen::Vector2d(0.5 * w0, -0.5 * w0)); });
  const auto rot = propagate_ket_sequence(hp, g, QuantumState::basis(2, 0));
  double err = 0.0;
  for (std::size_t k = 0; k < lab.states.size(); k += 100)
    err = std::max(err, (lab.states[k].populations() - rot.states[k].populations()).cwiseAbs().maxCoeff());
  EXPECT_LE(err, 1e-9);
}

TEST(RwaTwoLevel, ResonantRabi) {
  const double rabi = 1.5;
  const TimeGrid g(0.0, 8.0, 801);
  const auto s = rwa_two_level({5.0, 5.0, rabi, ControlField::constant(g, 1.0), {}});
  const auto tr = propagate_ket(s.h, s.controls, g, QuantumState::basis(2, 0));
  for (Eigen::Index k = 0; k < g.nt(); ++k)
    EXPECT_NEAR(tr.states[std::size_t(k)].populations()(1), std::pow(std::sin(rabi * g.t(k) / 2), 2), 1e-10);
  EXPECT_NEAR(s.validity_ratio, 5.0 / 1.5, 1e-15);
}

TEST(RwaTwoLevel, NoDriveIsFreeEvolution) {
  const TimeGrid g(0.0, 3.0, 31);
  for (Frame f : {Frame::lab, Frame::drift, Frame::carrier, Frame::instantaneous}) {
    const auto s = rwa_two_level({4.0, 3.0, 1.0, ControlField::zeros(g), {}}, f);
    const auto tr = propagate_ket(s.h, s.controls, g, QuantumState::normalized_ket(CVector::Ones(2)));
    EXPECT_NEAR(tr.final().populations()(0), 0.5, 1e-12);
  }
}

TEST(RwaTwoLevel, RwaFramesAgree) {
  const TimeGrid g(0.0, 6.0, 6001);
  const auto shape = sin2_shape(g);
  const auto phase = ControlField::from_function(g, [](double t) { return 0.3 * t * t / 6.0; });
  const TwoLevelDriveSpec spec{10.0, 9.6, 1.2, shape, phase};
  const RVector ref = final_populations(rwa_two_level(spec, Frame::carrier), g);
  EXPECT_LE((final_populations(rwa_two_level(spec, Frame::drift), g) - ref).cwiseAbs().maxCoeff(), 1e-6);
  EXPECT_LE((final_populations(rwa_two_level(spec, Frame::instantaneous), g) - ref).cwiseAbs().maxCoeff(), 1e-5);
}

TEST(RwaTwoLevel, LabFrameAgreementImprovesWithRatio) {
  const double rabi = 1.0;
  const double tf = 2.0 * kPi;
  double prev = 1.0;
  for (double ratio : {10.0, 30.0, 100.0}) {
    const double w0 = ratio * rabi;
    const TimeGrid g(0.0, tf, Eigen::Index(std::ceil(tf * w0 * 60)) + 1);
    // sin^2 envelope with area pi
    const auto shape = sin2_shape(g);
    const TwoLevelDriveSpec spec{w0, w0, rabi, shape, {}};
    const auto lab = rwa_two_level(spec, Frame::lab);
    const auto rwa = rwa_two_level(spec, Frame::carrier);
    const double err = (final_populations(lab, g) - final_populations(rwa, g)).cwiseAbs().maxCoeff();
    EXPECT_LT(err, prev) << "ratio " << ratio;
    if (ratio == 100.0) EXPECT_LE(err, 1e-3);
    prev = err;
  }
}

TEST(RwaThreeLevel, StaticForms) {
  const TimeGrid g(0.0, 1.0, 11);
  ThreeLevelDriveSpec spec{Eigen::Vector3d(0.0, 10.0, 25.0), ControlField::zeros(g),
                           ControlField::zeros(g), 9.0, 14.0};
  EXPECT_DOUBLE_EQ(spec.delta2p(), -(spec.delta1() + spec.delta2()));
  const auto s = rwa_three_level(spec);
  const CMatrix h0 = s.h.at(Eigen::Vector2d::Zero());
  EXPECT_NEAR(h0(1, 1).real(), -spec.delta1(), 1e-15);
  EXPECT_NEAR(h0(2, 2).real(), spec.delta2p(), 1e-15);
  EXPECT_EQ(h0(0, 1), cplx(0));

  spec.omega1 = 10.0;
  spec.omega2 = 15.0;
  const auto r = rwa_three_level(spec);
  EXPECT_LE(r.h.drift().matrix().cwiseAbs().maxCoeff(), 1e-15);
  const CMatrix h1 = r.h.at(Eigen::Vector2d(2.0, 4.0));
  EXPECT_EQ(h1(0, 1), cplx(1.0));
  EXPECT_EQ(h1(1, 2), cplx(2.0));
}

TEST(RwaThreeLevel, WeakDriveMatchesLabFrame) {
  const Eigen::Vector3d e(0.0, 100.0, 302.0);
  const double w1 = 99.0, w2 = 201.5, om1 = 1.0, om2 = 1.0, tf = 4.0;
  const TimeGrid g(0.0, tf, 401);
  const auto s1 = ControlField::from_function(g, [&](double t) { return om1 * std::pow(std::sin(kPi * t / tf), 2); });
  const auto s2 = ControlField::from_function(g, [&](double t) { return om2 * std::pow(std::sin(kPi * t / tf), 2); });
  const auto sys = rwa_three_level({e, s1, s2, w1, w2});
  const RVector p = propagate_ket(sys.h, sys.controls, g, QuantumState::basis(3, 0)).final().populations();

  // oracle: lab-frame ladder, each field on its own transition
  auto h = [&](double t) {
    oracle::Mat m = oracle::Mat::Zero(3, 3);
    for (int i = 0; i < 3; ++i) m(i, i) = e(i);
    const double env = std::pow(std::sin(kPi * t / tf), 2);
    m(0, 1) = m(1, 0) = om1 * env * std::cos(w1 * t);
    m(1, 2) = m(2, 1) = om2 * env * std::cos(w2 * t);
    return m;
  };
  const oracle::Vec ref = oracle::rk4_schroedinger(h, oracle::Vec::Unit(3, 0), 0.0, tf, 200000);
  EXPECT_LE((p - ref.cwiseAbs2()).cwiseAbs().maxCoeff(), 1e-2);
  EXPECT_GT(p(1) + p(2), 0.05);  // the drive does something
}

TEST(ChirpedField, PlainCarrier) {
  const TimeGrid g(0.0, 2.0, 2001);
  const auto f = chirped_field(0.7, ControlField::constant(g, 1.0), 8.0, 0.0);
  for (Eigen::Index k = 0; k < f.size(); ++k) EXPECT_NEAR(f[k], 0.7 * std::cos(8.0 * g.mid(k)), 1e-15);
}

TEST(ChirpedField, ZeroCrossingsTighten) {
  const TimeGrid g(0.0, 10.0, 20001);
  const auto f = chirped_field(1.0, ControlField::constant(g, 1.0), 5.0, 0.4);
  std::vector<double> zc;
  for (Eigen::Index k = 0; k + 1 < f.size(); ++k)
    if (f[k] * f[k + 1] < 0) zc.push_back(g.mid(k));
  ASSERT_GT(zc.size(), 10u);
  for (std::size_t i = 2; i < zc.size(); ++i) EXPECT_LE(zc[i] - zc[i - 1], zc[i - 1] - zc[i - 2] + g.dt());
  EXPECT_LT(zc.back() - zc[zc.size() - 2], 0.5 * (zc[1] - zc[0]));
}

TEST(ChirpedField, UnderResolvedRefused) {
  const TimeGrid g(0.0, 10.0, 101);
  try {
    chirped_field(1.0, ControlField::constant(g, 1.0), 50.0, 1.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::under_resolved);
    EXPECT_NE(std::string(e.what()).find("nt >="), std::string::npos);
  }
}

TEST(ChirpedField, LandauZenerSweepMatchesRwaModel) {
  const double w0 = 60.0, e0 = 1.0, tf = 20.0;
  const double wl = w0 - 10.0, alpha = 0.5;  // detuning sweeps +10 -> -10
  const TimeGrid g(0.0, tf, 200001);
  const auto field = chirped_field(e0, ControlField::constant(g, 1.0), wl, alpha);
  const ControlledHamiltonian lab(0.5 * w0 * pauli::z(), {{pauli::x(), 0}});
  const RVector p = propagate_ket(lab, {field}, g, QuantumState::basis(2, 1)).final().populations();
  // oracle: RWA with instantaneous detuning w0 - (wl + 2 alpha t)
  auto h = [&](double t) {
    return oracle::Mat(0.5 * (w0 - wl - 2 * alpha * t) * oracle::sz() + 0.5 * e0 * oracle::sx());
  };
  const oracle::Vec ref = oracle::rk4_schroedinger(h, oracle::Vec::Unit(2, 1), 0.0, tf, 40000);
  EXPECT_LE((p - ref.cwiseAbs2()).cwiseAbs().maxCoeff(), 1e-2);
  EXPECT_GT(p(0), 0.2);
  EXPECT_LT(p(0), 0.95);
}
