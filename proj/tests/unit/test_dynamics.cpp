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
#include <sstream>

#include "oracles/oracles.hpp"
#include "qoc/core/bloch.hpp"
#include "qoc/dynamics/bloch_precession.hpp"
#include "qoc/dynamics/propagate.hpp"

using namespace qoc;

namespace {

ControlledHamiltonian rwa_tls() {
  // H = -1/2 u sigma_x, resonant
  return ControlledHamiltonian(Operator::zero(2), {{-0.5 * pauli::x(), 0}});
}

}  // namespace

TEST(TimeGridTest, StaggeredSamples) {
  const TimeGrid g(0.0, 1.0, 11);
  EXPECT_DOUBLE_EQ(g.dt(), 0.1);
  EXPECT_EQ(g.n_mid(), 10);
  EXPECT_DOUBLE_EQ(g.mid(0), 0.05);
  EXPECT_THROW(ControlField(g, RVector::Zero(11)), Error);
  EXPECT_THROW(TimeGrid(0.0, 1.0, 1), Error);
}

TEST(TimeGridTest, DerivativeIsExactForQuadratics) {
  const TimeGrid g(0.0, 2.0, 21);
  const auto f = ControlField::from_function(g, [](double t) { return 3 * t * t - t; });
  const auto d = f.derivative();
  for (Eigen::Index k = 0; k < d.size(); ++k) EXPECT_NEAR(d[k], 6 * d.time(k) - 1, 1e-12);
}

TEST(PropagateKet, StationaryState) {
  const double w0 = 1.3;
  const ControlledHamiltonian h(0.5 * w0 * pauli::z());
  const TimeGrid g(0.0, 5.0, 101);
  const auto tr = propagate_ket(h, {}, g, QuantumState::basis(2, 0));
  for (Eigen::Index k = 0; k < g.nt(); ++k) {
    const CVector& v = tr.states[std::size_t(k)].ket_vector();
    EXPECT_NEAR(std::abs(v(0)), 1.0, 1e-13);
    EXPECT_LE(std::abs(v(0) - std::exp(-kI * w0 * g.t(k) / 2.0)), 1e-12);
  }
}

TEST(PropagateKet, RabiClosedForm) {
  const double rabi = 2.0;
  const TimeGrid g(0.0, 10 * 2 * kPi / rabi, 2001);
  const auto tr = propagate_ket(rwa_tls(), {ControlField::constant(g, rabi)}, g,
                                QuantumState::basis(2, 0));
  double err = 0.0;
  for (Eigen::Index k = 0; k < g.nt(); ++k) {
    const double p1 = tr.states[std::size_t(k)].populations()(1);
    err = std::max(err, std::abs(p1 - std::pow(std::sin(rabi * g.t(k) / 2), 2)));
  }
  EXPECT_LE(err, 1e-6);
  EXPECT_LE(tr.max_normalization_defect(), 1e-10);
}

TEST(PropagateKet, ControlCountAndGridChecked) {
  const TimeGrid g(0.0, 1.0, 11);
  EXPECT_THROW(propagate_ket(rwa_tls(), {}, g, QuantumState::basis(2, 0)), Error);
  const TimeGrid other(0.0, 2.0, 11);
  EXPECT_THROW(propagate_ket(rwa_tls(), {ControlField::zeros(other)}, g,
                             QuantumState::basis(2, 0)),
               Error);
}

TEST(PropagateKet, ForwardBackwardRoundTrip) {
  std::mt19937 rng(11);
  const ControlledHamiltonian h(Operator(oracle::random_hermitian(3, rng)),
                                {{Operator(oracle::random_hermitian(3, rng)), 0}});
  const TimeGrid g(0.0, 4.0, 1001);
  std::normal_distribution<double> n;
  RVector s(g.n_mid());
  for (Eigen::Index k = 0; k < s.size(); ++k) s(k) = n(rng);
  const std::vector<ControlField> u{ControlField(g, s)};
  const auto psi0 = QuantumState::ket(oracle::random_ket(3, rng));
  const auto fw = propagate_ket(h, u, g, psi0);
  const auto bw = propagate_ket(h, u, g, fw.final(), Direction::backward);
  EXPECT_LE((bw.initial().ket_vector() - psi0.ket_vector()).norm(), 1e-9);
  EXPECT_LE(fw.max_normalization_defect(), 1e-9);
}

TEST(PropagateKet, MatchesRk4WithTimeDependentDrive) {
  // oracle: fine RK4 on the continuous drive; library: midpoint sampling
  const double w0 = 1.0;
  auto u = [](double t) { return 0.7 * std::sin(1.1 * t); };
  const ControlledHamiltonian h(0.5 * w0 * pauli::z(), {{pauli::x(), 0}});
  const TimeGrid g(0.0, 6.0, 6001);
  const auto tr = propagate_ket(h, {ControlField::from_function(g, u)}, g,
                                QuantumState::basis(2, 0));
  const oracle::Vec ref = oracle::rk4_schroedinger(
      [&](double t) { return oracle::Mat(0.5 * w0 * oracle::sz() + u(t) * oracle::sx()); },
      oracle::Vec::Unit(2, 0), 0.0, 6.0, 60000);
  EXPECT_LE(std::abs(std::abs(tr.final().ket_vector().dot(ref)) - 1.0), 1e-7);
}

TEST(PropagateKet, SecondOrderConvergence) {
  auto u = [](double t) { return 1.0 + 0.5 * std::cos(2.0 * t); };
  const ControlledHamiltonian h(0.4 * pauli::z(), {{-0.5 * pauli::x(), 0}});
  auto final_state = [&](Eigen::Index nt) {
    const TimeGrid g(0.0, 5.0, nt);
    return propagate_ket(h, {ControlField::from_function(g, u)}, g, QuantumState::basis(2, 0))
        .final()
        .ket_vector();
  };
  const CVector ref = final_state(64001);
  const double e1 = (final_state(201) - ref).norm();
  const double e2 = (final_state(401) - ref).norm();
  EXPECT_NEAR(e1 / e2, 4.0, 0.2);
}

TEST(PropagateDensity, AmplitudeDecay) {
  const double gamma = 0.7;
  const Liouvillian l(ControlledHamiltonian(Operator::zero(2)),
                      {std::sqrt(gamma) * pauli::minus()});
  const TimeGrid g(0.0, 5.0, 501);
  const auto tr = propagate_density(l, {}, g, QuantumState::basis(2, 1).to_density());
  for (Eigen::Index k = 0; k < g.nt(); ++k)
    EXPECT_NEAR(tr.states[std::size_t(k)].populations()(1), std::exp(-gamma * g.t(k)), 1e-8);
  EXPECT_LE(tr.max_normalization_defect(), 1e-10);
  EXPECT_GE(tr.min_eigenvalue(), -1e-9);
}

TEST(PropagateDensity, PureDephasing) {
  const double gamma = 0.3;
  const Liouvillian l(ControlledHamiltonian(Operator::zero(2)),
                      {std::sqrt(gamma) * pauli::z()});
  CMatrix rho(2, 2);
  rho << 0.6, cplx(0.2, 0.3), cplx(0.2, -0.3), 0.4;
  const TimeGrid g(0.0, 3.0, 301);
  const auto tr = propagate_density(l, {}, g, QuantumState::density(rho));
  // D[sqrt(g) sigma_z] damps coherences at 2g: g sz rho sz - g rho
  for (Eigen::Index k = 0; k < g.nt(); ++k) {
    const CMatrix& r = tr.states[std::size_t(k)].rho();
    EXPECT_NEAR(std::abs(r(0, 1)), std::abs(rho(0, 1)) * std::exp(-2 * gamma * g.t(k)), 1e-10);
    EXPECT_NEAR(r(0, 0).real(), 0.6, 1e-12);
  }
  const oracle::Mat ref = oracle::rk4_lindblad(
      [](double) { return oracle::Mat::Zero(2, 2); }, {std::sqrt(gamma) * oracle::sz()}, rho, 0.0,
      3.0, 3000);
  EXPECT_LE((tr.final().rho() - ref).cwiseAbs().maxCoeff(), 1e-10);
}

TEST(PropagateDensity, UnitaryLimitMatchesKet) {
  std::mt19937 rng(12);
  const ControlledHamiltonian h(Operator(oracle::random_hermitian(3, rng)),
                                {{Operator(oracle::random_hermitian(3, rng)), 0}});
  const TimeGrid g(0.0, 2.0, 201);
  const auto u = std::vector<ControlField>{ControlField::from_function(g, [](double t) { return std::sin(t); })};
  const auto psi0 = QuantumState::ket(oracle::random_ket(3, rng));
  const auto k = propagate_ket(h, u, g, psi0);
  const auto d = propagate_density(Liouvillian(h, {}), u, g, psi0.to_density());
  for (std::size_t i = 0; i < k.states.size(); ++i)
    EXPECT_LE((k.states[i].density_matrix() - d.states[i].rho()).cwiseAbs().maxCoeff(), 1e-10);
}

TEST(PropagateDensity, MatchesRk4Lindblad) {
  std::mt19937 rng(13);
  const oracle::Mat h0 = oracle::random_hermitian(3, rng), h1 = oracle::random_hermitian(3, rng);
  const oracle::Mat l0 = 0.3 * oracle::random_hermitian(3, rng);
  oracle::Mat l1 = oracle::Mat::Zero(3, 3);
  l1(0, 2) = 0.5;
  auto u = [](double t) { return std::cos(0.8 * t); };
  const Liouvillian l(ControlledHamiltonian(Operator(h0), {{Operator(h1), 0}}),
                      {Operator(l0), Operator(l1)});
  const TimeGrid g(0.0, 2.0, 4001);
  const oracle::Mat rho0 = oracle::random_density(3, rng);
  const auto tr = propagate_density(l, {ControlField::from_function(g, u)}, g,
                                    QuantumState::density(rho0));
  const oracle::Mat ref = oracle::rk4_lindblad([&](double t) { return oracle::Mat(h0 + u(t) * h1); },
                                               {l0, l1}, rho0, 0.0, 2.0, 20000);
  EXPECT_LE((tr.final().rho() - ref).cwiseAbs().maxCoeff(), 1e-6);
}

TEST(PropagateDensity, BackwardIsHeisenbergAdjoint) {
  // tr(O rho(T)) == tr(O(0) rho0) where O(0) is the backward-propagated O
  std::mt19937 rng(14);
  const Liouvillian l(ControlledHamiltonian(Operator(oracle::random_hermitian(2, rng)),
                                            {{pauli::x(), 0}}),
                      {0.4 * pauli::minus(), 0.2 * pauli::z()});
  const TimeGrid g(0.0, 1.5, 51);
  const std::vector<ControlField> u{ControlField::from_function(g, [](double t) { return t; })};
  const auto rho0 = QuantumState::density(oracle::random_density(2, rng));
  const CMatrix obs = oracle::random_hermitian(2, rng);
  const auto fw = propagate_density(l, u, g, rho0);
  const auto bw = propagate_density(l, u, g, QuantumState::unchecked_density(obs), Direction::backward);
  EXPECT_NEAR((obs * fw.final().rho()).trace().real(),
              (bw.initial().rho() * rho0.rho()).trace().real(), 1e-12);
}

TEST(PropagateDensity, KetInputNeedsConversion) {
  const Liouvillian l(ControlledHamiltonian(Operator::zero(2)), {});
  const TimeGrid g(0.0, 1.0, 3);
  try {
    propagate_density(l, {}, g, QuantumState::basis(2, 0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::convert_first);
  }
}

TEST(Expectation, Basics) {
  EXPECT_NEAR(expectation(pauli::z(), QuantumState::basis(2, 0)), 1.0, 1e-15);
  EXPECT_NEAR(expectation(pauli::x(), QuantumState::maximally_mixed(2)), 0.0, 1e-15);
  std::mt19937 rng(15);
  for (int i = 0; i < 10; ++i) {
    const Operator a(oracle::random_hermitian(4, rng));
    const auto rho = QuantumState::density(oracle::random_density(4, rng));
    EXPECT_LE(std::abs(expectation_complex(a, rho).imag()), 1e-13);
    EXPECT_LE(std::abs(expectation_complex(a, QuantumState::ket(oracle::random_ket(4, rng))).imag()), 1e-13);
  }
  EXPECT_THROW(expectation(pauli::x(), QuantumState::basis(3, 0)), Error);
}

TEST(BlochPrecession, AboutZ) {
  const double w = 0.9;
  const TimeGrid g(0.0, 4.0, 41);
  const auto r = bloch_precession([&](double) { return Eigen::Vector3d(0, 0, w); },
                                  Eigen::Vector3d(1, 0, 0), g);
  for (Eigen::Index k = 0; k < g.nt(); ++k) {
    const auto& v = r[std::size_t(k)];
    EXPECT_NEAR(v(0), std::cos(w * g.t(k)), 1e-12);
    EXPECT_NEAR(std::abs(v(1)), std::abs(std::sin(w * g.t(k))), 1e-12);
    EXPECT_NEAR(v(2), 0.0, 1e-14);
  }
}

TEST(BlochPrecession, ParallelIsFixedPoint) {
  const TimeGrid g(0.0, 4.0, 41);
  const Eigen::Vector3d om(0.3, -0.2, 0.5);
  const auto r = bloch_precession([&](double) { return om; }, 2.0 * om, g);
  EXPECT_LE((r.back() - 2.0 * om).norm(), 1e-14);
}

TEST(BlochPrecession, MatchesKetPropagation) {
  auto om = [](double t) {
    return Eigen::Vector3d(0.8 * std::sin(t), 0.3, 0.5 + 0.2 * t);
  };
  const TimeGrid g(0.0, 5.0, 2001);
  // H = -1/2 Omega . sigma
  const ControlledHamiltonian h(Operator::zero(2), {{-0.5 * pauli::x(), 0},
                                                    {-0.5 * pauli::y(), 1},
                                                    {-0.5 * pauli::z(), 2}});
  std::vector<ControlField> u;
  for (int j = 0; j < 3; ++j) u.push_back(ControlField::from_function(g, [&](double t) { return om(t)(j); }));
  const auto tr = propagate_ket(h, u, g, QuantumState::basis(2, 0));
  const auto r = bloch_precession(om, Eigen::Vector3d(0, 0, 1), g);
  double norm_drift = 0.0;
  for (Eigen::Index k = 0; k < g.nt(); ++k) {
    EXPECT_LE((r[std::size_t(k)] - pauli_bloch_vector(tr.states[std::size_t(k)])).norm(), 1e-8);
    norm_drift = std::max(norm_drift, std::abs(r[std::size_t(k)].norm() - 1.0));
  }
  EXPECT_LE(norm_drift, 1e-9);
}

TEST(TrajectoryCsv, Columns) {
  const TimeGrid g(0.0, 1.0, 3);
  const auto tr = propagate_ket(ControlledHamiltonian(pauli::z()), {}, g, QuantumState::basis(2, 0));
  std::ostringstream os;
  write_trajectory_csv(os, tr, {{"sz", pauli::z()}});
  std::string header;
  std::istringstream is(os.str());
  std::getline(is, header);
  EXPECT_EQ(header, "time,P0,P1,sz");
}
