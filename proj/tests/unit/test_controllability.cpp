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
#include "qoc/controllability/graph.hpp"
#include "qoc/controllability/systems.hpp"

using namespace qoc;

namespace {

std::vector<oracle::Mat> generators(const ControlledHamiltonian& h) {
  std::vector<oracle::Mat> g{h.drift().matrix()};
  for (int j = 0; j < h.n_controls(); ++j) g.push_back(h.control_operator(j));
  return g;
}

}  // namespace

TEST(LieRank, PauliPairIsSu2) {
  const auto r = lie_rank(ControlledHamiltonian(pauli::z(), {{pauli::x(), 0}}));
  EXPECT_EQ(r.dimension_found, 3);
  EXPECT_EQ(r.target_dimension, 3);
  EXPECT_TRUE(r.full_rank);
  EXPECT_FALSE(r.truncated);
}

TEST(LieRank, AbelianSingle) {
  const auto r = lie_rank(ControlledHamiltonian(pauli::z(), {}));
  EXPECT_EQ(r.dimension_found, 1);
  EXPECT_FALSE(r.full_rank);
}

TEST(LieRank, ZzPairWithOneDriveIsDeficient) {
  const auto h = zz_pair_one_drive();
  const auto r = lie_rank(h);
  EXPECT_FALSE(r.full_rank);
  EXPECT_EQ(r.dimension_found, oracle::closure_dimension(generators(h)));
}

TEST(LieRank, MatchesClosureOracle) {
  std::mt19937 rng(61);
  for (int n : {2, 3, 4}) {
    // sparse random controls give a mix of full and deficient cases
    for (int trial = 0; trial < 4; ++trial) {
      const oracle::Mat h0 = oracle::random_hermitian(n, rng).diagonal().asDiagonal();
      oracle::Mat h1 = oracle::Mat::Zero(n, n);
      h1(0, 1) = h1(1, 0) = 1.0;
      if (trial % 2 == 1 && n > 2) h1(n - 1, n - 2) = h1(n - 2, n - 1) = 0.7;
      const ControlledHamiltonian h(Operator(h0), {{Operator(h1), 0}});
      EXPECT_EQ(lie_rank(h).dimension_found, oracle::closure_dimension(generators(h))) << n << " " << trial;
    }
  }
}

TEST(LieRank, BasisInvariant) {
  std::mt19937 rng(62);
  for (int trial = 0; trial < 5; ++trial) {
    const auto h = trial % 2 ? ladder(4) : zz_pair_one_drive();
    const oracle::Mat v = oracle::random_unitary(4, rng);
    const ControlledHamiltonian hv(Operator(v * h.drift().matrix() * v.adjoint()),
                                   {{Operator(v * h.control_operator(0) * v.adjoint()), 0}});
    EXPECT_EQ(lie_rank(h).dimension_found, lie_rank(hv).dimension_found);
  }
}

TEST(LieRank, AddingControlNeverShrinks) {
  const auto h = zz_pair_one_drive();
  const ControlledHamiltonian more(h.drift(), {{h.couplings()[0].op, 0},
                                               {tensor_product(pauli::id(), pauli::x()), 1}});
  EXPECT_GE(lie_rank(more).dimension_found, lie_rank(h).dimension_found);
  EXPECT_TRUE(lie_rank(more).full_rank);
}

TEST(LieRank, TruncationReported) {
  const auto r = lie_rank(ladder(4), 1);
  EXPECT_TRUE(r.truncated);
  EXPECT_FALSE(r.full_rank);
  EXPECT_TRUE(lie_rank(ladder(4)).full_rank);
}

TEST(Graph, TlsOneEdge) {
  const auto g = build_graph(ControlledHamiltonian(pauli::z(), {{pauli::x(), 0}}));
  EXPECT_EQ(g.nodes.size(), 2u);
  ASSERT_EQ(g.edges.size(), 1u);
  EXPECT_NEAR(g.edges[0].frequency, 2.0, 1e-14);
  EXPECT_TRUE(graph_controllability(g).controllable);
}

TEST(Graph, CommutingControlHasNoEdges) {
  const auto g = build_graph(ControlledHamiltonian(pauli::z(), {{0.3 * pauli::z(), 0}}));
  EXPECT_TRUE(g.edges.empty());
}

TEST(Graph, EmptyControlSet) {
  const auto d = graph_controllability(build_graph(ControlledHamiltonian(pauli::z(), {})));
  EXPECT_FALSE(d.controllable);
  EXPECT_EQ(d.reason, "disconnected");
}

TEST(Graph, CoupledGroups) {
  TransitionGraph g;
  g.nodes = {{0, 0.0}, {1, 1.0}, {2, 2.5}};
  g.edges = {{0, 1, 0, 1.0, 1.0}, {1, 2, 0, 1.5, 1.0}};
  EXPECT_EQ(coupled_transitions(g).size(), 2u);
  g.edges[1].frequency = 1.0;
  const auto groups = coupled_transitions(g);
  ASSERT_EQ(groups.size(), 1u);
  EXPECT_EQ(groups[0].size(), 2u);
  g.edges[1].control = 1;  // different control: decoupled again
  EXPECT_EQ(coupled_transitions(g).size(), 2u);
}

TEST(Graph, ExchangePairConnectedButCoupled) {
  const auto h = exchange_pair_one_drive();
  const auto g = build_graph(h);
  detail::UnionFind uf(4);
  for (const auto& e : g.edges) uf.unite(e.i, e.j);
  EXPECT_EQ(uf.components, 1);  // the drive reaches every eigenstate
  const auto groups = coupled_transitions(g);
  EXPECT_EQ(groups.size(), 2u);
  for (const auto& grp : groups) EXPECT_EQ(grp.size(), 2u);
  const auto d = graph_controllability(g);
  EXPECT_FALSE(d.controllable);
  EXPECT_EQ(d.reason, "only_coupled_spanning");
}

TEST(Graph, ZzPairMissesNodes) {
  const auto d = graph_controllability(build_graph(zz_pair_one_drive()));
  EXPECT_FALSE(d.controllable);
  EXPECT_EQ(d.reason, "disconnected");
}

TEST(Graph, LadderControllableAndLieFull) {
  for (Eigen::Index n = 2; n <= 4; ++n) {
    const auto h = ladder(n);
    const auto d = graph_controllability(build_graph(h));
    EXPECT_TRUE(d.controllable) << n;
    EXPECT_EQ(d.witness.size(), std::size_t(n - 1));
    EXPECT_TRUE(lie_rank(h).full_rank) << n;
  }
  // harmonic ladder: all transitions coupled
  EXPECT_FALSE(graph_controllability(build_graph(ladder(3, 1.0, 0.0))).controllable);
}

TEST(Graph, PositiveImpliesLieFull) {
  std::mt19937 rng(63);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int positives = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + trial % 5;
    RVector e(n);
    for (int k = 0; k < n; ++k) e(k) = 3.0 * u(rng);
    const int nc = 1 + trial % 2;
    std::vector<Coupling> cs;
    for (int c = 0; c < nc; ++c) {
      CMatrix m = CMatrix::Zero(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          if (u(rng) < 0.35) m(i, j) = m(j, i) = u(rng);
      cs.push_back({Operator(m), c});
    }
    const ControlledHamiltonian h(diagonal(e), cs);
    const auto d = graph_controllability(build_graph(h));
    if (d.controllable) {
      ++positives;
      EXPECT_TRUE(lie_rank(h).full_rank) << "trial " << trial;
    }
  }
  EXPECT_GT(positives, 5);
}

TEST(Graph, ReportJsonAndDot) {
  const auto h = exchange_pair_one_drive();
  const auto g = build_graph(h);
  const auto r = analyze_controllability(h);
  const auto j = to_json(g, r);
  EXPECT_FALSE(j.at("controllable").get<bool>());
  EXPECT_TRUE(j.contains("dimension"));
  EXPECT_TRUE(j.at("witness_edges").empty());
  EXPECT_EQ(r.verdict.rfind("not established by graph test", 0), 0u);
  std::ostringstream os;
  write_dot(os, g);
  EXPECT_EQ(os.str().rfind("graph transitions {", 0), 0u);
  EXPECT_NE(os.str().find("n0 -- n"), std::string::npos);
}
