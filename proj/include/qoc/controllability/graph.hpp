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
#include <numeric>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>
#include <json.hpp>

#include "qoc/controllability/lie_rank.hpp"

namespace qoc {

struct GraphNode {
  int index = 0;
  double energy = 0.0;
};

struct GraphEdge {
  int i = 0, j = 0;
  int control = 0;
  double frequency = 0.0;  // |E_i - E_j|
  double coupling = 0.0;   // |<i|H_c|j>|
};

struct TransitionGraph {
  std::vector<GraphNode> nodes;
  std::vector<GraphEdge> edges;

  double spectral_span() const {
    if (nodes.empty()) return 0.0;
    const auto [lo, hi] = std::minmax_element(nodes.begin(), nodes.end(), [](const auto& a, const auto& b) {
      return a.energy < b.energy;
    });
    return hi->energy - lo->energy;
  }

  double default_freq_tol() const { return 1e-9 * std::max(spectral_span(), 1e-300); }
};

/// Nodes are the eigenstates of the full drift (couplings included); one
/// edge per control and pair with |<i|H_c|j>| > edge_rel_tol ||H_c||.
inline TransitionGraph build_graph(const ControlledHamiltonian& h, double edge_rel_tol = 1e-12) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(h.drift().matrix());
  const RVector& e = es.eigenvalues();
  const CMatrix& v = es.eigenvectors();
  TransitionGraph g;
  for (Eigen::Index k = 0; k < e.size(); ++k) g.nodes.push_back({int(k), e(k)});
  for (int c = 0; c < h.n_controls(); ++c) {
    const CMatrix& hc = h.control_operator(c);
    const CMatrix m = v.adjoint() * hc * v;
    const double thr = edge_rel_tol * hc.norm();
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (Eigen::Index j = i + 1; j < m.cols(); ++j)
        if (std::abs(m(i, j)) > thr) g.edges.push_back({int(i), int(j), c, std::abs(e(i) - e(j)), std::abs(m(i, j))});
  }
  return g;
}

/// Partition of edge indices: two edges are coupled iff they share the
/// control and their frequencies differ by at most freq_tol (closed
/// transitively).
inline std::vector<std::vector<int>> coupled_transitions(const TransitionGraph& g, std::optional<double> freq_tol = {}) {
  const double tol = freq_tol.value_or(g.default_freq_tol());
  const int n = int(g.edges.size());
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[std::size_t(a)] != a) a = parent[std::size_t(a)] = parent[std::size_t(parent[std::size_t(a)])];
    return a;
  };
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      const auto& x = g.edges[std::size_t(a)];
      const auto& y = g.edges[std::size_t(b)];
      if (x.control == y.control && std::abs(x.frequency - y.frequency) <= tol) parent[std::size_t(find(a))] = find(b);
    }
  std::vector<std::vector<int>> groups;
  std::vector<int> slot(std::size_t(n), -1);
  for (int a = 0; a < n; ++a) {
    const int r = find(a);
    if (slot[std::size_t(r)] < 0) {
      slot[std::size_t(r)] = int(groups.size());
      groups.emplace_back();
    }
    groups[std::size_t(slot[std::size_t(r)])].push_back(a);
  }
  return groups;
}

struct GraphDecision {
  bool controllable = false;
  std::string reason;          // "", "disconnected" or "only_coupled_spanning"
  std::vector<int> witness;    // edge indices of a spanning tree
};

namespace detail {

struct UnionFind {
  std::vector<int> p;
  int components;
  explicit UnionFind(int n) : p(static_cast<std::size_t>(n)), components(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int a) const {
    while (p[std::size_t(a)] != a) a = p[std::size_t(a)];
    return a;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    p[std::size_t(a)] = b;
    --components;
    return true;
  }
};

inline bool spanning_search(const TransitionGraph& g, const std::vector<std::vector<int>>& groups, std::size_t gi,
                            UnionFind uf, std::vector<int>& chosen) {
  if (uf.components == 1) return true;
  if (groups.size() - gi < std::size_t(uf.components - 1)) return false;
  for (int e : groups[gi]) {
    const auto& edge = g.edges[std::size_t(e)];
    UnionFind next = uf;
    if (!next.unite(edge.i, edge.j)) continue;
    chosen.push_back(e);
    if (spanning_search(g, groups, gi + 1, next, chosen)) return true;
    chosen.pop_back();
  }
  return spanning_search(g, groups, gi + 1, uf, chosen);
}

}  // namespace detail

/// Sufficient test: a connected subgraph on all nodes that uses at most
/// one edge from each coupled group. Backtracking over the groups.
inline GraphDecision graph_controllability(const TransitionGraph& g, std::optional<double> freq_tol = {}) {
  GraphDecision d;
  const int n = int(g.nodes.size());
  if (n <= 1) {
    d.controllable = true;
    return d;
  }
  detail::UnionFind all(n);
  for (const auto& e : g.edges) all.unite(e.i, e.j);
  if (all.components > 1) {
    d.reason = "disconnected";
    return d;
  }
  const auto groups = coupled_transitions(g, freq_tol);
  std::vector<int> chosen;
  if (detail::spanning_search(g, groups, 0, detail::UnionFind(n), chosen)) {
    d.controllable = true;
    d.witness = chosen;
  } else {
    d.reason = "only_coupled_spanning";
  }
  return d;
}

/// Graph decision plus the Lie-rank fallback. A failed graph test is
/// reported as "not established by graph test", since the criterion is
/// only sufficient.
struct ControllabilityReport {
  GraphDecision graph;
  LieAlgebraReport lie;
  std::string verdict;
};

inline ControllabilityReport analyze_controllability(const ControlledHamiltonian& h,
                                                     std::optional<double> freq_tol = {}) {
  ControllabilityReport r;
  const auto g = build_graph(h);
  r.graph = graph_controllability(g, freq_tol);
  r.lie = lie_rank(h);
  if (r.graph.controllable) {
    r.verdict = "controllable";
  } else {
    r.verdict = std::string("not established by graph test; lie_rank ") +
                (r.lie.full_rank ? "full" : (r.lie.truncated ? "truncated" : "deficient"));
  }
  return r;
}

inline nlohmann::json to_json(const LieAlgebraReport& r) {
  return {{"dimension_found", r.dimension_found},
          {"target_dimension", r.target_dimension},
          {"full_rank", r.full_rank},
          {"depth_reached", r.depth_reached},
          {"truncated", r.truncated}};
}

inline nlohmann::json to_json(const TransitionGraph& g, const ControllabilityReport& r) {
  nlohmann::json w = nlohmann::json::array();
  for (int e : r.graph.witness) {
    const auto& x = g.edges[std::size_t(e)];
    w.push_back({{"i", x.i}, {"j", x.j}, {"control", x.control}, {"frequency", x.frequency}});
  }
  nlohmann::json out = {{"controllable", r.graph.controllable},
                        {"dimension", r.lie.dimension_found},
                        {"witness_edges", w},
                        {"lie_rank", to_json(r.lie)},
                        {"verdict", r.verdict}};
  if (!r.graph.reason.empty()) out["reason"] = r.graph.reason;
  return out;
}

/// Graphviz DOT; edges labeled with control index and frequency, coupled
/// groups share a color index.
inline void write_dot(std::ostream& os, const TransitionGraph& g, std::optional<double> freq_tol = {}) {
  const auto groups = coupled_transitions(g, freq_tol);
  std::vector<int> group_of(g.edges.size());
  for (std::size_t k = 0; k < groups.size(); ++k)
    for (int e : groups[k]) group_of[std::size_t(e)] = int(k);
  os << "graph transitions {\n";
  for (const auto& n : g.nodes) os << "  n" << n.index << " [label=\"" << n.index << " E=" << n.energy << "\"];\n";
  for (std::size_t k = 0; k < g.edges.size(); ++k) {
    const auto& e = g.edges[k];
    os << "  n" << e.i << " -- n" << e.j << " [label=\"u" << e.control << " f=" << e.frequency
       << "\", colorscheme=set312, color=" << (group_of[k] % 12) + 1 << "];\n";
  }
  os << "}\n";
}

}  // namespace qoc
