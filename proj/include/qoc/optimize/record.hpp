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

#include <chrono>
#include <cmath>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qoc/dynamics/time_grid.hpp"

namespace qoc {

enum class ConvergedReason {
  j_threshold,
  dj_threshold,
  max_iters,
  budget_exhausted,
  no_parameters,
  disabled,
  line_search_failed,
};

inline std::string to_string(ConvergedReason r) {
  switch (r) {
    case ConvergedReason::j_threshold: return "j_threshold";
    case ConvergedReason::dj_threshold: return "dj_threshold";
    case ConvergedReason::max_iters: return "max_iters";
    case ConvergedReason::budget_exhausted: return "budget_exhausted";
    case ConvergedReason::no_parameters: return "no_parameters";
    case ConvergedReason::disabled: return "disabled";
    case ConvergedReason::line_search_failed: return "line_search_failed";
  }
  return "unknown";
}

struct IterationInfo {
  int iter = 0;
  double j_tf = 0.0;
  double running_cost = 0.0;
  double wall_ms = 0.0;
  std::string phase;
};

struct OptimizationRecord {
  std::vector<IterationInfo> iterations;  // entry 0 is the guess
  std::vector<ControlField> final_fields;
  ConvergedReason reason = ConvergedReason::max_iters;
  long propagations = 0;  // ensemble forward or backward sweeps

  double final_j() const { return iterations.empty() ? NAN : iterations.back().j_tf; }

  /// Iterations performed past the guess.
  int n_iterations() const { return int(iterations.size()) - 1; }

  /// Largest J(i+1) - J(i) within one phase.
  double max_increase(const std::string& phase = "") const {
    double worst = -INFINITY;
    for (std::size_t i = 1; i < iterations.size(); ++i) {
      if (!phase.empty() && iterations[i].phase != phase) continue;
      if (iterations[i].phase != iterations[i - 1].phase) continue;
      worst = std::max(worst, iterations[i].j_tf - iterations[i - 1].j_tf);
    }
    return worst;
  }

  bool monotone(double slack = 1e-12, const std::string& phase = "") const {
    return !(max_increase(phase) > slack);
  }

  void append(const OptimizationRecord& other) {
    for (const auto& it : other.iterations) iterations.push_back(it);
    propagations += other.propagations;
  }
};

/// Milliseconds since construction.
class Stopwatch {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0_).count();
  }

 private:
  std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

/// One JSON object per line: {iter, J_tf, running_cost, wall_ms, phase}.
inline void write_iterations_jsonl(std::ostream& os, const OptimizationRecord& r) {
  for (const auto& it : r.iterations) {
    nlohmann::json j = {{"iter", it.iter},
                        {"J_tf", it.j_tf},
                        {"running_cost", it.running_cost},
                        {"wall_ms", it.wall_ms},
                        {"phase", it.phase}};
    os << j.dump() << '\n';
  }
}

/// Midpoint time, then one column per control.
inline void write_fields_csv(std::ostream& os, const std::vector<ControlField>& fields) {
  os << "time";
  for (std::size_t j = 0; j < fields.size(); ++j) os << ",u" << j;
  os << '\n';
  if (fields.empty()) return;
  os.precision(17);
  const auto& g = fields.front().grid();
  for (Eigen::Index k = 0; k < g.n_mid(); ++k) {
    os << g.mid(k);
    for (const auto& f : fields) os << ',' << f[k];
    os << '\n';
  }
}

}  // namespace qoc
