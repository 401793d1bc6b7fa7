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

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qoc/scenario/bundle.hpp"
#include "qoc/scenario/config.hpp"

namespace qoc {

/// Progress messages from long runs; the CLI routes them to its logger.
using LogFn = std::function<void(const std::string&)>;

struct RunContext {
  LogFn log;
  /// Guess override read from --seed-field.
  std::optional<std::vector<ControlField>> seed;

  void info(const std::string& m) const {
    if (log) log(m);
  }
};

namespace config {

/// Top-level keys a scenario may use besides schema_version, scenario,
/// description and outputs.
inline void allow_sections(const json& cfg, std::initializer_list<const char*> sections,
                           const std::string& scenario) {
  static const std::set<std::string> common = {"schema_version", "scenario", "description", "outputs"};
  for (const auto& [k, v] : cfg.items()) {
    if (common.count(k)) continue;
    if (std::none_of(sections.begin(), sections.end(), [&](const char* s) { return k == s; })) {
      fail(scenario, "section '" + k + "' is not used by this scenario");
    }
  }
}

inline json section(const json& cfg, const char* key) {
  return cfg.contains(key) ? cfg.at(key) : json::object();
}

}  // namespace config

/// Ket trajectories are cheap to keep; used by the runners for the
/// invariant log and the trajectory CSV.
inline Trajectory track(InvariantLog& log, Trajectory tr) {
  log.add(tr);
  return tr;
}

}  // namespace qoc
