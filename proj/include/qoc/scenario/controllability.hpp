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

#include <sstream>

#include "qoc/controllability/graph.hpp"
#include "qoc/controllability/systems.hpp"
#include "qoc/scenario/common.hpp"

namespace qoc {

struct ControllabilityConfig {
  std::string name;
  ControlledHamiltonian h;
  std::optional<double> freq_tol;
};

/// system is either drift/couplings or {"builder": name, ...parameters}.
inline ControllabilityConfig parse_controllability(const nlohmann::json& cfg) {
  using namespace config;
  allow_sections(cfg, {"system", "params"}, "controllability");
  ControllabilityConfig c;
  const json& s = at(cfg, "system", "controllability");
  require_object(s, "system");
  if (s.contains("builder")) {
    const std::string b = string_or(s, "builder", "", "system");
    c.name = b;
    if (b == "exchange_pair_one_drive") {
      check_keys(s, {"builder", "omega", "J"}, "system");
      c.h = exchange_pair_one_drive(number_or(s, "omega", 1.0, "system"), number_or(s, "J", 0.1, "system"));
    } else if (b == "zz_pair_one_drive") {
      check_keys(s, {"builder", "omega1", "omega2", "J"}, "system");
      c.h = zz_pair_one_drive(number_or(s, "omega1", 1.0, "system"), number_or(s, "omega2", 1.3, "system"),
                              number_or(s, "J", 0.1, "system"));
    } else if (b == "ladder") {
      check_keys(s, {"builder", "n", "omega", "anharmonicity"}, "system");
      const long n = integer(s, "n", "system");
      if (n < 2) fail("system", "ladder needs n >= 2");
      c.h = ladder(n, number_or(s, "omega", 1.0, "system"), number_or(s, "anharmonicity", -0.07, "system"));
    } else {
      fail("system", "unknown builder '" + b + "' (exchange_pair_one_drive, zz_pair_one_drive, ladder)");
    }
  } else {
    const auto spec = system(s, "system");
    if (!spec.jumps.empty()) fail("system", "controllability takes a closed system");
    c.name = "custom";
    c.h = spec.h;
  }
  const json p = section(cfg, "params");
  check_keys(p, {"freq_tol"}, "params");
  if (p.contains("freq_tol")) c.freq_tol = number(p, "freq_tol", "params");
  return c;
}

inline ResultBundle run_controllability(const ControllabilityConfig& c, const RunContext&) {
  ResultBundle b;
  b.scenario = "controllability";
  const auto g = build_graph(c.h);
  const auto r = analyze_controllability(c.h, c.freq_tol);
  b.report = to_json(g, r);
  (*b.report)["system"] = c.name;
  b.results = *b.report;
  std::ostringstream os;
  write_dot(os, g, c.freq_tol);
  b.dot = os.str();
  return b;
}

}  // namespace qoc
