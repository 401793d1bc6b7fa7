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

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <variant>

#include "qoc/scenario/controllability.hpp"
#include "qoc/scenario/gate_opt.hpp"
#include "qoc/scenario/physics.hpp"
#include "qoc/scenario/qubit_reset.hpp"

namespace qoc {

/// A scenario file, parsed and validated. Holds no numerical results.
struct ScenarioConfig {
  std::string scenario;
  std::vector<std::string> outputs;
  std::variant<RabiConfig, LandauZenerConfig, StirapConfig, BichromaticConfig, QubitResetConfig, GateOptConfig,
               ControllabilityConfig>
      body;
};

inline ScenarioConfig parse_scenario(const nlohmann::json& cfg) {
  using namespace config;
  check_keys(cfg, {"schema_version", "scenario", "description", "system", "grid", "fields", "cost", "optimizer",
                   "outputs", "params"},
             "config");
  if (!cfg.contains("schema_version") || !cfg.at("schema_version").is_number_integer() ||
      cfg.at("schema_version").get<long>() != 1) {
    fail("config", "schema_version must be 1");
  }
  if (cfg.contains("description") && !cfg.at("description").is_string()) fail("config", "description is a string");
  ScenarioConfig s;
  s.scenario = string_or(cfg, "scenario", "", "config");
  s.outputs = validate_outputs(cfg.contains("outputs") ? cfg.at("outputs") : json());
  if (s.scenario == "rabi") s.body = parse_rabi(cfg);
  else if (s.scenario == "landau_zener") s.body = parse_landau_zener(cfg);
  else if (s.scenario == "stirap") s.body = parse_stirap(cfg);
  else if (s.scenario == "bichromatic") s.body = parse_bichromatic(cfg);
  else if (s.scenario == "qubit_reset") s.body = parse_qubit_reset(cfg);
  else if (s.scenario == "gate_opt") s.body = parse_gate_opt(cfg);
  else if (s.scenario == "controllability") s.body = parse_controllability(cfg);
  else fail("config", "unknown scenario '" + s.scenario + "'");
  return s;
}

inline nlohmann::json read_json_file(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) throw Error(ErrorCode::io, "cannot read " + path.string());
  try {
    return nlohmann::json::parse(is);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::schema, path.string() + ": " + e.what());
  }
}

/// Fields CSV as written by write_fields_csv: "time,u0,u1,..." on the
/// midpoints of `g`.
inline std::vector<ControlField> read_fields_csv(std::istream& is, const TimeGrid& g) {
  std::string line;
  if (!std::getline(is, line) || line.rfind("time", 0) != 0) throw Error(ErrorCode::schema, "fields CSV: bad header");
  const auto n = std::count(line.begin(), line.end(), ',');
  if (n < 1) throw Error(ErrorCode::schema, "fields CSV: no control columns");
  std::vector<std::vector<double>> cols(static_cast<std::size_t>(n));
  Eigen::Index k = 0;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string cell;
    std::vector<double> row;
    while (std::getline(ss, cell, ',')) {
      try {
        row.push_back(std::stod(cell));
      } catch (const std::exception&) {
        throw Error(ErrorCode::schema, "fields CSV: bad number '" + cell + "'");
      }
    }
    if (row.size() != std::size_t(n + 1)) throw Error(ErrorCode::schema, "fields CSV: ragged row");
    if (k >= g.n_mid() || std::abs(row[0] - g.mid(k)) > 1e-9 * std::max(1.0, std::abs(g.mid(k)))) {
      throw Error(ErrorCode::invalid_argument, "fields CSV: times do not match the config grid midpoints");
    }
    for (std::size_t j = 0; j < cols.size(); ++j) cols[j].push_back(row[j + 1]);
    ++k;
  }
  if (k != g.n_mid()) throw Error(ErrorCode::invalid_argument, "fields CSV: wrong number of rows");
  std::vector<ControlField> out;
  for (const auto& c : cols) out.emplace_back(g, Eigen::Map<const RVector>(c.data(), Eigen::Index(c.size())));
  return out;
}

/// Runs a parsed scenario. Throws qoc::Error; nothing is written.
inline ResultBundle run_scenario(const ScenarioConfig& s, const RunContext& ctx = {}) {
  if (ctx.seed && !std::holds_alternative<GateOptConfig>(s.body)) {
    throw Error(ErrorCode::invalid_argument, "--seed-field applies to gate_opt scenarios only");
  }
  ResultBundle b = std::visit(
      [&](const auto& c) -> ResultBundle {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, RabiConfig>) return run_rabi(c, ctx);
        else if constexpr (std::is_same_v<T, LandauZenerConfig>) return run_landau_zener(c, ctx);
        else if constexpr (std::is_same_v<T, StirapConfig>) return run_stirap(c, ctx);
        else if constexpr (std::is_same_v<T, BichromaticConfig>) return run_bichromatic(c, ctx);
        else if constexpr (std::is_same_v<T, QubitResetConfig>) return run_qubit_reset(c, ctx);
        else if constexpr (std::is_same_v<T, GateOptConfig>) return run_gate_opt(c, ctx);
        else return run_controllability(c, ctx);
      },
      s.body);
  if (!b.invariants.norm_ok() || !b.invariants.positivity_ok()) {
    throw Error(ErrorCode::numerics, "dynamics invariant violated: normalization defect " +
                                         format_number(b.invariants.max_normalization_defect) + ", min eigenvalue " +
                                         format_number(b.invariants.min_eigenvalue));
  }
  return b;
}

/// Config file in, artifacts out. The seed file, when given, replaces the
/// guess fields of a gate_opt scenario.
inline ResultBundle run_scenario_file(const std::filesystem::path& config_path, const std::filesystem::path& out_dir,
                                      const std::optional<std::filesystem::path>& seed_path = {}, LogFn log = {}) {
  const ScenarioConfig s = parse_scenario(read_json_file(config_path));
  RunContext ctx{std::move(log), {}};
  if (seed_path) {
    const auto* g = std::get_if<GateOptConfig>(&s.body);
    if (!g) throw Error(ErrorCode::invalid_argument, "--seed-field applies to gate_opt scenarios only");
    std::ifstream is(*seed_path);
    if (!is) throw Error(ErrorCode::io, "cannot read " + seed_path->string());
    ctx.seed = read_fields_csv(is, g->grid);
  }
  ResultBundle b = run_scenario(s, ctx);
  write_bundle(b, s.outputs, out_dir);
  return b;
}

/// {"error": {"kind": ..., "message": ...}}
inline nlohmann::json error_json(std::string_view kind, const std::string& message) {
  return {{"error", {{"kind", std::string(kind)}, {"message", message}}}};
}

/// Process exit code per error kind; 0 is success.
inline int exit_code(ErrorCode c) {
  switch (c) {
    case ErrorCode::schema: return 2;
    case ErrorCode::io: return 3;
    case ErrorCode::numerics:
    case ErrorCode::under_resolved:
    case ErrorCode::degenerate: return 4;
    default: return 5;
  }
}

}  // namespace qoc
