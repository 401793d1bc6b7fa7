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
#include <charconv>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qoc/dynamics/propagate.hpp"
#include "qoc/optimize/record.hpp"

namespace qoc {

/// Shortest round-trip text for a double; identical inputs give identical
/// bytes.
inline std::string format_number(double x) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, r.ptr);
}

/// Small column table. Cells are numbers or strings.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<nlohmann::json>> rows;

  void add(std::vector<nlohmann::json> row) {
    if (row.size() != columns.size()) throw Error(ErrorCode::invalid_argument, "Table: row width");
    rows.push_back(std::move(row));
  }

  std::size_t column(const std::string& name) const {
    for (std::size_t c = 0; c < columns.size(); ++c)
      if (columns[c] == name) return c;
    throw Error(ErrorCode::invalid_argument, "Table: no column '" + name + "'");
  }
};

inline void write_csv(std::ostream& os, const Table& t) {
  for (std::size_t c = 0; c < t.columns.size(); ++c) os << (c ? "," : "") << t.columns[c];
  os << "\n";
  for (const auto& row : t.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) os << ",";
      const auto& v = row[c];
      if (v.is_string()) os << v.get<std::string>();
      else if (v.is_number_integer()) os << v.get<long long>();
      else if (v.is_boolean()) os << (v.get<bool>() ? "true" : "false");
      else os << format_number(v.get<double>());
    }
    os << "\n";
  }
}

/// Running record of the dynamics invariants over every propagation a
/// scenario performs.
struct InvariantLog {
  double max_normalization_defect = 0.0;
  double min_eigenvalue = 0.0;
  long trajectories = 0;
  std::optional<bool> monotone;  // set when a Krotov phase ran
  double max_increase = 0.0;

  void add(const Trajectory& tr) {
    max_normalization_defect = std::max(max_normalization_defect, tr.max_normalization_defect());
    min_eigenvalue = std::min(min_eigenvalue, tr.min_eigenvalue());
    ++trajectories;
  }

  void add_record(const OptimizationRecord& r, const std::string& phase = "krotov") {
    bool any = false;
    for (const auto& it : r.iterations) any = any || it.phase == phase;
    if (!any) return;
    const bool m = r.monotone(1e-12, phase);
    monotone = monotone.value_or(true) && m;
    max_increase = std::max(max_increase, r.max_increase(phase));
  }

  bool norm_ok() const { return max_normalization_defect <= 1e-9; }
  bool positivity_ok() const { return min_eigenvalue >= -1e-9; }

  nlohmann::json to_json() const {
    nlohmann::json j = {{"max_normalization_defect", max_normalization_defect},
                        {"min_eigenvalue", min_eigenvalue},
                        {"trajectories_checked", trajectories},
                        {"normalization_ok", norm_ok()},
                        {"positivity_ok", positivity_ok()}};
    if (monotone) {
      j["monotone"] = *monotone;
      j["max_increase"] = max_increase;
    } else {
      j["monotone"] = nullptr;
    }
    return j;
  }
};

struct ResultBundle {
  std::string scenario;
  nlohmann::json results = nlohmann::json::object();
  InvariantLog invariants;
  std::map<std::string, Table> tables;
  std::optional<Trajectory> trajectory;
  std::vector<ControlField> fields;
  std::optional<OptimizationRecord> record;
  std::optional<nlohmann::json> report;
  std::string dot;
  std::vector<std::string> files;  // filled by write_bundle

  nlohmann::json summary() const {
    return {{"schema_version", 1},
            {"scenario", scenario},
            {"results", results},
            {"invariants", invariants.to_json()},
            {"files", files}};
  }
};

inline const std::vector<std::string>& plot_kinds() {
  static const std::vector<std::string> k = {"population_vs_time", "j_vs_iteration",
                                             "probability_vs_sweep_rate", "population_vs_phase",
                                             "purity_vs_duration"};
  return k;
}

inline const Table& require_table(const ResultBundle& b, const std::string& name, const std::string& kind) {
  const auto it = b.tables.find(name);
  if (it == b.tables.end()) {
    throw Error(ErrorCode::invalid_argument, "plot '" + kind + "': bundle has no " + name + " series");
  }
  return it->second;
}

/// Tidy CSV data, one observation per row.
inline Table emit_plot_data(const ResultBundle& b, const std::string& kind) {
  Table t;
  if (kind == "population_vs_time") {
    if (!b.trajectory) throw Error(ErrorCode::invalid_argument, "plot '" + kind + "': no trajectory");
    t.columns = {"time", "level", "population"};
    const auto& tr = *b.trajectory;
    for (std::size_t i = 0; i < tr.states.size(); ++i) {
      const RVector p = tr.states[i].populations();
      for (Eigen::Index k = 0; k < p.size(); ++k) t.add({tr.grid.t(Eigen::Index(i)), long(k), p(k)});
    }
    return t;
  }
  if (kind == "j_vs_iteration") {
    if (!b.record) throw Error(ErrorCode::invalid_argument, "plot '" + kind + "': no optimization record");
    t.columns = {"iter", "phase", "J"};
    for (const auto& it : b.record->iterations) t.add({long(it.iter), it.phase, it.j_tf});
    return t;
  }
  if (kind == "probability_vs_sweep_rate") {
    const Table& s = require_table(b, "landau_zener", kind);
    t.columns = {"sweep_rate", "series", "probability"};
    const auto r = s.column("sweep_rate"), sim = s.column("p_diabatic"), f = s.column("p_formula");
    for (const auto& row : s.rows) {
      t.add({row[r], "simulated", row[sim]});
      t.add({row[r], "formula", row[f]});
    }
    return t;
  }
  if (kind == "population_vs_phase") {
    const Table& s = require_table(b, "bichromatic", kind);
    t.columns = {"phi", "series", "population"};
    const auto p = s.column("phi"), sim = s.column("p_f"), f = s.column("p_f_formula");
    for (const auto& row : s.rows) {
      t.add({row[p], "simulated", row[sim]});
      t.add({row[p], "formula", row[f]});
    }
    return t;
  }
  if (kind == "purity_vs_duration") {
    const Table& s = require_table(b, "qubit_reset", kind);
    t.columns = {"duration", "purity"};
    const auto d = s.column("duration"), p = s.column("purity");
    for (const auto& row : s.rows) t.add({row[d], row[p]});
    return t;
  }
  throw Error(ErrorCode::schema, "unknown plot kind '" + kind + "'");
}

/// Requested artifacts: "trajectory", "fields", "iterations", "tables",
/// "report", "graph", "plot:<kind>".
inline std::vector<std::string> validate_outputs(const nlohmann::json& j) {
  std::vector<std::string> out;
  if (j.is_null()) return out;
  if (!j.is_array()) throw Error(ErrorCode::schema, "outputs: expected a list of names");
  for (const auto& e : j) {
    if (!e.is_string()) throw Error(ErrorCode::schema, "outputs: expected strings");
    const auto s = e.get<std::string>();
    const bool plain = s == "trajectory" || s == "fields" || s == "iterations" || s == "tables" ||
                       s == "report" || s == "graph";
    const bool plot = s.rfind("plot:", 0) == 0 &&
                      std::find(plot_kinds().begin(), plot_kinds().end(), s.substr(5)) != plot_kinds().end();
    if (!plain && !plot) throw Error(ErrorCode::schema, "outputs: unknown artifact '" + s + "'");
    out.push_back(s);
  }
  return out;
}

namespace detail {

inline std::ofstream open_out(const std::filesystem::path& p) {
  std::ofstream os(p, std::ios::binary);
  if (!os) throw Error(ErrorCode::io, "cannot write " + p.string());
  return os;
}

}  // namespace detail

/// Writes the requested artifacts and summary.json into `dir`. All series
/// are built before anything is written, so a missing series leaves the
/// directory untouched.
inline void write_bundle(ResultBundle& b, const std::vector<std::string>& outputs,
                         const std::filesystem::path& dir) {
  std::map<std::string, std::string> files;
  for (const auto& o : outputs) {
    std::ostringstream os;
    if (o == "trajectory") {
      if (!b.trajectory) throw Error(ErrorCode::invalid_argument, "outputs: no trajectory in this scenario");
      write_trajectory_csv(os, *b.trajectory);
      files["trajectory.csv"] = os.str();
    } else if (o == "fields") {
      if (b.fields.empty()) throw Error(ErrorCode::invalid_argument, "outputs: no fields in this scenario");
      write_fields_csv(os, b.fields);
      files["fields.csv"] = os.str();
    } else if (o == "iterations") {
      if (!b.record) throw Error(ErrorCode::invalid_argument, "outputs: no optimization in this scenario");
      write_iterations_jsonl(os, *b.record);
      files["iterations.jsonl"] = os.str();
    } else if (o == "tables") {
      for (const auto& [name, t] : b.tables) {
        std::ostringstream ts;
        write_csv(ts, t);
        files[name + ".csv"] = ts.str();
      }
    } else if (o == "report") {
      if (!b.report) throw Error(ErrorCode::invalid_argument, "outputs: no report in this scenario");
      files["report.json"] = b.report->dump(2) + "\n";
    } else if (o == "graph") {
      if (b.dot.empty()) throw Error(ErrorCode::invalid_argument, "outputs: no graph in this scenario");
      files["graph.dot"] = b.dot;
    } else {
      const std::string kind = o.substr(5);
      write_csv(os, emit_plot_data(b, kind));
      files["plot_" + kind + ".csv"] = os.str();
    }
  }
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::io, "cannot create " + dir.string() + ": " + ec.message());
  b.files.clear();
  for (const auto& [name, text] : files) {
    auto os = detail::open_out(dir / name);
    os << text;
    b.files.push_back(name);
  }
  auto os = detail::open_out(dir / "summary.json");
  os << b.summary().dump(2) << "\n";
  if (!os) throw Error(ErrorCode::io, "write failed in " + dir.string());
}

}  // namespace qoc
