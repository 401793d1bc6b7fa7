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


// qoctl run <config> --out <dir> [--seed-field <file>] [--log-level <level>]

#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "qoc/scenario/run.hpp"

namespace {

int fail(std::string_view kind, const std::string& message, int code, const std::string& out_dir) {
  const auto j = qoc::error_json(kind, message);
  std::cout << j.dump() << std::endl;
  if (!out_dir.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (!ec) {
      std::ofstream os(std::filesystem::path(out_dir) / "error.json");
      os << j.dump(2) << "\n";
    }
  }
  spdlog::error("{}: {}", kind, message);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qoctl: run quantum optimal control scenarios"};
  app.require_subcommand(1);
  auto* run = app.add_subcommand("run", "run one scenario file");
  std::string config, out_dir, seed, level = "info";
  run->add_option("config", config, "scenario JSON file")->required();
  run->add_option("--out", out_dir, "output directory")->required();
  run->add_option("--seed-field", seed, "fields CSV replacing the guess (gate_opt)");
  const std::map<std::string, spdlog::level::level_enum> levels = {
      {"trace", spdlog::level::trace}, {"debug", spdlog::level::debug}, {"info", spdlog::level::info},
      {"warn", spdlog::level::warn},   {"error", spdlog::level::err},   {"off", spdlog::level::off}};
  run->add_option("--log-level", level, "trace, debug, info, warn, error, off")
      ->check(CLI::IsMember({"trace", "debug", "info", "warn", "error", "off"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    return fail("usage", e.what(), 64, "");
  }

  auto logger = spdlog::stderr_color_mt("qoctl");
  spdlog::set_default_logger(logger);
  spdlog::set_level(levels.at(level));

  try {
    std::optional<std::filesystem::path> seed_path;
    if (!seed.empty()) seed_path = seed;
    spdlog::info("running {}", config);
    const auto b = qoc::run_scenario_file(config, out_dir, seed_path, [](const std::string& m) { spdlog::debug("{}", m); });
    for (const auto& f : b.files) spdlog::info("wrote {}", (std::filesystem::path(out_dir) / f).string());
    spdlog::info("wrote {}", (std::filesystem::path(out_dir) / "summary.json").string());
    return 0;
  } catch (const qoc::Error& e) {
    return fail(qoc::to_string(e.code()), e.what(), qoc::exit_code(e.code()), out_dir);
  } catch (const std::exception& e) {
    return fail("internal", e.what(), 70, out_dir);
  }
}
