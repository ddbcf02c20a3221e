// Copyright 2026 The hamshape Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "hamshape/config.hpp"
#include "hamshape/experiments.hpp"

namespace {

struct Options {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out;
};

void add_common(CLI::App* sub, Options& opts) {
  sub->add_option("--config", opts.config, "experiment config file (key = value lines)")
      ->required()
      ->check(CLI::ExistingFile);
  sub->add_option("--seed", opts.seed, "override the config seed");
  sub->add_option("--out", opts.out, "output directory");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hamshape: Hamiltonian engineering by conjugation linear programs"};
  app.require_subcommand(1);
  Options opts;
  const std::pair<const char*, const char*> commands[] = {
      {"engineer", "solve one engineering LP and write schedule.json"},
      {"feasibility-scan", "success frequency of random relaxations against Wendel's formula"},
      {"relaxation-scan", "objective of nested and resampled relaxations across ratios"},
      {"lattice-bench", "LP size and solve time on square lattices"},
      {"simulate", "infidelity of engineered schedules under pulse and calibration errors"},
  };
  for (const auto& [name, help] : commands) add_common(app.add_subcommand(name, help), opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : hamshape::kExitConfigError;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  hamshape::ExperimentConfig cfg;
  try {
    auto kv = hamshape::KeyValueConfig::load(opts.config);
    if (opts.seed) kv.set("seed", std::to_string(*opts.seed));
    const auto base = std::filesystem::path(opts.config).parent_path();
    cfg = hamshape::make_experiment_config(hamshape::parse_kind(name), kv, base.empty() ? "." : base);
    if (opts.out) cfg.out = *opts.out;
  } catch (const hamshape::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return hamshape::kExitConfigError;
  }
  return hamshape::run_experiment(cfg, std::cout, std::cerr);
}
