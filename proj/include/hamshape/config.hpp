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

#ifndef HAMSHAPE_CONFIG_HPP
#define HAMSHAPE_CONFIG_HPP

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "hamshape/engineering.hpp"

namespace hamshape {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Flat `key = value` text. Blank lines and text after `#` are ignored; list
/// values are comma separated. Later assignments override earlier ones.
class KeyValueConfig {
 public:
  static KeyValueConfig parse(const std::string& text);
  static KeyValueConfig load(const std::filesystem::path& path);

  void set(const std::string& key, const std::string& value);
  bool has(const std::string& key) const { return values_.count(key) != 0; }
  const std::map<std::string, std::string>& values() const { return values_; }

  std::string get_string(const std::string& key, const std::string& fallback) const;
  double get_double(const std::string& key, double fallback) const;
  std::int64_t get_int(const std::string& key, std::int64_t fallback) const;
  std::uint64_t get_uint(const std::string& key, std::uint64_t fallback) const;
  bool get_bool(const std::string& key, bool fallback) const;
  std::vector<double> get_doubles(const std::string& key, std::vector<double> fallback) const;
  std::vector<std::int64_t> get_ints(const std::string& key, std::vector<std::int64_t> fallback) const;

  /// Keys that were set but never read.
  std::vector<std::string> unused() const;

 private:
  const std::string* find(const std::string& key) const;

  std::map<std::string, std::string> values_;
  mutable std::set<std::string> read_;
};

enum class ExperimentKind { kEngineer, kFeasibilityScan, kRelaxationScan, kLatticeBench, kSimulate };

const char* kind_name(ExperimentKind kind);
ExperimentKind parse_kind(const std::string& text);

enum class SweepKind { kPulseTime, kEpsilon, kCycles, kTime };

const char* sweep_name(SweepKind kind);

struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::kEngineer;
  ConjugationMode mode = ConjugationMode::kPauli;
  std::vector<std::int64_t> n = {4};
  std::vector<double> ratios = {3.0};
  int replicates = 50;
  std::uint64_t seed = 0;
  std::filesystem::path out = ".";
  int threads = 0;
  int max_attempts = 20;
  bool identity_column = true;
  /// Probability of each further 2-local term in random system Hamiltonians.
  double extra = 0.3;

  // engineer
  std::filesystem::path system;
  std::filesystem::path target;
  bool all_columns = false;

  // lattice-bench
  std::vector<std::int64_t> sides = {2, 3, 4};

  // simulate
  std::string target_model = "ising";
  std::filesystem::path schedule;
  std::vector<double> t = {1.0};
  double t_p = 0.0;
  double epsilon = 0.0;
  int cycles = 1;
  SweepKind sweep = SweepKind::kPulseTime;
  std::vector<double> values = {0.0};
  std::size_t dense_limit = 12;
  double coupling_alpha = 3.0;
  double coupling_j0 = 1.0;
  double coupling_b1 = 40.0;
  double coupling_omega = 2.0 * 3.14159265358979323846 * 400e3;
  std::filesystem::path coupling_matrix;
};

/// Reads and validates an experiment description. Relative paths are
/// resolved against `base`. Throws ConfigError.
ExperimentConfig make_experiment_config(ExperimentKind kind, const KeyValueConfig& kv,
                                        const std::filesystem::path& base = ".");

}  // namespace hamshape

#endif  // HAMSHAPE_CONFIG_HPP
