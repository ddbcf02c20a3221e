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

#include "hamshape/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace hamshape {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

double to_double(const std::string& key, const std::string& text) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(v)) {
    throw ConfigError("'" + key + "': '" + text + "' is not a number");
  }
  return v;
}

std::int64_t to_int(const std::string& key, const std::string& text) {
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ConfigError("'" + key + "': '" + text + "' is not an integer");
  }
  return v;
}

}  // namespace

KeyValueConfig KeyValueConfig::parse(const std::string& text) {
  KeyValueConfig cfg;
  std::stringstream ss(text);
  std::string line;
  int number = 0;
  while (std::getline(ss, line)) {
    ++number;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(number) + ": expected 'key = value'");
    }
    const std::string key = trim(line.substr(0, eq));
    if (key.empty()) throw ConfigError("line " + std::to_string(number) + ": empty key");
    cfg.set(key, trim(line.substr(eq + 1)));
  }
  return cfg;
}

KeyValueConfig KeyValueConfig::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str());
}

void KeyValueConfig::set(const std::string& key, const std::string& value) { values_[key] = value; }

const std::string* KeyValueConfig::find(const std::string& key) const {
  read_.insert(key);
  const auto it = values_.find(key);
  return it == values_.end() ? nullptr : &it->second;
}

std::string KeyValueConfig::get_string(const std::string& key, const std::string& fallback) const {
  const auto* v = find(key);
  return v ? *v : fallback;
}

double KeyValueConfig::get_double(const std::string& key, double fallback) const {
  const auto* v = find(key);
  return v ? to_double(key, *v) : fallback;
}

std::int64_t KeyValueConfig::get_int(const std::string& key, std::int64_t fallback) const {
  const auto* v = find(key);
  return v ? to_int(key, *v) : fallback;
}

std::uint64_t KeyValueConfig::get_uint(const std::string& key, std::uint64_t fallback) const {
  const auto* v = find(key);
  if (!v) return fallback;
  std::uint64_t out = 0;
  const auto [ptr, ec] = std::from_chars(v->data(), v->data() + v->size(), out);
  if (ec != std::errc() || ptr != v->data() + v->size()) {
    throw ConfigError("'" + key + "': '" + *v + "' is not a non-negative integer");
  }
  return out;
}

bool KeyValueConfig::get_bool(const std::string& key, bool fallback) const {
  const auto* v = find(key);
  if (!v) return fallback;
  if (*v == "true" || *v == "yes" || *v == "1" || *v == "on") return true;
  if (*v == "false" || *v == "no" || *v == "0" || *v == "off") return false;
  throw ConfigError("'" + key + "': '" + *v + "' is not a boolean");
}

std::vector<double> KeyValueConfig::get_doubles(const std::string& key, std::vector<double> fallback) const {
  const auto* v = find(key);
  if (!v) return fallback;
  std::vector<double> out;
  for (const auto& item : split_list(*v)) out.push_back(to_double(key, item));
  if (out.empty()) throw ConfigError("'" + key + "' is an empty list");
  return out;
}

std::vector<std::int64_t> KeyValueConfig::get_ints(const std::string& key,
                                                   std::vector<std::int64_t> fallback) const {
  const auto* v = find(key);
  if (!v) return fallback;
  std::vector<std::int64_t> out;
  for (const auto& item : split_list(*v)) out.push_back(to_int(key, item));
  if (out.empty()) throw ConfigError("'" + key + "' is an empty list");
  return out;
}

std::vector<std::string> KeyValueConfig::unused() const {
  std::vector<std::string> out;
  for (const auto& [key, value] : values_) {
    if (!read_.count(key)) out.push_back(key);
  }
  return out;
}

const char* kind_name(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::kEngineer: return "engineer";
    case ExperimentKind::kFeasibilityScan: return "feasibility-scan";
    case ExperimentKind::kRelaxationScan: return "relaxation-scan";
    case ExperimentKind::kLatticeBench: return "lattice-bench";
    case ExperimentKind::kSimulate: return "simulate";
  }
  return "?";
}

ExperimentKind parse_kind(const std::string& text) {
  if (text == "engineer") return ExperimentKind::kEngineer;
  if (text == "feasibility-scan") return ExperimentKind::kFeasibilityScan;
  if (text == "relaxation-scan" || text == "relaxation-objective-scan") return ExperimentKind::kRelaxationScan;
  if (text == "lattice-bench") return ExperimentKind::kLatticeBench;
  if (text == "simulate") return ExperimentKind::kSimulate;
  throw ConfigError("unknown experiment kind '" + text + "'");
}

const char* sweep_name(SweepKind kind) {
  switch (kind) {
    case SweepKind::kPulseTime: return "t_p";
    case SweepKind::kEpsilon: return "epsilon";
    case SweepKind::kCycles: return "cycles";
    case SweepKind::kTime: return "t";
  }
  return "?";
}

namespace {

SweepKind parse_sweep(const std::string& text) {
  if (text == "t_p") return SweepKind::kPulseTime;
  if (text == "epsilon") return SweepKind::kEpsilon;
  if (text == "cycles") return SweepKind::kCycles;
  if (text == "t") return SweepKind::kTime;
  throw ConfigError("unknown sweep '" + text + "' (expected t_p, epsilon, cycles or t)");
}

std::filesystem::path resolve(const std::filesystem::path& base, const std::string& text) {
  if (text.empty()) return {};
  const std::filesystem::path p(text);
  return p.is_absolute() ? p : base / p;
}

void require_file(const std::string& key, const std::filesystem::path& p) {
  if (!std::filesystem::is_regular_file(p)) {
    throw ConfigError("'" + key + "': file " + p.string() + " does not exist");
  }
}

}  // namespace

ExperimentConfig make_experiment_config(ExperimentKind kind, const KeyValueConfig& kv,
                                        const std::filesystem::path& base) {
  ExperimentConfig c;
  c.kind = kind;
  if (kv.has("experiment") && parse_kind(kv.get_string("experiment", "")) != kind) {
    throw ConfigError("config describes a '" + kv.get_string("experiment", "") +
                      "' experiment, not '" + kind_name(kind) + "'");
  }
  try {
    c.mode = parse_mode(kv.get_string("mode", "pauli"));
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  c.n = kv.get_ints("n", c.n);
  c.ratios = kv.get_doubles("ratios", c.ratios);
  c.replicates = static_cast<int>(kv.get_int("replicates", c.replicates));
  c.seed = kv.get_uint("seed", c.seed);
  c.out = resolve(base, kv.get_string("out", "."));
  c.threads = static_cast<int>(kv.get_int("threads", c.threads));
  c.max_attempts = static_cast<int>(kv.get_int("max_attempts", c.max_attempts));
  const bool identity_default =
      kind != ExperimentKind::kFeasibilityScan && kind != ExperimentKind::kLatticeBench;
  c.identity_column = kv.get_bool("identity_column", identity_default);
  c.extra = kv.get_double("extra", c.extra);
  c.system = resolve(base, kv.get_string("system", ""));
  c.target = resolve(base, kv.get_string("target", ""));
  const std::string columns = kv.get_string("columns", "sampled");
  if (columns != "sampled" && columns != "all") throw ConfigError("'columns' must be sampled or all");
  c.all_columns = columns == "all";
  c.sides = kv.get_ints("sides", c.sides);
  c.target_model = kv.get_string("target_model", c.target_model);
  c.schedule = resolve(base, kv.get_string("schedule", ""));
  c.t = kv.get_doubles("t", c.t);
  c.t_p = kv.get_double("t_p", c.t_p);
  if (kv.has("rabi")) {
    if (kv.has("t_p")) throw ConfigError("set either 't_p' or 'rabi', not both");
    const double omega = kv.get_double("rabi", 0.0);
    if (omega <= 0) throw ConfigError("'rabi' must be positive");
    c.t_p = 3.14159265358979323846 / omega;
  }
  c.epsilon = kv.get_double("epsilon", c.epsilon);
  c.cycles = static_cast<int>(kv.get_int("cycles", c.cycles));
  c.sweep = parse_sweep(kv.get_string("sweep", "t_p"));
  const double sweep_default = c.sweep == SweepKind::kPulseTime ? c.t_p
                               : c.sweep == SweepKind::kEpsilon ? c.epsilon
                               : c.sweep == SweepKind::kCycles  ? static_cast<double>(c.cycles)
                                                                : c.t.front();
  c.values = kv.get_doubles("values", {sweep_default});
  c.dense_limit = static_cast<std::size_t>(kv.get_int("dense_limit", 12));
  c.coupling_alpha = kv.get_double("coupling_alpha", c.coupling_alpha);
  c.coupling_j0 = kv.get_double("coupling_j0", c.coupling_j0);
  c.coupling_b1 = kv.get_double("coupling_b1", c.coupling_b1);
  c.coupling_omega = kv.get_double("coupling_omega", c.coupling_omega);
  c.coupling_matrix = resolve(base, kv.get_string("coupling_matrix", ""));

  if (const auto unused = kv.unused(); !unused.empty()) {
    std::string list;
    for (const auto& k : unused) list += (list.empty() ? "" : ", ") + k;
    throw ConfigError("unknown config keys: " + list);
  }

  if (c.replicates < 1) throw ConfigError("'replicates' must be at least 1");
  if (c.max_attempts < 1) throw ConfigError("'max_attempts' must be at least 1");
  if (c.threads < 0) throw ConfigError("'threads' must be non-negative");
  const double min_ratio = kind == ExperimentKind::kFeasibilityScan ? 1.0 : 1.5;
  for (double r : c.ratios) {
    if (r < min_ratio) {
      throw ConfigError("ratio " + std::to_string(r) + " is below the minimum " + std::to_string(min_ratio));
    }
  }
  for (auto n : c.n) {
    if (n < 1 || n > 64) throw ConfigError("'n' values must lie in [1, 64]");
  }
  for (auto s : c.sides) {
    if (s < 2) throw ConfigError("lattice 'sides' must be at least 2");
  }
  for (double t : c.t) {
    if (t <= 0) throw ConfigError("evolution times 't' must be positive");
  }
  if (c.t_p < 0) throw ConfigError("'t_p' must be non-negative");
  if (c.epsilon < 0 || c.epsilon >= 1) throw ConfigError("'epsilon' must lie in [0, 1)");
  if (c.cycles < 1) throw ConfigError("'cycles' must be at least 1");
  if (c.extra < 0 || c.extra > 1) throw ConfigError("'extra' must lie in [0, 1]");
  for (double v : c.values) {
    const bool ok = c.sweep == SweepKind::kPulseTime   ? v >= 0
                    : c.sweep == SweepKind::kEpsilon ? v >= 0 && v < 1
                    : c.sweep == SweepKind::kCycles  ? v >= 1 && v == std::floor(v)
                                                     : v > 0;
    if (!ok) throw ConfigError("sweep value " + std::to_string(v) + " is out of range for " + sweep_name(c.sweep));
  }
  if (c.target_model != "ising" && c.target_model != "heisenberg" && c.target_model != "file") {
    throw ConfigError("'target_model' must be ising, heisenberg or file");
  }

  if (kind == ExperimentKind::kEngineer) {
    if (c.system.empty() || c.target.empty()) throw ConfigError("engineer needs 'system' and 'target' files");
    require_file("system", c.system);
    require_file("target", c.target);
  }
  if (kind == ExperimentKind::kSimulate) {
    if (c.target_model == "file") {
      if (c.target.empty()) throw ConfigError("target_model = file needs a 'target' file");
      require_file("target", c.target);
    }
    if (!c.system.empty()) require_file("system", c.system);
    if (!c.schedule.empty()) {
      require_file("schedule", c.schedule);
      if (c.target_model != "file") throw ConfigError("simulating a schedule file needs target_model = file");
    }
    if (!c.coupling_matrix.empty()) require_file("coupling_matrix", c.coupling_matrix);
  }
  return c;
}

}  // namespace hamshape
