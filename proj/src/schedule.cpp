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

#include "hamshape/schedule.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "hamshape/engineering.hpp"

namespace hamshape {

double PulseSchedule::total_duration() const {
  double s = 0.0;
  for (const auto& b : blocks) s += b.lambda * t;
  return s;
}

bool PulseSchedule::all_pauli() const {
  return std::all_of(blocks.begin(), blocks.end(), [](const ScheduleBlock& b) { return b.layer.is_pauli(); });
}

PulseSchedule build_schedule(const LpSolution& sol, const std::vector<CliffordLabel>& cols, double t,
                             const SparseHamiltonian& h_s) {
  if (sol.status != LpStatus::kOptimal) throw std::invalid_argument("schedule needs an optimal LP solution");
  if (!(t > 0)) throw std::invalid_argument("evolution time must be positive");
  if (static_cast<std::size_t>(sol.lambda.size()) != cols.size()) {
    throw std::invalid_argument("solution and column labels differ in length");
  }
  std::map<CliffordLabel, double> merged;
  for (std::size_t k = 0; k < cols.size(); ++k) {
    if (sol.lambda(k) > 0.0) merged[cols[k]] += sol.lambda(k);
  }
  PulseSchedule s;
  s.n = h_s.num_qubits();
  s.t = t;
  s.objective = sol.objective;
  for (const auto& [label, lambda] : merged) s.blocks.push_back({label, lambda});
  s.commuting = blocks_commute(s.blocks, h_s);
  return s;
}

std::vector<PulseStep> pulse_sequence(const PulseSchedule& s) {
  std::vector<PulseStep> out;
  for (std::size_t i = 0; i < s.blocks.size(); ++i) {
    out.push_back({s.blocks[i].layer, false});
    out.push_back({s.blocks[i].layer, true});
  }
  return out;
}

PulseSchedule merge_pauli_layers(const PulseSchedule& s) {
  if (!s.all_pauli()) throw std::invalid_argument("pulse merging needs Pauli layers only");
  PulseSchedule out = s;
  out.pulses.clear();
  if (s.blocks.empty()) return out;
  out.pulses.push_back(s.blocks.front().layer);
  for (std::size_t i = 1; i < s.blocks.size(); ++i) {
    out.pulses.push_back(CliffordLabel::pauli(s.blocks[i - 1].layer.signs() ^ s.blocks[i].layer.signs()));
  }
  out.pulses.push_back(s.blocks.back().layer);
  return out;
}

PulseSchedule trotter_expand(const PulseSchedule& s, int cycles) {
  if (cycles < 1) throw std::invalid_argument("Trotter cycle count must be at least 1");
  PulseSchedule out = s;
  out.blocks.clear();
  out.pulses.clear();
  const double scale = 1.0 / (2.0 * cycles);
  for (int c = 0; c < cycles; ++c) {
    for (auto it = s.blocks.rbegin(); it != s.blocks.rend(); ++it) out.blocks.push_back({it->layer, it->lambda * scale});
    for (const auto& b : s.blocks) out.blocks.push_back({b.layer, b.lambda * scale});
  }
  return out;
}

SparseHamiltonian reconstruct(const PulseSchedule& s, const SparseHamiltonian& h_s) {
  SparseHamiltonian out(h_s.num_qubits());
  for (const auto& b : s.blocks) {
    const auto conj = conjugate(h_s, b.layer);
    for (const auto& [a, coeff] : conj.terms()) out.add(a, b.lambda * coeff);
  }
  return out;
}

namespace {

bool commutator_vanishes(const SparseHamiltonian& h, const SparseHamiltonian& k) {
  static constexpr std::complex<double> kPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  std::map<PauliIndex, std::complex<double>> acc;
  for (const auto& [a, ja] : h.terms()) {
    for (const auto& [b, kb] : k.terms()) {
      if (!symplectic_form(a, b)) continue;
      acc[a ^ b] += 2.0 * ja * kb * kPowers[product_phase(a, b) & 3];
    }
  }
  const double scale = std::max(1e-300, h.max_abs() * k.max_abs());
  return std::all_of(acc.begin(), acc.end(),
                     [&](const auto& kv) { return std::abs(kv.second) <= 1e-10 * scale; });
}

}  // namespace

bool blocks_commute(const std::vector<ScheduleBlock>& blocks, const SparseHamiltonian& h_s,
                    std::size_t budget) {
  std::vector<SparseHamiltonian> conj;
  conj.reserve(blocks.size());
  for (const auto& b : blocks) conj.push_back(conjugate(h_s, b.layer));

  // Which blocks each distinct term appears in.
  std::map<PauliIndex, std::vector<std::size_t>> members;
  for (std::size_t i = 0; i < conj.size(); ++i) {
    for (const auto& [a, coeff] : conj[i].terms()) members[a].push_back(i);
  }
  std::vector<std::pair<const PauliIndex*, const std::vector<std::size_t>*>> terms;
  for (const auto& [a, m] : members) terms.emplace_back(&a, &m);

  bool conservative = true;
  for (std::size_t u = 0; u < terms.size() && conservative; ++u) {
    for (std::size_t v = u + 1; v < terms.size(); ++v) {
      if (!symplectic_form(*terms[u].first, *terms[v].first)) continue;
      const auto& mu = *terms[u].second;
      const auto& mv = *terms[v].second;
      const bool same_single_block = mu.size() == 1 && mv.size() == 1 && mu[0] == mv[0];
      if (!same_single_block) {
        conservative = false;
        break;
      }
    }
  }
  if (conservative) return true;

  std::size_t work = 0;
  for (std::size_t i = 0; i < conj.size(); ++i) {
    for (std::size_t j = i + 1; j < conj.size(); ++j) work += conj[i].size() * conj[j].size();
  }
  if (work > budget) return false;
  for (std::size_t i = 0; i < conj.size(); ++i) {
    for (std::size_t j = i + 1; j < conj.size(); ++j) {
      if (!commutator_vanishes(conj[i], conj[j])) return false;
    }
  }
  return true;
}

double EnvelopeSpec::integral() const {
  double s = 0.0;
  for (std::size_t k = 1; k < samples.size(); ++k) {
    s += 0.5 * (samples[k].second + samples[k - 1].second) * (samples[k].first - samples[k - 1].first);
  }
  return s;
}

double EnvelopeSpec::span() const {
  return samples.size() < 2 ? 0.0 : samples.back().first - samples.front().first;
}

double envelope_adjust(double duration, const EnvelopeSpec& env) {
  for (std::size_t k = 0; k < env.samples.size(); ++k) {
    if (env.samples[k].second < 0) throw std::invalid_argument("envelope samples must be non-negative");
    if (k > 0 && env.samples[k].first <= env.samples[k - 1].first) {
      throw std::invalid_argument("envelope sample times must increase");
    }
  }
  const double area = env.integral();
  if (!(area > 0)) throw std::invalid_argument("envelope integral must be positive");
  return duration * env.span() / area;
}

std::string to_json(const PulseSchedule& s) {
  nlohmann::ordered_json doc;
  doc["format"] = 1;
  doc["n"] = s.n;
  doc["t_seconds"] = s.t;
  doc["commuting"] = s.commuting;
  doc["objective"] = s.objective;
  auto blocks = nlohmann::ordered_json::array();
  for (const auto& b : s.blocks) {
    nlohmann::ordered_json entry;
    entry["layer"] = b.layer.tokens();
    entry["lambda"] = b.lambda;
    blocks.push_back(std::move(entry));
  }
  doc["blocks"] = std::move(blocks);
  if (!s.pulses.empty()) {
    auto pulses = nlohmann::ordered_json::array();
    for (const auto& p : s.pulses) pulses.push_back(p.tokens());
    doc["pulses"] = std::move(pulses);
  }
  return doc.dump(2) + "\n";
}

PulseSchedule schedule_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ScheduleFormatError(std::string("malformed schedule file: ") + e.what());
  }
  try {
    if (doc.at("format").get<int>() != 1) throw ScheduleFormatError("unsupported schedule format");
    PulseSchedule s;
    s.n = doc.at("n").get<std::size_t>();
    s.t = doc.at("t_seconds").get<double>();
    s.commuting = doc.at("commuting").get<bool>();
    s.objective = doc.at("objective").get<double>();
    for (const auto& b : doc.at("blocks")) {
      auto layer = CliffordLabel::from_tokens(b.at("layer").get<std::vector<std::string>>());
      if (layer.num_qubits() != s.n) throw ScheduleFormatError("layer width differs from n");
      s.blocks.push_back({std::move(layer), b.at("lambda").get<double>()});
    }
    if (doc.contains("pulses")) {
      for (const auto& p : doc["pulses"]) {
        auto layer = CliffordLabel::from_tokens(p.get<std::vector<std::string>>());
        if (layer.num_qubits() != s.n) throw ScheduleFormatError("pulse width differs from n");
        s.pulses.push_back(std::move(layer));
      }
    }
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw ScheduleFormatError(std::string("bad schedule file: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ScheduleFormatError(std::string("bad schedule file: ") + e.what());
  }
}

void save_schedule(const PulseSchedule& s, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << to_json(s);
}

PulseSchedule load_schedule(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return schedule_from_json(buffer.str());
}

}  // namespace hamshape
