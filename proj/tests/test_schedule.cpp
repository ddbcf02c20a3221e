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

#include <catch_amalgamated.hpp>

#include "hamshape/engineering.hpp"
#include "hamshape/lp.hpp"
#include "hamshape/models.hpp"
#include "hamshape/sampler.hpp"
#include "hamshape/schedule.hpp"
#include "oracles.hpp"

using namespace hamshape;

namespace {

PauliIndex P(const char* s) { return PauliIndex::from_string(s); }
CliffordLabel L(std::initializer_list<std::string> tokens) { return CliffordLabel::from_tokens(tokens); }

oracle::Mat dense_of(const SparseHamiltonian& h) {
  const std::size_t dim = std::size_t{1} << h.num_qubits();
  oracle::Mat m = oracle::Mat::Zero(dim, dim);
  for (const auto& [a, v] : h.terms()) m += v * oracle::pauli(a.to_string());
  return m;
}

oracle::Mat layer_of(const CliffordLabel& c) {
  oracle::Mat u = oracle::Mat::Identity(1, 1);
  for (const auto& tok : c.tokens()) u = oracle::kron(u, oracle::clifford_gate(tok));
  return u;
}

LpSolution optimal(std::vector<double> lambda) {
  LpSolution s;
  s.status = LpStatus::kOptimal;
  s.lambda = Eigen::Map<Eigen::VectorXd>(lambda.data(), static_cast<Eigen::Index>(lambda.size()));
  s.objective = s.lambda.sum();
  return s;
}

}  // namespace

TEST_CASE("identity-only schedule", "[schedule]") {
  SparseHamiltonian h(2);
  h.set(P("ZZ"), 1.0);
  const auto s = build_schedule(optimal({0.7, 0.0}), {CliffordLabel::identity(2), L({"X", "I"})}, 2.0, h);
  REQUIRE(s.blocks.size() == 1);
  CHECK(s.blocks[0].layer.is_identity());
  CHECK(s.total_duration() == Catch::Approx(1.4));
  CHECK(s.commuting);
  LpSolution bad;
  CHECK_THROWS_AS(build_schedule(bad, {}, 1.0, h), std::invalid_argument);
  CHECK_THROWS_AS(build_schedule(optimal({1.0}), {CliffordLabel::identity(2)}, 0.0, h), std::invalid_argument);
}

TEST_CASE("duplicate labels merge and blocks are canonical", "[schedule]") {
  SparseHamiltonian h(1);
  h.set(P("Z"), 1.0);
  const auto s = build_schedule(optimal({0.25, 0.5, 0.25}), {L({"X"}), L({"Z"}), L({"X"})}, 1.0, h);
  REQUIRE(s.blocks.size() == 2);
  CHECK(s.blocks[0].layer < s.blocks[1].layer);
  CHECK(s.total_duration() == Catch::Approx(s.objective * s.t).epsilon(1e-12));
}

TEST_CASE("merged Pauli pulses", "[schedule]") {
  PulseSchedule s;
  s.n = 1;
  s.t = 1.0;
  s.blocks = {{L({"X"}), 0.5}, {L({"Z"}), 0.5}};
  const auto m = merge_pauli_layers(s);
  REQUIRE(m.pulses.size() == 3);
  CHECK(m.pulses[0] == L({"X"}));
  CHECK(m.pulses[1] == L({"Y"}));
  CHECK(m.pulses[2] == L({"Z"}));
  // S_1 S_2^dag for X then Z is Y up to phase.
  const oracle::Mat xz = oracle::X2() * oracle::Z2().adjoint();
  CHECK(std::abs(std::abs((xz.adjoint() * oracle::Y2()).trace()) - 2.0) < 1e-12);
  CHECK(m.blocks.size() == 2);

  s.blocks = {{L({"X"}), 1.0}};
  CHECK(merge_pauli_layers(s).pulses == std::vector<CliffordLabel>{L({"X"}), L({"X"})});
  s.blocks = {{L({"X"}), 0.5}, {L({"X"}), 0.5}};
  CHECK(merge_pauli_layers(s).pulses[1].is_identity());
  s.blocks = {{L({"SxSy"}), 1.0}};
  CHECK_THROWS_AS(merge_pauli_layers(s), std::invalid_argument);
}

TEST_CASE("pulse sequence pairs every block", "[schedule]") {
  PulseSchedule s;
  s.n = 1;
  s.blocks = {{L({"SxSy"}), 0.5}, {L({"Z"}), 0.5}};
  const auto seq = pulse_sequence(s);
  REQUIRE(seq.size() == 4);
  CHECK_FALSE(seq[0].adjoint);
  CHECK(seq[1].adjoint);
  CHECK(seq[1].layer == L({"SxSy"}));
  CHECK(seq[2].layer == L({"Z"}));
}

TEST_CASE("Trotter expansion", "[schedule]") {
  PulseSchedule s;
  s.n = 1;
  s.t = 1.0;
  s.blocks = {{L({"X"}), 0.2}, {L({"SxSy"}), 0.6}};
  const auto e1 = trotter_expand(s, 1);
  REQUIRE(e1.blocks.size() == 4);
  CHECK(e1.blocks[0].layer == L({"SxSy"}));
  CHECK(e1.blocks[0].lambda == Catch::Approx(0.3));
  CHECK(e1.blocks[1].layer == L({"X"}));
  CHECK(e1.blocks[1].lambda == Catch::Approx(0.1));
  CHECK(e1.blocks[2].layer == L({"X"}));
  CHECK(e1.blocks[3].layer == L({"SxSy"}));
  const auto e2 = trotter_expand(s, 2);
  REQUIRE(e2.blocks.size() == 8);
  CHECK(e2.blocks[0].lambda == Catch::Approx(0.15));
  CHECK(e2.total_duration() == Catch::Approx(s.total_duration()));
  for (int c = 0; c < 2; ++c) {
    for (int k = 0; k < 4; ++k) CHECK(e2.blocks[4 * c + k].layer == e2.blocks[4 * c + 3 - k].layer);
  }
  CHECK_THROWS_AS(trotter_expand(s, 0), std::invalid_argument);
}

TEST_CASE("envelope compensation", "[schedule]") {
  EnvelopeSpec flat{{{0.0, 1.0}, {2.0, 1.0}}};
  CHECK(envelope_adjust(0.3, flat) == Catch::Approx(0.3));
  EnvelopeSpec half{{{0.0, 0.5}, {1.0, 0.5}}};
  CHECK(envelope_adjust(0.3, half) == Catch::Approx(0.6));
  EnvelopeSpec ramp;
  for (int k = 0; k <= 100; ++k) {
    const double t = k / 100.0;
    ramp.samples.emplace_back(t, t <= 0.5 ? 2 * t : 2 * (1 - t));
  }
  CHECK(ramp.integral() == Catch::Approx(0.5));
  CHECK(envelope_adjust(0.3, ramp) == Catch::Approx(0.6));
  EnvelopeSpec zero{{{0.0, 0.0}, {1.0, 0.0}}};
  CHECK_THROWS_AS(envelope_adjust(1.0, zero), std::invalid_argument);
  EnvelopeSpec negative{{{0.0, -1.0}, {1.0, 2.0}}};
  CHECK_THROWS_AS(envelope_adjust(1.0, negative), std::invalid_argument);
}

TEST_CASE("commuting flag", "[schedule]") {
  SparseHamiltonian h(1);
  h.set(P("X"), 1.0);
  h.set(P("Z"), 1.0);
  // Conjugation by Y negates the Hamiltonian, so the blocks commute although
  // individual terms do not.
  CHECK(blocks_commute({{CliffordLabel::identity(1), 0.5}, {L({"Y"}), 0.5}}, h));
  CHECK_FALSE(blocks_commute({{CliffordLabel::identity(1), 0.5}, {L({"X"}), 0.5}}, h));
  CHECK_FALSE(blocks_commute({{CliffordLabel::identity(1), 0.5}, {L({"Y"}), 0.5}}, h, 0));
  CHECK(blocks_commute({{CliffordLabel::identity(1), 1.0}}, h));
}

TEST_CASE("commuting flag agrees with dense commutators", "[schedule][property]") {
  Rng rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + rng.below(2);
    const auto h = trial % 2 ? random_two_local(n, 0.1, rng) : random_ising(n, rng);
    std::vector<ScheduleBlock> blocks;
    const auto labels = trial % 4 < 2 ? draw_clifford_labels(n, 3, rng) : std::vector<CliffordLabel>{};
    for (const auto& c : labels) blocks.push_back({c, 0.3});
    if (labels.empty()) {
      for (auto& b : draw_pauli_labels(n, 3, rng)) blocks.push_back({CliffordLabel::pauli(b), 0.3});
    }
    const oracle::Mat hs = dense_of(h);
    bool dense = true;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      for (std::size_t j = i + 1; j < blocks.size(); ++j) {
        const oracle::Mat ui = layer_of(blocks[i].layer), uj = layer_of(blocks[j].layer);
        const oracle::Mat a = ui.adjoint() * hs * ui, b = uj.adjoint() * hs * uj;
        if (oracle::max_abs(a * b - b * a) > 1e-9) dense = false;
      }
    }
    CHECK(blocks_commute(blocks, h) == dense);
  }
}

TEST_CASE("schedules reconstruct the target", "[schedule][property]") {
  Rng rng(31);
  for (int trial = 0; trial < 12; ++trial) {
    const std::size_t n = 2 + trial % 2;
    const auto j = random_two_local(n, 0.3, rng);
    const auto rows = support_sets(j).suppnz;
    const auto a = random_on(rows, 0.6, -1.0, 1.0, rng);
    const auto target = clifford_target(a, j);
    SamplerConfig cfg;
    cfg.seed = static_cast<std::uint64_t>(trial);
    const auto w = sample_relaxation(target.rows, ConjugationMode::kClifford, j, cfg).matrix;
    const auto sol = solve_min_time({w.entries, target.values});
    REQUIRE(sol.status == LpStatus::kOptimal);
    const auto s = build_schedule(sol, w.cols, 1.0, j);
    const auto rec = reconstruct(s, j);
    for (std::size_t i = 0; i < target.rows.size(); ++i) {
      CHECK(std::abs(rec.coefficient(target.rows[i]) - target.values(i)) <= 1e-7 * (1 + target.values.cwiseAbs().maxCoeff()));
    }
    oracle::Mat sum = oracle::Mat::Zero(std::size_t{1} << n, std::size_t{1} << n);
    const oracle::Mat hs = dense_of(j);
    for (const auto& b : s.blocks) {
      const oracle::Mat u = layer_of(b.layer);
      sum += b.lambda * (u.adjoint() * hs * u);
    }
    CHECK(oracle::max_abs(sum - dense_of(a)) < 1e-7);
  }
}

TEST_CASE("schedule JSON round trip", "[schedule][io]") {
  PulseSchedule s;
  s.n = 2;
  s.t = 0.5;
  s.commuting = false;
  s.objective = 1.25;
  s.blocks = {{L({"SxSy", "I"}), 0.75}, {L({"Z", "Sy'Sx"}), 0.5}};
  const auto back = schedule_from_json(to_json(s));
  CHECK(back.n == 2);
  CHECK(back.t == 0.5);
  CHECK(back.objective == 1.25);
  CHECK_FALSE(back.commuting);
  REQUIRE(back.blocks.size() == 2);
  CHECK(back.blocks[1].layer == s.blocks[1].layer);
  CHECK(back.blocks[0].lambda == 0.75);
  PulseSchedule p;
  p.n = 1;
  p.t = 1.0;
  p.blocks = {{L({"X"}), 0.1}, {L({"Z"}), 0.2}};
  p = merge_pauli_layers(p);
  CHECK(schedule_from_json(to_json(p)).pulses == p.pulses);
  CHECK_THROWS_AS(schedule_from_json("{}"), ScheduleFormatError);
  CHECK_THROWS_AS(schedule_from_json(R"({"format": 2})"), ScheduleFormatError);
  CHECK_THROWS_AS(schedule_from_json(R"({"format": 1, "n": 1, "t_seconds": 1, "commuting": true, "objective": 1,
                                         "blocks": [{"layer": ["Q"], "lambda": 1}]})"),
                  ScheduleFormatError);
}
