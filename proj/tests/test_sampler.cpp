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

#include <array>

#include "hamshape/lp.hpp"
#include "hamshape/models.hpp"
#include "hamshape/sampler.hpp"

using namespace hamshape;

TEST_CASE("RNG streams are deterministic and distinct", "[rng]") {
  Rng a = Rng::stream(1, 0), b = Rng::stream(1, 0), c = Rng::stream(1, 1);
  for (int k = 0; k < 10; ++k) {
    const auto va = a.next();
    CHECK(va == b.next());
    CHECK(va != c.next());
  }
  Rng u(2);
  for (int k = 0; k < 1000; ++k) {
    const double v = u.uniform();
    CHECK(v >= 0.0);
    CHECK(v < 1.0);
    CHECK(u.below(12) < 12);
  }
}

TEST_CASE("column draws", "[sampler]") {
  Rng rng(4);
  const auto labels = draw_clifford_labels(3, 2000, rng);
  std::array<int, 3> perm_counts{};
  for (const auto& c : labels) {
    for (auto p : c.perms()) ++perm_counts[p];
  }
  for (int count : perm_counts) CHECK(count == Catch::Approx(2000).epsilon(0.1));
  CHECK(sampled_column_count(10, 3.0) == 30);
  CHECK(sampled_column_count(7, 1.5) == 11);
}

TEST_CASE("sampler is deterministic per seed", "[sampler]") {
  const auto rows = two_local_strings(4);
  SparseHamiltonian j(4);
  for (const auto& a : rows) j.set(a, 1.0);
  SamplerConfig cfg;
  cfg.seed = 42;
  const auto a = sample_relaxation(rows, ConjugationMode::kPauli, j, cfg);
  const auto b = sample_relaxation(rows, ConjugationMode::kPauli, j, cfg);
  CHECK(a.matrix.cols == b.matrix.cols);
  CHECK(a.matrix.entries == b.matrix.entries);
  CHECK(a.matrix.cols.back().is_identity());
  CHECK(a.matrix.num_cols() == sampled_column_count(rows.size(), 3.0) + 1);
  cfg.seed = 43;
  CHECK(sample_relaxation(rows, ConjugationMode::kPauli, j, cfg).matrix.cols != a.matrix.cols);
}

TEST_CASE("ratio 3 is feasible on the first attempt for 2-local rows", "[sampler]") {
  const auto rows = two_local_strings(5);
  SparseHamiltonian j(5);
  for (const auto& a : rows) j.set(a, 1.0);
  int first = 0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    SamplerConfig cfg;
    cfg.seed = seed;
    const auto s = sample_relaxation(rows, ConjugationMode::kPauli, j, cfg);
    CHECK(check_feasible_matrix(s.matrix).feasible);
    if (s.attempts == 1) ++first;
  }
  CHECK(first >= 9);
}

TEST_CASE("r = d is never feasible", "[sampler]") {
  const auto rows = two_local_strings(3);
  SparseHamiltonian j(3);
  for (const auto& a : rows) j.set(a, 1.0);
  SamplerConfig cfg;
  cfg.ratio = 1.0;
  cfg.max_attempts = 5;
  cfg.append_identity = false;
  try {
    sample_relaxation(rows, ConjugationMode::kPauli, j, cfg);
    FAIL("expected SamplerExhausted");
  } catch (const SamplerExhausted& e) {
    CHECK(e.attempts() == 5);
  }
  cfg.ratio = 0.5;
  CHECK_THROWS_AS(sample_relaxation(rows, ConjugationMode::kPauli, j, cfg), std::invalid_argument);
}

TEST_CASE("Clifford sampling", "[sampler]") {
  Rng rng(6);
  const auto j = random_two_local(4, 0.3, rng);
  const auto rows = support_sets(j).suppnz;
  SamplerConfig cfg;
  cfg.seed = 1;
  const auto s = sample_relaxation(rows, ConjugationMode::kClifford, j, cfg);
  CHECK(s.matrix.mode == ConjugationMode::kClifford);
  CHECK(check_feasible_matrix(s.matrix).feasible);
}
