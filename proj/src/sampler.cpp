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

#include "hamshape/sampler.hpp"

#include <cmath>

#include "hamshape/lp.hpp"

namespace hamshape {

std::size_t sampled_column_count(std::size_t d, double ratio) {
  if (!(ratio > 0)) throw std::invalid_argument("sampling ratio must be positive");
  return static_cast<std::size_t>(std::ceil(ratio * static_cast<double>(d) - 1e-9));
}

std::vector<PauliIndex> draw_pauli_labels(std::size_t num_qubits, std::size_t count, Rng& rng) {
  std::vector<PauliIndex> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    PauliIndex b(num_qubits);
    for (std::size_t q = 0; q < num_qubits; ++q) b.set(q, static_cast<LocalPauli>(rng.below(4)));
    out.push_back(std::move(b));
  }
  return out;
}

std::vector<CliffordLabel> draw_clifford_labels(std::size_t num_qubits, std::size_t count, Rng& rng) {
  std::vector<CliffordLabel> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    std::vector<std::uint8_t> perms(num_qubits);
    PauliIndex signs(num_qubits);
    for (std::size_t q = 0; q < num_qubits; ++q) {
      const auto v = rng.below(12);
      perms[q] = static_cast<std::uint8_t>(v / 4);
      signs.set(q, static_cast<LocalPauli>(v % 4));
    }
    out.emplace_back(std::move(perms), std::move(signs));
  }
  return out;
}

ConjugationMatrix build_matrix(ConjugationMode mode, const SparseHamiltonian& j,
                               const std::vector<PauliIndex>& rows,
                               const std::vector<CliffordLabel>& cols) {
  if (mode == ConjugationMode::kClifford) return build_clifford_matrix(j, rows, cols);
  std::vector<PauliIndex> labels;
  labels.reserve(cols.size());
  for (const auto& c : cols) {
    if (!c.is_pauli()) throw std::invalid_argument("Pauli mode needs Pauli column labels");
    labels.push_back(c.signs());
  }
  return build_pauli_matrix(rows, labels);
}

ConjugationMatrix draw_relaxation(const std::vector<PauliIndex>& rows, ConjugationMode mode,
                                  const SparseHamiltonian& j, double ratio, bool append_identity,
                                  Rng& rng) {
  const std::size_t n = j.num_qubits();
  const std::size_t r = sampled_column_count(rows.size(), ratio);
  std::vector<CliffordLabel> cols;
  if (mode == ConjugationMode::kPauli) {
    for (auto& b : draw_pauli_labels(n, r, rng)) cols.push_back(CliffordLabel::pauli(b));
  } else {
    cols = draw_clifford_labels(n, r, rng);
  }
  if (append_identity) cols.push_back(CliffordLabel::identity(n));
  return build_matrix(mode, j, rows, cols);
}

SampledMatrix sample_relaxation(const std::vector<PauliIndex>& rows, ConjugationMode mode,
                                const SparseHamiltonian& j, const SamplerConfig& cfg) {
  if (cfg.ratio < 1.0) throw std::invalid_argument("sampling ratio must be at least 1");
  if (cfg.max_attempts < 1) throw std::invalid_argument("max_attempts must be at least 1");
  for (int attempt = 0; attempt < cfg.max_attempts; ++attempt) {
    Rng rng = Rng::stream(cfg.seed, static_cast<std::uint64_t>(attempt));
    ConjugationMatrix w = draw_relaxation(rows, mode, j, cfg.ratio, cfg.append_identity, rng);
    if (check_feasible_matrix(w).feasible) return {std::move(w), attempt + 1};
  }
  throw SamplerExhausted(cfg.max_attempts);
}

}  // namespace hamshape
