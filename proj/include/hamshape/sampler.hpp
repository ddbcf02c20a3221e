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

#ifndef HAMSHAPE_SAMPLER_HPP
#define HAMSHAPE_SAMPLER_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "hamshape/engineering.hpp"
#include "hamshape/rng.hpp"

namespace hamshape {

struct SamplerConfig {
  /// Number of random columns is ceil(ratio * d).
  double ratio = 3.0;
  int max_attempts = 20;
  std::uint64_t seed = 0;
  /// Append the identity label after the random draws.
  bool append_identity = true;
};

class SamplerExhausted : public std::runtime_error {
 public:
  explicit SamplerExhausted(int attempts)
      : std::runtime_error("no feasible column set found in " + std::to_string(attempts) +
                           " attempts; raise the ratio"),
        attempts_(attempts) {}
  int attempts() const { return attempts_; }

 private:
  int attempts_;
};

std::size_t sampled_column_count(std::size_t d, double ratio);

/// i.i.d. uniform labels from F_2^{2n}.
std::vector<PauliIndex> draw_pauli_labels(std::size_t num_qubits, std::size_t count, Rng& rng);
/// i.i.d. uniform labels from C_XY^{n}.
std::vector<CliffordLabel> draw_clifford_labels(std::size_t num_qubits, std::size_t count, Rng& rng);

/// Builds the conjugation matrix over the given labels in the chosen mode.
/// In Pauli mode every label must have p = 0.
ConjugationMatrix build_matrix(ConjugationMode mode, const SparseHamiltonian& j,
                               const std::vector<PauliIndex>& rows,
                               const std::vector<CliffordLabel>& cols);

/// One draw of ceil(ratio * d) random columns (plus identity if configured).
ConjugationMatrix draw_relaxation(const std::vector<PauliIndex>& rows, ConjugationMode mode,
                                  const SparseHamiltonian& j, double ratio, bool append_identity,
                                  Rng& rng);

struct SampledMatrix {
  ConjugationMatrix matrix;
  int attempts = 0;
};

/// Draws fresh column sets until one passes check_feasible_matrix. Attempt k
/// uses the stream (seed, k). Throws SamplerExhausted.
SampledMatrix sample_relaxation(const std::vector<PauliIndex>& rows, ConjugationMode mode,
                                const SparseHamiltonian& j, const SamplerConfig& cfg);

}  // namespace hamshape

#endif  // HAMSHAPE_SAMPLER_HPP
