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

#ifndef HAMSHAPE_SCHEDULE_HPP
#define HAMSHAPE_SCHEDULE_HPP

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hamshape/hamiltonian.hpp"
#include "hamshape/lp.hpp"
#include "hamshape/pauli.hpp"

namespace hamshape {

/// Free evolution under S^dag H_S S for lambda * t seconds.
struct ScheduleBlock {
  CliffordLabel layer;
  double lambda = 0.0;
};

struct PulseSchedule {
  std::size_t n = 0;
  /// Target evolution time in seconds.
  double t = 0.0;
  std::vector<ScheduleBlock> blocks;
  bool commuting = false;
  /// Sum of lambda from the LP.
  double objective = 0.0;
  /// Merged Pauli pulse layers, present only after merge_pauli_layers.
  std::vector<CliffordLabel> pulses;

  double total_duration() const;
  bool all_pauli() const;
};

/// One gate layer in time order: the layer itself, or its adjoint.
struct PulseStep {
  CliffordLabel layer;
  bool adjoint = false;
};

/// Blocks for every strictly positive lambda, duplicate labels merged and
/// sorted canonically. Throws std::invalid_argument for non-optimal input.
PulseSchedule build_schedule(const LpSolution& sol, const std::vector<CliffordLabel>& cols, double t,
                             const SparseHamiltonian& h_s);

/// Gate layers in time order: S_1, then S_1^dag S_2 as an adjoint/forward
/// pair at every block boundary, then S_k^dag.
std::vector<PulseStep> pulse_sequence(const PulseSchedule& s);

/// Fuses each adjoint/forward pair of a Pauli schedule into one layer,
/// giving k + 1 pulses b_1, b_1 + b_2, ..., b_{k-1} + b_k, b_k.
PulseSchedule merge_pauli_layers(const PulseSchedule& s);

/// Second-order Trotter expansion: the block list (reversed, then forward)
/// repeated c times, each lambda divided by 2c.
PulseSchedule trotter_expand(const PulseSchedule& s, int cycles);

/// sum_b lambda_b S_b^dag H_S S_b.
SparseHamiltonian reconstruct(const PulseSchedule& s, const SparseHamiltonian& h_s);

/// Whether all conjugated block Hamiltonians commute pairwise. Terms are
/// compared by the symplectic form first; when some pair of terms
/// anticommutes, the commutator of the two block Hamiltonians is expanded
/// exactly in the Pauli basis as long as that stays within `budget` term
/// products, otherwise the answer is false.
bool blocks_commute(const std::vector<ScheduleBlock>& blocks, const SparseHamiltonian& h_s,
                    std::size_t budget = 50'000'000);

/// Sampled envelope s(t) >= 0 as (time, value) pairs, integrated by the
/// trapezoid rule.
struct EnvelopeSpec {
  std::vector<std::pair<double, double>> samples;

  double integral() const;
  double span() const;
};

/// Duration of a shaped pulse window delivering the same integrated
/// evolution as a flat one: duration * span / integral.
double envelope_adjust(double duration, const EnvelopeSpec& env);

class ScheduleFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string to_json(const PulseSchedule& s);
PulseSchedule schedule_from_json(const std::string& text);
void save_schedule(const PulseSchedule& s, const std::filesystem::path& path);
PulseSchedule load_schedule(const std::filesystem::path& path);

}  // namespace hamshape

#endif  // HAMSHAPE_SCHEDULE_HPP
