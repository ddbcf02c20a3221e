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

#ifndef HAMSHAPE_SIMULATOR_HPP
#define HAMSHAPE_SIMULATOR_HPP

#include <cstddef>
#include <cstdint>
#include <optional>

#include "hamshape/dense.hpp"
#include "hamshape/hamiltonian.hpp"
#include "hamshape/schedule.hpp"

namespace hamshape {

struct SimConfig {
  /// Duration of each full gate layer in seconds; each half pulse runs t_p/2.
  double t_p = 0.0;
  /// Calibration error strength: the simulated couplings are the nominal
  /// ones scaled by independent uniform factors in [1 - eps, 1 + eps].
  double epsilon = 0.0;
  /// Second-order Trotter cycles for non-commuting schedules.
  int cycles = 1;
  std::uint64_t seed = 0;
  /// Fuse adjacent Pauli layers into single pulses where possible.
  bool merge_pauli_pulses = false;
  std::size_t dense_limit = kDefaultDenseLimit;

  /// t_p = pi / Omega for Rabi frequency Omega (rad/s).
  static double pulse_time_from_rabi(double omega);
};

/// exp(-i(-S2 + (t_p/2)H)) exp(-i(-S1 + (t_p/2)H)) exp(-i tau H)
/// exp(-i(S1 + (t_p/2)H)) exp(-i(S2 + (t_p/2)H)) with tau = t * lambda.
DenseMatrix evolution_block(const PulseGenerators& pulses, double lambda, double t, double t_p,
                            const DenseMatrix& h_s);

/// Product of evolution blocks in time order (first block rightmost). The
/// schedule is Trotter-expanded with cfg.cycles unless it is commuting.
/// `h_s` is the nominal system Hamiltonian; calibration error is applied to
/// it when cfg.epsilon > 0.
DenseMatrix simulate_schedule(const PulseSchedule& s, const SimConfig& cfg,
                              const SparseHamiltonian& h_s);

/// exp(-i t H).
DenseMatrix target_unitary(const SparseHamiltonian& h, double t,
                           std::size_t limit = kDefaultDenseLimit);

/// 1 - (|Tr(U_T^dag U)|^2 / d + 1) / (d + 1).
double avg_gate_infidelity(const DenseMatrix& u_sim, const DenseMatrix& u_target);

/// Each coefficient times an independent draw from unif[1 - eps, 1 + eps].
SparseHamiltonian perturb_couplings(const SparseHamiltonian& j, double epsilon, std::uint64_t seed);

/// Ion chain with ZZ couplings. Without an explicit matrix the couplings are
/// a power-law surrogate
///   J_ij = j0 * ((b1 / omega) / (b1_ref / omega_ref))^2 / |i - j|^alpha
/// with the reference gradient 40 T/m and trap frequency 2 pi 400 kHz.
struct CouplingModel {
  std::size_t n = 2;
  double b1 = 40.0;
  double omega = 2.0 * 3.14159265358979323846 * 400e3;
  double alpha = 3.0;
  double j0 = 1.0;
  std::optional<Eigen::MatrixXd> matrix;
};

/// H_S = -sum_{i<j} J_ij Z_i Z_j.
SparseHamiltonian ion_trap_couplings(const CouplingModel& m);

}  // namespace hamshape

#endif  // HAMSHAPE_SIMULATOR_HPP
