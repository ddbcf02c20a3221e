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

#ifndef HAMSHAPE_EXPERIMENTS_HPP
#define HAMSHAPE_EXPERIMENTS_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hamshape/config.hpp"
#include "hamshape/engineering.hpp"
#include "hamshape/lp.hpp"
#include "hamshape/plot.hpp"
#include "hamshape/sampler.hpp"
#include "hamshape/schedule.hpp"
#include "hamshape/simulator.hpp"

namespace hamshape {

enum ExitCode : int {
  kExitOk = 0,
  kExitConfigError = 1,
  kExitUnreachable = 2,
  kExitSamplerExhausted = 3,
  kExitDenseLimit = 4,
};

/// Runs fn(0) ... fn(count - 1) on up to `threads` workers (0 = hardware
/// concurrency). The first exception thrown by any task is rethrown.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& fn);

struct MeanStd {
  double mean = 0.0;
  /// Sample standard deviation; 0 for a single value.
  double std = 0.0;
};

MeanStd mean_std(const std::vector<double>& values);

// ---------------------------------------------------------------- engineer

struct EngineerResult {
  TargetVector target;
  ConjugationMatrix matrix;
  LpSolution solution;
  PulseSchedule schedule;
  int attempts = 0;
};

/// Builds the target vector, draws (or enumerates) the columns, solves the
/// LP and assembles the schedule. Throws UnreachableTarget or
/// SamplerExhausted.
EngineerResult engineer(const SparseHamiltonian& j, const SparseHamiltonian& a, ConjugationMode mode,
                        const SamplerConfig& sampler, bool all_columns, double t);

// ---------------------------------------------------------------- feasibility

struct FeasibilityPoint {
  std::size_t n = 0;
  std::size_t d = 0;
  double ratio = 0.0;
  std::size_t r = 0;
  int replicates = 0;
  int successes = 0;
  double wendel = 0.0;

  double frequency() const { return replicates ? static_cast<double>(successes) / replicates : 0.0; }
};

/// Rows are all 1- and 2-local strings (Pauli mode) or suppnz of a fresh
/// random 2-local system per replicate (Clifford mode); columns are
/// ceil(ratio * d) i.i.d. labels without the identity.
std::vector<FeasibilityPoint> feasibility_scan(ConjugationMode mode, const std::vector<std::int64_t>& ns,
                                               const std::vector<double>& ratios, int replicates,
                                               std::uint64_t seed, double extra, int threads);

CsvTable feasibility_table(ConjugationMode mode, const std::vector<FeasibilityPoint>& points);

// ---------------------------------------------------------------- relaxation

struct RelaxationPoint {
  std::size_t n = 0;
  std::size_t d = 0;
  double ratio = 0.0;
  std::size_t r = 0;
  /// Objective per replicate when the columns for larger ratios extend
  /// those for smaller ones.
  std::vector<double> nested;
  /// Objective per replicate with columns drawn afresh for every ratio.
  std::vector<double> iid;
};

/// One random instance per replicate, solved at every ratio.
std::vector<RelaxationPoint> relaxation_scan(ConjugationMode mode, std::size_t n,
                                             const std::vector<double>& ratios, int replicates,
                                             std::uint64_t seed, double extra, bool identity_column,
                                             int max_attempts, int threads);

CsvTable relaxation_table(ConjugationMode mode, const std::vector<RelaxationPoint>& points);

// ---------------------------------------------------------------- lattice

struct LatticePoint {
  std::size_t side = 0;
  std::size_t n = 0;
  std::size_t edges = 0;
  std::size_t d = 0;
  std::size_t r = 0;
  std::vector<LpStatus> status;
  std::vector<double> objective;
  /// max |M_a| of each replicate's target.
  std::vector<double> target_max;
  std::vector<double> seconds;
  std::vector<int> attempts;
};

/// Pauli-mode LPs for the all-two-body lattice system with J = 1 and
/// M ~ unif[-1, 1]^d.
std::vector<LatticePoint> lattice_bench(const std::vector<std::int64_t>& sides, double ratio, int replicates,
                                        std::uint64_t seed, bool identity_column, int max_attempts,
                                        int threads);

CsvTable lattice_table(const std::vector<LatticePoint>& points);
CsvTable lattice_timing_table(const std::vector<LatticePoint>& points);

// ---------------------------------------------------------------- simulate

struct SimulationStudy {
  std::size_t n = 4;
  /// ising or heisenberg.
  std::string target_model = "ising";
  ConjugationMode mode = ConjugationMode::kPauli;
  double ratio = 3.0;
  bool identity_column = true;
  int max_attempts = 20;
  CouplingModel coupling;
  std::uint64_t seed = 0;
  int replicates = 30;
};

struct PreparedReplicate {
  SparseHamiltonian system;
  SparseHamiltonian target;
  PulseSchedule schedule;
};

/// Random target per replicate, engineered on the ion-trap system.
std::vector<PreparedReplicate> prepare_replicates(const SimulationStudy& study, int threads);

/// Infidelity of every replicate at evolution time t. Replicate k uses the
/// calibration seed derived from (seed, k), so sweeps share random numbers.
std::vector<double> replicate_infidelities(const std::vector<PreparedReplicate>& reps, const SimConfig& cfg,
                                           double t, std::uint64_t seed, int threads);

// ---------------------------------------------------------------- front end

int run_engineer(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err);
int run_feasibility_scan(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err);
int run_relaxation_scan(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err);
int run_lattice_bench(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err);
int run_simulate(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err);

/// Dispatches on cfg.kind and maps failures onto ExitCode.
int run_experiment(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace hamshape

#endif  // HAMSHAPE_EXPERIMENTS_HPP
