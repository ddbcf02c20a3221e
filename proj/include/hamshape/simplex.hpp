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

// Dense two-phase revised simplex for standard-form programs
//   minimize c^T x  subject to  A x = b,  x >= 0.

#ifndef HAMSHAPE_SIMPLEX_HPP
#define HAMSHAPE_SIMPLEX_HPP

#include <cstddef>

#include <Eigen/Dense>

namespace hamshape {

enum class SimplexStatus { kOptimal, kInfeasible, kUnbounded, kIterationLimit };

/// kBland: smallest-index entering and leaving variables throughout.
/// kDantzigBland: most negative reduced cost, switching to Bland's rule
/// while pivots stay degenerate, which keeps the anti-cycling guarantee.
enum class PricingRule { kBland, kDantzigBland };

const char* status_name(SimplexStatus status);

struct SimplexOptions {
  /// Smallest |pivot| accepted in the ratio test and the reduced-cost threshold.
  double pivot_tolerance = 1e-9;
  /// Phase-1 residual (sum of artificials) above which the program is
  /// declared infeasible, relative to 1 + ||b||_inf.
  double infeasibility_tolerance = 1e-9;
  /// Iterations between fresh LU factorizations of the basis.
  int refactor_interval = 50;
  /// 0 selects 100 * (rows + cols) + 10000.
  std::size_t max_iterations = 0;
  /// Stop once a feasible basis is found.
  bool phase1_only = false;
  PricingRule pricing = PricingRule::kDantzigBland;
  /// Consecutive degenerate pivots after which kDantzigBland uses Bland.
  int degenerate_switch = 20;
};

struct SimplexStats {
  std::size_t phase1_iterations = 0;
  std::size_t phase2_iterations = 0;
  std::size_t refactorizations = 0;
  std::size_t degenerate_pivots = 0;
  std::size_t bland_pivots = 0;
  double seconds = 0.0;
};

struct SimplexResult {
  SimplexStatus status = SimplexStatus::kInfeasible;
  /// Primal point (length cols); basic feasible when optimal.
  Eigen::VectorXd x;
  /// Dual multipliers y with A^T y <= c at optimality (length rows).
  Eigen::VectorXd y;
  double objective = 0.0;
  /// Phase-1 residual at termination of phase 1.
  double infeasibility = 0.0;
  SimplexStats stats;
};

/// Solves the program. Rows with negative right-hand side are negated internally; the
/// reported duals refer to the original rows.
SimplexResult solve_standard_form(const Eigen::MatrixXd& a, const Eigen::VectorXd& b,
                                  const Eigen::VectorXd& c, const SimplexOptions& options = {});

}  // namespace hamshape

#endif  // HAMSHAPE_SIMPLEX_HPP
