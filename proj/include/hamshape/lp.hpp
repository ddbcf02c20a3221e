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

#ifndef HAMSHAPE_LP_HPP
#define HAMSHAPE_LP_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

#include "hamshape/engineering.hpp"
#include "hamshape/simplex.hpp"

namespace hamshape {

/// minimize 1^T lambda  subject to  W lambda = rhs,  lambda >= 0.
struct LpProblem {
  Eigen::MatrixXd matrix;
  Eigen::VectorXd rhs;
};

enum class LpStatus { kOptimal, kInfeasible };

const char* status_name(LpStatus status);

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  Eigen::VectorXd lambda;
  double objective = 0.0;
  /// Maximizer of rhs^T y subject to W^T y <= 1.
  Eigen::VectorXd dual;
  SimplexStats stats;

  /// Number of entries above the threshold.
  std::size_t support_size(double threshold = 1e-9) const;
  /// |objective - rhs^T dual| / (1 + |objective|).
  double relative_duality_gap(const Eigen::VectorXd& rhs) const;
};

/// Contract tolerance for residuals and duality gaps.
inline constexpr double kLpContractTolerance = 1e-7;

/// Thrown when the simplex ends unbounded or hits its iteration limit, which
/// cannot happen for a well-posed minimum-time program.
class LpInternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Returns a basic optimal solution or Infeasible.
LpSolution solve_min_time(const LpProblem& problem);

enum class FeasibilityReason { kFeasible, kRankDeficient, kNoPositiveKernelVector };

const char* reason_name(FeasibilityReason reason);

struct FeasibilityReport {
  bool feasible = false;
  FeasibilityReason reason = FeasibilityReason::kRankDeficient;
  Eigen::Index rank = 0;
  /// When feasible: x >= 1 with W x = 0.
  Eigen::VectorXd certificate;
};

inline constexpr double kRankTolerance = 1e-9;

/// W is feasible (every right-hand side reachable with lambda >= 0) iff it
/// has full row rank and W x = 0 admits a solution with x >= 1.
FeasibilityReport check_feasible_matrix(const Eigen::MatrixXd& w);
FeasibilityReport check_feasible_matrix(const ConjugationMatrix& w);

/// Probability that r symmetric random vectors in general position in R^d
/// positively span it: 1 - 2^{-(r-1)} sum_{k<d} C(r-1, k).
double wendel_probability(std::int64_t r, std::int64_t d);

}  // namespace hamshape

#endif  // HAMSHAPE_LP_HPP
