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

#include "hamshape/lp.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

namespace hamshape {

const char* status_name(LpStatus status) {
  return status == LpStatus::kOptimal ? "optimal" : "infeasible";
}

const char* reason_name(FeasibilityReason reason) {
  switch (reason) {
    case FeasibilityReason::kFeasible:
      return "feasible";
    case FeasibilityReason::kRankDeficient:
      return "rank-deficient";
    case FeasibilityReason::kNoPositiveKernelVector:
      return "no-positive-kernel-vector";
  }
  return "unknown";
}

std::size_t LpSolution::support_size(double threshold) const {
  return static_cast<std::size_t>((lambda.array() > threshold).count());
}

double LpSolution::relative_duality_gap(const Eigen::VectorXd& rhs) const {
  return std::abs(objective - rhs.dot(dual)) / (1.0 + std::abs(objective));
}

LpSolution solve_min_time(const LpProblem& problem) {
  const auto& w = problem.matrix;
  if (w.rows() < 1 || w.cols() < 1) throw std::invalid_argument("LP needs at least one row and column");
  if (problem.rhs.size() != w.rows()) throw std::invalid_argument("LP right-hand side has wrong length");
  const SimplexResult res =
      solve_standard_form(w, problem.rhs, Eigen::VectorXd::Ones(w.cols()));
  LpSolution sol;
  sol.stats = res.stats;
  switch (res.status) {
    case SimplexStatus::kOptimal:
      sol.status = LpStatus::kOptimal;
      sol.lambda = res.x;
      sol.objective = res.objective;
      sol.dual = res.y;
      return sol;
    case SimplexStatus::kInfeasible:
      sol.status = LpStatus::kInfeasible;
      sol.lambda = Eigen::VectorXd::Zero(w.cols());
      sol.dual = Eigen::VectorXd::Zero(w.rows());
      return sol;
    default:
      throw LpInternalError(std::string("simplex ended with status ") + status_name(res.status));
  }
}

FeasibilityReport check_feasible_matrix(const Eigen::MatrixXd& w) {
  FeasibilityReport rep;
  if (w.rows() == 0) {
    rep.feasible = true;
    rep.reason = FeasibilityReason::kFeasible;
    rep.certificate = Eigen::VectorXd::Ones(w.cols());
    return rep;
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(w);
  qr.setThreshold(kRankTolerance);
  rep.rank = qr.rank();
  if (rep.rank < w.rows()) {
    rep.reason = FeasibilityReason::kRankDeficient;
    return rep;
  }
  // x = x' + 1 with x' >= 0 and W x' = -W 1.
  const Eigen::VectorXd rhs = -(w * Eigen::VectorXd::Ones(w.cols()));
  SimplexOptions opt;
  opt.phase1_only = true;
  const SimplexResult res = solve_standard_form(w, rhs, Eigen::VectorXd::Zero(w.cols()), opt);
  if (res.status != SimplexStatus::kOptimal) {
    rep.reason = FeasibilityReason::kNoPositiveKernelVector;
    return rep;
  }
  rep.feasible = true;
  rep.reason = FeasibilityReason::kFeasible;
  rep.certificate = res.x.array() + 1.0;
  return rep;
}

FeasibilityReport check_feasible_matrix(const ConjugationMatrix& w) {
  return check_feasible_matrix(w.entries);
}

double wendel_probability(std::int64_t r, std::int64_t d) {
  if (r < 1 || d < 1) throw std::invalid_argument("wendel_probability needs r, d >= 1");
  if (r <= d) return 0.0;
  // Upper tail sum_{k=d}^{r-1} C(r-1, k) / 2^{r-1}, in log space.
  const double m = static_cast<double>(r - 1);
  const double log_norm = m * std::numbers::ln2;
  std::vector<double> logs;
  logs.reserve(static_cast<std::size_t>(r - d));
  for (std::int64_t k = d; k <= r - 1; ++k) {
    const double kk = static_cast<double>(k);
    logs.push_back(std::lgamma(m + 1) - std::lgamma(kk + 1) - std::lgamma(m - kk + 1) - log_norm);
  }
  const double top = *std::max_element(logs.begin(), logs.end());
  double s = 0.0;
  for (double l : logs) s += std::exp(l - top);
  return std::clamp(std::exp(top) * s, 0.0, 1.0);
}

}  // namespace hamshape
