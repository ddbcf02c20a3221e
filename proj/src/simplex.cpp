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

#include "hamshape/simplex.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace hamshape {

const char* status_name(SimplexStatus status) {
  switch (status) {
    case SimplexStatus::kOptimal:
      return "optimal";
    case SimplexStatus::kInfeasible:
      return "infeasible";
    case SimplexStatus::kUnbounded:
      return "unbounded";
    case SimplexStatus::kIterationLimit:
      return "iteration-limit";
  }
  return "unknown";
}

namespace {

using Eigen::Index;
using Eigen::MatrixXd;
using Eigen::VectorXd;

// Basis inverse kept as an LU factorization of B_0 followed by a product of
// elementary column updates, B_k = B_0 E_1 ... E_k.
class BasisFactor {
 public:
  void factor(const MatrixXd& b) {
    lu_.compute(b);
    etas_.clear();
  }

  std::size_t num_updates() const { return etas_.size(); }

  // B^{-1} v
  VectorXd ftran(const VectorXd& v) const {
    VectorXd out = lu_.solve(v);
    for (const auto& eta : etas_) {
      const double pivot = out(eta.row) / eta.column(eta.row);
      out -= pivot * eta.column;
      out(eta.row) = pivot;
    }
    return out;
  }

  // B^{-T} v
  VectorXd btran(VectorXd v) const {
    for (auto it = etas_.rbegin(); it != etas_.rend(); ++it) {
      const double keep = v(it->row);
      v(it->row) = (keep - (it->column.dot(v) - it->column(it->row) * keep)) / it->column(it->row);
    }
    return lu_.transpose().solve(v);
  }

  void update(Index row, VectorXd alpha) { etas_.push_back({row, std::move(alpha)}); }

 private:
  struct Eta {
    Index row;
    VectorXd column;
  };
  Eigen::PartialPivLU<MatrixXd> lu_;
  std::vector<Eta> etas_;
};

class Solver {
 public:
  Solver(const MatrixXd& a, const VectorXd& b, const VectorXd& c, const SimplexOptions& options)
      : a_(a), b_(b), c_(c), opt_(options), m_(a.rows()), n_(a.cols()) {
    signs_ = VectorXd::Ones(m_);
    for (Index i = 0; i < m_; ++i) {
      if (b_(i) < 0) {
        signs_(i) = -1.0;
        a_.row(i) *= -1.0;
        b_(i) = -b_(i);
      }
    }
    max_iterations_ = opt_.max_iterations ? opt_.max_iterations
                                          : static_cast<std::size_t>(100 * (m_ + n_) + 10000);
  }

  SimplexResult run() {
    const auto start = std::chrono::steady_clock::now();
    SimplexResult res;

    // Phase 1 on [A I] with unit cost on the artificials.
    basis_.resize(m_);
    for (Index i = 0; i < m_; ++i) basis_[i] = n_ + i;
    is_basic_.assign(n_ + m_, -1);
    for (Index i = 0; i < m_; ++i) is_basic_[n_ + i] = i;
    cost_ = VectorXd::Zero(n_ + m_);
    cost_.tail(m_).setOnes();
    refactor();

    SimplexStatus st = iterate(res.stats.phase1_iterations, res.stats);
    res.infeasibility = artificial_sum();
    if (st == SimplexStatus::kIterationLimit) return finish(res, st, start);
    if (res.infeasibility > opt_.infeasibility_tolerance * (1.0 + b_.lpNorm<Eigen::Infinity>())) {
      return finish(res, SimplexStatus::kInfeasible, start);
    }
    drive_out_artificials();
    if (opt_.phase1_only) return finish(res, SimplexStatus::kOptimal, start);

    cost_.head(n_) = c_;
    cost_.tail(m_).setZero();
    st = iterate(res.stats.phase2_iterations, res.stats);
    return finish(res, st, start);
  }

 private:
  VectorXd column(Index k) const {
    if (k < n_) return a_.col(k);
    VectorXd e = VectorXd::Zero(m_);
    e(k - n_) = 1.0;
    return e;
  }

  double artificial_sum() const {
    double s = 0.0;
    for (Index i = 0; i < m_; ++i) {
      if (basis_[i] >= n_) s += std::max(0.0, x_basic_(i));
    }
    return s;
  }

  void refactor() {
    MatrixXd bmat(m_, m_);
    for (Index i = 0; i < m_; ++i) bmat.col(i) = column(basis_[i]);
    factor_.factor(bmat);
    ++refactorizations_;
    x_basic_ = factor_.ftran(b_);
    for (Index i = 0; i < m_; ++i) {
      if (x_basic_(i) < 0 && x_basic_(i) > -opt_.pivot_tolerance) x_basic_(i) = 0.0;
    }
  }

  VectorXd basic_costs() const {
    VectorXd cb(m_);
    for (Index i = 0; i < m_; ++i) cb(i) = cost_(basis_[i]);
    return cb;
  }

  // Bland picks the first original variable with a negative reduced cost,
  // Dantzig the most negative one. Artificials never re-enter.
  Index price(const VectorXd& y, bool bland) const {
    Index best = -1;
    double best_value = -opt_.pivot_tolerance;
    for (Index k = 0; k < n_; ++k) {
      if (is_basic_[k] >= 0) continue;
      const double reduced = cost_(k) - a_.col(k).dot(y);
      if (reduced < best_value) {
        if (bland) return k;
        best = k;
        best_value = reduced;
      }
    }
    return best;
  }

  // Minimum ratio. Ties go to the smallest basic variable index under Bland
  // and to the largest pivot otherwise. Artificials held at zero in phase 2
  // block any movement of their row.
  Index ratio_test(const VectorXd& alpha, double& step, bool bland) const {
    Index leave = -1;
    step = std::numeric_limits<double>::infinity();
    Index leave_var = std::numeric_limits<Index>::max();
    for (Index i = 0; i < m_; ++i) {
      double ratio;
      if (locked_artificials_ && basis_[i] >= n_) {
        if (std::abs(alpha(i)) <= opt_.pivot_tolerance) continue;
        ratio = 0.0;
      } else {
        if (alpha(i) <= opt_.pivot_tolerance) continue;
        ratio = std::max(0.0, x_basic_(i)) / alpha(i);
      }
      const bool tie = leave >= 0 && ratio <= step + 1e-12;
      const bool better_tie =
          tie && (bland ? basis_[i] < leave_var : std::abs(alpha(i)) > std::abs(alpha(leave)));
      if (ratio < step - 1e-12 || better_tie) {
        step = std::min(step, ratio);
        leave = i;
        leave_var = basis_[i];
      }
    }
    return leave;
  }

  void pivot(Index leave, Index enter, const VectorXd& alpha, double step) {
    x_basic_ -= step * alpha;
    x_basic_(leave) = step;
    is_basic_[basis_[leave]] = -1;
    basis_[leave] = enter;
    is_basic_[enter] = static_cast<int>(leave);
    if (static_cast<int>(factor_.num_updates()) + 1 >= opt_.refactor_interval) {
      refactor();
    } else {
      factor_.update(leave, alpha);
      for (Index i = 0; i < m_; ++i) {
        if (x_basic_(i) < 0 && x_basic_(i) > -opt_.pivot_tolerance) x_basic_(i) = 0.0;
      }
    }
  }

  SimplexStatus iterate(std::size_t& counter, SimplexStats& stats) {
    while (true) {
      if (total_iterations_ >= max_iterations_) return SimplexStatus::kIterationLimit;
      const bool bland = opt_.pricing == PricingRule::kBland || degenerate_run_ >= opt_.degenerate_switch;
      const VectorXd y = factor_.btran(basic_costs());
      const Index enter = price(y, bland);
      if (enter < 0) return SimplexStatus::kOptimal;
      const VectorXd alpha = factor_.ftran(column(enter));
      double step = 0.0;
      const Index leave = ratio_test(alpha, step, bland);
      if (leave < 0) return SimplexStatus::kUnbounded;
      if (bland) ++stats.bland_pivots;
      if (step == 0.0) {
        ++stats.degenerate_pivots;
        ++degenerate_run_;
      } else {
        degenerate_run_ = 0;
      }
      pivot(leave, enter, alpha, step);
      ++counter;
      ++total_iterations_;
    }
  }

  void drive_out_artificials() {
    for (Index i = 0; i < m_; ++i) {
      if (basis_[i] < n_) continue;
      // Row i of B^{-1} A picks a nonbasic original column to swap in.
      VectorXd e = VectorXd::Zero(m_);
      e(i) = 1.0;
      const VectorXd row = factor_.btran(e);
      Index best = -1;
      double best_abs = opt_.pivot_tolerance * 1e3;
      for (Index k = 0; k < n_; ++k) {
        if (is_basic_[k] >= 0) continue;
        const double v = std::abs(a_.col(k).dot(row));
        if (v > best_abs) {
          best_abs = v;
          best = k;
        }
      }
      if (best < 0) continue;
      const VectorXd alpha = factor_.ftran(column(best));
      pivot(i, best, alpha, 0.0);
    }
    refactor();
    locked_artificials_ = true;
  }

  SimplexResult finish(SimplexResult& res, SimplexStatus st,
                       std::chrono::steady_clock::time_point start) {
    res.status = st;
    refactor();
    res.x = VectorXd::Zero(n_);
    for (Index i = 0; i < m_; ++i) {
      if (basis_[i] < n_) res.x(basis_[i]) = std::max(0.0, x_basic_(i));
    }
    if (st == SimplexStatus::kOptimal && !opt_.phase1_only) {
      const VectorXd y = factor_.btran(basic_costs());
      res.y = y.cwiseProduct(signs_);
      res.objective = c_.dot(res.x);
    } else {
      res.y = VectorXd::Zero(m_);
      res.objective = st == SimplexStatus::kOptimal ? c_.dot(res.x) : 0.0;
    }
    res.stats.refactorizations = refactorizations_;
    res.stats.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return res;
  }

  MatrixXd a_;
  VectorXd b_;
  VectorXd c_;
  SimplexOptions opt_;
  Index m_;
  Index n_;
  VectorXd signs_;
  std::size_t max_iterations_;
  std::size_t total_iterations_ = 0;
  std::size_t refactorizations_ = 0;
  int degenerate_run_ = 0;

  std::vector<Index> basis_;
  std::vector<int> is_basic_;
  VectorXd cost_;
  VectorXd x_basic_;
  BasisFactor factor_;
  bool locked_artificials_ = false;
};

}  // namespace

SimplexResult solve_standard_form(const Eigen::MatrixXd& a, const Eigen::VectorXd& b,
                                  const Eigen::VectorXd& c, const SimplexOptions& options) {
  if (a.rows() != b.size() || a.cols() != c.size()) {
    throw std::invalid_argument("simplex: inconsistent dimensions");
  }
  if (a.rows() == 0) throw std::invalid_argument("simplex: no constraints");
  if (!a.allFinite() || !b.allFinite() || !c.allFinite()) {
    throw std::invalid_argument("simplex: non-finite input");
  }
  Solver solver(a, b, c, options);
  return solver.run();
}

}  // namespace hamshape
