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

// Acceptance checks. Usage: acceptance [acNN ...]; no argument runs all.
// Prints one PASS/FAIL line per criterion and exits non-zero on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "hamshape/engineering.hpp"
#include "hamshape/experiments.hpp"
#include "hamshape/lp.hpp"
#include "hamshape/models.hpp"
#include "hamshape/sampler.hpp"
#include "hamshape/schedule.hpp"
#include "hamshape/simulator.hpp"
#include "oracles.hpp"

using namespace hamshape;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

oracle::Mat dense_of(const SparseHamiltonian& h) {
  const std::size_t dim = std::size_t{1} << h.num_qubits();
  oracle::Mat m = oracle::Mat::Zero(dim, dim);
  for (const auto& [a, v] : h.terms()) m += v * oracle::pauli(a.to_string());
  return m;
}

oracle::Mat layer_of(const CliffordLabel& c) {
  oracle::Mat u = oracle::Mat::Identity(1, 1);
  for (const auto& tok : c.tokens()) u = oracle::kron(u, oracle::clifford_gate(tok));
  return u;
}

double operator_norm_hermitian(const oracle::Mat& m) {
  Eigen::SelfAdjointEigenSolver<oracle::Mat> es(m);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

std::vector<PauliIndex> nonidentity_strings(std::size_t n) {
  auto all = all_pauli_labels(n);
  all.erase(all.begin());
  return all;
}

std::vector<CliffordLabel> all_pauli_columns(std::size_t n) {
  std::vector<CliffordLabel> out;
  for (auto& b : all_pauli_labels(n)) out.push_back(CliffordLabel::pauli(b));
  return out;
}

// Exact decomposition on random instances.
Outcome ac01() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  double worst_rel = 0.0, worst_dense = 0.0;
  int dense_checks = 0;
  for (int k = 0; k < 100; ++k) {
    const std::size_t n = 2 + static_cast<std::size_t>(k % 4);
    const auto mode = k < 50 ? ConjugationMode::kPauli : ConjugationMode::kClifford;
    Rng rng = Rng::stream(101, static_cast<std::uint64_t>(k));
    const auto j = random_two_local(n, 0.3, rng);
    const auto rows = mode == ConjugationMode::kPauli ? pauli_rows(j) : support_sets(j).suppnz;
    const auto a = random_on(rows, 0.7, -1.0, 1.0, rng);
    SamplerConfig sc;
    sc.seed = rng.next();
    sc.ratio = 3.0;
    const auto result = engineer(j, a, mode, sc, false, 1.0);
    const auto rec = reconstruct(result.schedule, j);
    std::map<PauliIndex, double> diff;
    for (const auto& [p, v] : rec.terms()) diff[p] += v;
    for (const auto& [p, v] : a.terms()) diff[p] -= v;
    double err = 0.0;
    for (const auto& [p, v] : diff) err = std::max(err, std::abs(v));
    worst_rel = std::max(worst_rel, err / a.max_abs());
    if (n <= 4) {
      oracle::Mat sum = oracle::Mat::Zero(std::size_t{1} << n, std::size_t{1} << n);
      const oracle::Mat hs = dense_of(j);
      for (const auto& b : result.schedule.blocks) {
        const oracle::Mat u = layer_of(b.layer);
        sum += b.lambda * (u.adjoint() * hs * u);
      }
      worst_dense = std::max(worst_dense, operator_norm_hermitian(sum - dense_of(a)));
      ++dense_checks;
    }
  }
  const double secs = seconds_since(start);
  o.detail << "100 instances, max rel coeff error " << num(worst_rel) << ", max dense op-norm error "
           << num(worst_dense) << " over " << dense_checks << " dense checks, " << num(secs) << " s";
  o.require(worst_rel <= 1e-7, "coefficient error <= 1e-7");
  o.require(worst_dense <= 1e-7, "dense error <= 1e-7");
  o.require(secs < 120, "runtime < 2 min");
  return o;
}

// Objective bounds for exact Pauli LPs.
Outcome ac02() {
  Outcome o;
  int violations = 0, solved = 0;
  for (std::size_t n : {1u, 2u}) {
    const auto rows = nonidentity_strings(n);
    const auto w = build_matrix(ConjugationMode::kPauli, SparseHamiltonian(n), rows, all_pauli_columns(n));
    for (int k = 0; k < 200; ++k) {
      Rng rng = Rng::stream(202 + n, static_cast<std::uint64_t>(k));
      Eigen::VectorXd m(static_cast<Eigen::Index>(rows.size()));
      for (Eigen::Index i = 0; i < m.size(); ++i) m(i) = rng.uniform(-1.0, 1.0);
      const auto sol = solve_min_time({w.entries, m});
      ++solved;
      const double lo = m.cwiseAbs().maxCoeff(), hi = m.cwiseAbs().sum();
      if (sol.status != LpStatus::kOptimal || sol.objective < lo - 1e-7 || sol.objective > hi + 1e-7) ++violations;
    }
  }
  o.detail << solved << " LPs at n in {1,2}, " << violations << " outside [|M|_inf, |M|_1]";
  o.require(violations == 0, "all objectives within bounds");
  return o;
}

// Worst case M = -w_i.
Outcome ac03() {
  Outcome o;
  for (std::size_t n : {1u, 2u}) {
    const auto rows = nonidentity_strings(n);
    const auto w = build_matrix(ConjugationMode::kPauli, SparseHamiltonian(n), rows, all_pauli_columns(n));
    const double expected = static_cast<double>((std::size_t{1} << (2 * n)) - 1);
    double worst = 0.0;
    for (Eigen::Index i = 0; i < w.entries.cols(); ++i) {
      const Eigen::VectorXd m = -w.entries.col(i);
      const auto sol = solve_min_time({w.entries, m});
      worst = std::max(worst, sol.status == LpStatus::kOptimal ? std::abs(sol.objective - expected) : 1e300);
    }
    o.detail << "n=" << n << " expected " << expected << " max deviation " << num(worst) << "; ";
    o.require(worst <= 1e-7, "objective 4^n - 1 at n=" + std::to_string(n));
  }
  return o;
}

// Strong duality and basic support size.
Outcome ac04() {
  Outcome o;
  double worst_gap = 0.0;
  std::size_t worst_excess = 0;
  int solves = 0;
  auto record = [&](const LpSolution& sol, const Eigen::VectorXd& rhs) {
    if (sol.status != LpStatus::kOptimal) return;
    ++solves;
    worst_gap = std::max(worst_gap, sol.relative_duality_gap(rhs));
    const auto d = static_cast<std::size_t>(rhs.size());
    if (sol.support_size() > d) worst_excess = std::max(worst_excess, sol.support_size() - d);
  };
  for (int k = 0; k < 150; ++k) {
    Rng rng = Rng::stream(404, static_cast<std::uint64_t>(k));
    const std::size_t n = 1 + static_cast<std::size_t>(k % 5);
    const auto mode = k % 2 ? ConjugationMode::kClifford : ConjugationMode::kPauli;
    const auto j = random_two_local(n, 0.3, rng);
    const auto rows = mode == ConjugationMode::kPauli ? pauli_rows(j) : support_sets(j).suppnz;
    Eigen::VectorXd rhs(static_cast<Eigen::Index>(rows.size()));
    for (Eigen::Index i = 0; i < rhs.size(); ++i) rhs(i) = rng.uniform(-1.0, 1.0);
    const double ratio = 1.5 + 4.5 * rng.uniform();
    const auto w = draw_relaxation(rows, mode, j, ratio, rng.bit(), rng);
    record(solve_min_time({w.entries, rhs}), rhs);
  }
  for (std::size_t n : {1u, 2u}) {
    const auto rows = nonidentity_strings(n);
    const auto w = build_matrix(ConjugationMode::kPauli, SparseHamiltonian(n), rows, all_pauli_columns(n));
    for (Eigen::Index i = 0; i < w.entries.cols(); ++i) {
      const Eigen::VectorXd m = -w.entries.col(i);
      record(solve_min_time({w.entries, m}), m);
    }
  }
  o.detail << solves << " optimal solves, max relative gap " << num(worst_gap) << ", max support excess "
           << worst_excess;
  o.require(solves > 100, "enough optimal solves");
  o.require(worst_gap <= 1e-7, "gap <= 1e-7");
  o.require(worst_excess == 0, "support <= d");
  return o;
}

// Wendel transition.
Outcome ac05() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  auto check = [&](ConjugationMode mode, const std::vector<std::int64_t>& ns) {
    const auto points = feasibility_scan(mode, ns, {1.5, 2.0, 2.5}, 50, 505, 0.3, 0);
    for (const auto& p : points) {
      o.detail << mode_name(mode) << " n=" << p.n << " r/d=" << p.ratio << " freq " << num(p.frequency())
               << " wendel " << num(p.wendel) << "; ";
      const std::string tag = std::string(mode_name(mode)) + " n=" + std::to_string(p.n) + " ratio " + num(p.ratio);
      if (p.ratio == 1.5) o.require(p.frequency() <= 0.25, tag + " <= 0.25");
      if (p.ratio == 2.0) o.require(std::abs(p.frequency() - p.wendel) <= 0.20, tag + " within 0.20 of Wendel");
      if (p.ratio == 2.5) o.require(p.frequency() >= 0.85, tag + " >= 0.85");
    }
  };
  check(ConjugationMode::kPauli, {4, 6, 8});
  check(ConjugationMode::kClifford, {4, 6});
  const double secs = seconds_since(start);
  o.detail << num(secs) << " s";
  o.require(secs < 600, "runtime < 10 min");
  return o;
}

// Relaxation trade-off.
Outcome ac06() {
  Outcome o;
  for (auto mode : {ConjugationMode::kPauli, ConjugationMode::kClifford}) {
    const auto points = relaxation_scan(mode, 6, {3.0, 4.0, 5.0, 6.0}, 25, 606, 0.3, true, 20, 0);
    std::vector<double> nested, iid;
    bool per_replicate = true;
    for (std::size_t i = 0; i < points.size(); ++i) {
      nested.push_back(mean_std(points[i].nested).mean);
      iid.push_back(mean_std(points[i].iid).mean);
      if (i > 0) {
        for (std::size_t k = 0; k < points[i].nested.size(); ++k) {
          per_replicate &= points[i].nested[k] <= points[i - 1].nested[k] + 1e-7;
        }
      }
    }
    const double drop = (iid.front() - iid.back()) / iid.front();
    o.detail << mode_name(mode) << " nested means";
    for (double v : nested) o.detail << ' ' << num(v);
    o.detail << ", i.i.d. means";
    for (double v : iid) o.detail << ' ' << num(v);
    o.detail << " (drop " << num(100 * drop) << "%); ";
    bool monotone = std::all_of(nested.begin(), nested.end(), [](double v) { return std::isfinite(v); });
    for (std::size_t i = 1; i < nested.size(); ++i) monotone &= nested[i] <= nested[i - 1] + 1e-7;
    o.require(monotone && per_replicate, std::string(mode_name(mode)) + " nested non-increasing");
    o.require(std::isfinite(drop) && drop >= 0.05, std::string(mode_name(mode)) + " i.i.d. drop >= 5%");
  }
  return o;
}

// Lattice benchmark.
Outcome ac07() {
  Outcome o;
  const auto points = lattice_bench({6}, 3.0, 5, 707, false, 20, 1);
  const auto& p = points.front();
  o.detail << "n=" << p.n << " |E|=" << p.edges << " d=" << p.d << " r=" << p.r << ";";
  o.require(p.n == 36 && p.edges == 60 && p.d == 540 && p.r == 1620, "lattice dimensions");
  for (std::size_t k = 0; k < p.status.size(); ++k) {
    o.detail << " rep " << k << ": " << status_name(p.status[k]) << " obj " << num(p.objective[k]) << " (|M|_inf "
             << num(p.target_max[k]) << ") " << num(p.seconds[k]) << " s;";
    o.require(p.status[k] == LpStatus::kOptimal, "replicate optimal");
    o.require(p.seconds[k] < 300, "replicate < 5 min");
    o.require(std::isfinite(p.objective[k]) && p.objective[k] >= p.target_max[k] - 1e-7, "objective >= |M|_inf");
  }
  return o;
}

// Noiseless commuting simulation.
Outcome ac08() {
  Outcome o;
  double worst = 0.0;
  int count = 0;
  for (std::size_t n : {4u, 6u}) {
    SimulationStudy study;
    study.n = n;
    study.target_model = "ising";
    study.mode = ConjugationMode::kPauli;
    study.ratio = 6.0;
    study.seed = 808 + n;
    study.replicates = 10;
    const auto reps = prepare_replicates(study, 0);
    for (const auto& r : reps) o.require(r.schedule.commuting, "Ising schedule commuting");
    for (double v : replicate_infidelities(reps, SimConfig{}, 1.0, 1, 0)) {
      worst = std::max(worst, v);
      ++count;
    }
  }
  o.detail << count << " Ising targets at n in {4,6}, max infidelity " << num(worst);
  o.require(worst <= 1e-9, "infidelity <= 1e-9");
  return o;
}

SimulationStudy surrogate_study(std::size_t n, const std::string& model, ConjugationMode mode, std::uint64_t seed,
                                int replicates) {
  SimulationStudy s;
  s.n = n;
  s.target_model = model;
  s.mode = mode;
  s.ratio = 6.0;
  s.seed = seed;
  s.replicates = replicates;
  s.coupling.alpha = 0.0;
  s.coupling.j0 = 4.0;
  return s;
}

// Finite pulse time and calibration error.
Outcome ac09() {
  Outcome o;
  const auto reps = prepare_replicates(surrogate_study(6, "ising", ConjugationMode::kPauli, 909, 30), 0);
  auto mean_at = [&](double t_p, double eps, double t) {
    SimConfig cfg;
    cfg.t_p = t_p;
    cfg.epsilon = eps;
    return mean_std(replicate_infidelities(reps, cfg, t, 99, 0)).mean;
  };
  std::vector<double> tp_means;
  o.detail << "(a) t=1:";
  for (double tp : {1e-6, 1e-5, 1e-4}) {
    tp_means.push_back(mean_at(tp, 0.0, 1.0));
    o.detail << " t_p=" << num(tp) << " -> " << num(tp_means.back());
  }
  o.require(tp_means[0] < tp_means[1] && tp_means[1] < tp_means[2], "(a) strictly increasing in t_p");
  o.detail << "; (b)";
  for (double tp : {1e-6, 1e-5, 1e-4}) {
    const double a = mean_at(tp, 0.0, 1.0), b = mean_at(tp, 0.0, 0.5);
    const double rel = std::abs(a - b) / a;
    o.detail << " t_p=" << num(tp) << " rel diff " << num(rel);
    o.require(rel <= 0.5, "(b) t-independence at t_p=" + num(tp));
  }
  o.detail << "; (c)";
  for (double eps : {1e-3, 1e-2}) {
    const double a = mean_at(0.0, eps, 1.0), b = mean_at(0.0, eps, 0.5);
    o.detail << " eps=" << num(eps) << " t=1 " << num(a) << " t=0.5 " << num(b);
    o.require(a > b, "(c) calibration grows with t at eps=" + num(eps));
  }
  return o;
}

// Trotter convergence.
Outcome ac10() {
  Outcome o;
  const auto reps = prepare_replicates(surrogate_study(4, "heisenberg", ConjugationMode::kClifford, 1010, 30), 0);
  auto mean_at = [&](int cycles, double t_p) {
    SimConfig cfg;
    cfg.cycles = cycles;
    cfg.t_p = t_p;
    return mean_std(replicate_infidelities(reps, cfg, 1.0, 10, 0)).mean;
  };
  std::map<int, double> ideal;
  o.detail << "no noise:";
  for (int c : {1, 2, 4, 8}) {
    ideal[c] = mean_at(c, 0.0);
    o.detail << " c=" << c << " " << num(ideal[c]);
  }
  o.require(ideal[1] > ideal[2] && ideal[2] > ideal[4] && ideal[4] > ideal[8], "monotone decreasing");
  o.detail << "; ratios";
  for (int c : {1, 2, 4}) {
    const double ratio = ideal[c] / ideal[2 * c];
    o.detail << ' ' << num(ratio);
    o.require(ratio >= 2.5 && ratio <= 6.0, "infid(" + std::to_string(c) + ")/infid(" + std::to_string(2 * c) +
                                                ") in [2.5, 6]");
  }
  const double p8 = mean_at(8, 2.5e-6), p16 = mean_at(16, 2.5e-6);
  o.detail << "; t_p=2.5us: c=8 " << num(p8) << " c=16 " << num(p16);
  o.require(p8 / p16 < 2.0, "plateau between c=8 and c=16");
  return o;
}

// Sign flip under column complement for odd-weight rows.
Outcome ac11() {
  Outcome o;
  for (std::size_t n : {2u, 3u}) {
    std::vector<PauliIndex> rows;
    for (auto& a : nonidentity_strings(n)) {
      if (a.bit_weight() % 2 == 1) rows.push_back(a);
    }
    const auto cols = all_pauli_labels(n);
    std::vector<PauliIndex> complements;
    for (const auto& b : cols) complements.push_back(b.complement());
    const auto w = build_pauli_matrix(rows, cols);
    const auto wc = build_pauli_matrix(rows, complements);
    const double err = (w.entries + wc.entries).cwiseAbs().maxCoeff();
    o.detail << "n=" << n << ": " << rows.size() << " odd rows x " << cols.size() << " columns, max |W_ab + W_ab'| "
             << err << "; ";
    o.require(err == 0.0, "exact sign flip at n=" + std::to_string(n));
  }
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"ac01", ac01}, {"ac02", ac02}, {"ac03", ac03}, {"ac04", ac04}, {"ac05", ac05}, {"ac06", ac06},
      {"ac07", ac07}, {"ac08", ac08}, {"ac09", ac09}, {"ac10", ac10}, {"ac11", ac11},
  };
  std::vector<std::string> wanted(argv + 1, argv + argc);
  bool all_pass = true;
  int ran = 0;
  for (const auto& [name, fn] : criteria) {
    if (!wanted.empty() && std::find(wanted.begin(), wanted.end(), name) == wanted.end()) continue;
    ++ran;
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    std::string upper = name;
    std::transform(upper.begin(), upper.end(), upper.begin(), ::toupper);
    std::printf("%s %s %s\n", upper.c_str(), o.pass ? "PASS" : "FAIL", o.detail.str().c_str());
    std::fflush(stdout);
    all_pass &= o.pass;
  }
  if (ran == 0) {
    std::fprintf(stderr, "no criterion matches the filter\n");
    return 2;
  }
  return all_pass ? 0 : 1;
}
