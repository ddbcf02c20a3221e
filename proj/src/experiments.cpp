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

#include "hamshape/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <fstream>
#include <limits>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "hamshape/models.hpp"
#include "hamshape/rng.hpp"

namespace hamshape {

void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& fn) {
  std::size_t workers = threads > 0 ? static_cast<std::size_t>(threads)
                                    : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      while (!failed) {
        const std::size_t i = next++;
        if (i >= count) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
          failed = true;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

MeanStd mean_std(const std::vector<double>& values) {
  MeanStd out;
  if (values.empty()) return {std::numeric_limits<double>::quiet_NaN(), 0.0};
  for (double v : values) out.mean += v;
  out.mean /= static_cast<double>(values.size());
  if (values.size() > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - out.mean) * (v - out.mean);
    out.std = std::sqrt(ss / static_cast<double>(values.size() - 1));
  }
  return out;
}

namespace {

std::vector<CliffordLabel> draw_labels(ConjugationMode mode, std::size_t n, std::size_t count, Rng& rng) {
  if (mode == ConjugationMode::kClifford) return draw_clifford_labels(n, count, rng);
  std::vector<CliffordLabel> out;
  out.reserve(count);
  for (auto& b : draw_pauli_labels(n, count, rng)) out.push_back(CliffordLabel::pauli(b));
  return out;
}

Eigen::VectorXd uniform_vector(std::size_t d, Rng& rng) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(d));
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = rng.uniform(-1.0, 1.0);
  return v;
}

std::vector<double> finite_only(const std::vector<double>& values) {
  std::vector<double> out;
  for (double v : values) {
    if (std::isfinite(v)) out.push_back(v);
  }
  return out;
}

std::string join_strings(const std::vector<PauliIndex>& rows) {
  std::string out;
  for (const auto& a : rows) out += (out.empty() ? "" : " ") + a.to_string();
  return out;
}

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

}  // namespace

EngineerResult engineer(const SparseHamiltonian& j, const SparseHamiltonian& a, ConjugationMode mode,
                        const SamplerConfig& sampler, bool all_columns, double t) {
  if (j.num_qubits() != a.num_qubits()) throw std::invalid_argument("system and target qubit counts differ");
  EngineerResult out;
  out.target = mode == ConjugationMode::kPauli ? pauli_target(a, j, pauli_rows(j)) : clifford_target(a, j);
  if (all_columns) {
    std::vector<CliffordLabel> cols;
    if (mode == ConjugationMode::kPauli) {
      for (auto& b : all_pauli_labels(j.num_qubits())) cols.push_back(CliffordLabel::pauli(b));
    } else {
      cols = all_clifford_labels(j.num_qubits());
    }
    out.matrix = build_matrix(mode, j, out.target.rows, cols);
    out.attempts = 1;
  } else {
    auto sampled = sample_relaxation(out.target.rows, mode, j, sampler);
    out.matrix = std::move(sampled.matrix);
    out.attempts = sampled.attempts;
  }
  out.solution = solve_min_time({out.matrix.entries, out.target.values});
  if (out.solution.status != LpStatus::kOptimal) {
    throw LpInternalError("conjugation matrix admits no decomposition of the target");
  }
  out.schedule = build_schedule(out.solution, out.matrix.cols, t, j);
  return out;
}

std::vector<FeasibilityPoint> feasibility_scan(ConjugationMode mode, const std::vector<std::int64_t>& ns,
                                               const std::vector<double>& ratios, int replicates,
                                               std::uint64_t seed, double extra, int threads) {
  std::vector<FeasibilityPoint> points;
  for (auto n64 : ns) {
    const auto n = static_cast<std::size_t>(n64);
    const std::size_t d = two_local_strings(n).size();
    for (double ratio : ratios) {
      FeasibilityPoint p;
      p.n = n;
      p.d = d;
      p.ratio = ratio;
      p.r = sampled_column_count(d, ratio);
      p.replicates = replicates;
      p.wendel = wendel_probability(static_cast<std::int64_t>(p.r), static_cast<std::int64_t>(d));
      points.push_back(p);
    }
  }
  const auto reps = static_cast<std::size_t>(replicates);
  std::vector<char> success(points.size() * reps, 0);
  const std::vector<PauliIndex> empty_rows;
  parallel_for(success.size(), threads, [&](std::size_t task) {
    const auto& p = points[task / reps];
    Rng rng = Rng::stream(seed, task);
    SparseHamiltonian j(p.n);
    std::vector<PauliIndex> rows;
    if (mode == ConjugationMode::kClifford) {
      j = random_two_local(p.n, extra, rng);
      rows = support_sets(j).suppnz;
    } else {
      rows = two_local_strings(p.n);
    }
    const auto w = build_matrix(mode, j, rows, draw_labels(mode, p.n, p.r, rng));
    success[task] = check_feasible_matrix(w).feasible ? 1 : 0;
  });
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t k = 0; k < reps; ++k) points[i].successes += success[i * reps + k];
  }
  return points;
}

CsvTable feasibility_table(ConjugationMode mode, const std::vector<FeasibilityPoint>& points) {
  CsvTable t({"mode", "n", "d", "ratio", "r", "replicates", "successes", "frequency", "wendel", "difference"});
  for (const auto& p : points) {
    t.add_row({mode_name(mode), std::to_string(p.n), std::to_string(p.d), format_number(p.ratio),
               std::to_string(p.r), std::to_string(p.replicates), std::to_string(p.successes),
               format_number(p.frequency()), format_number(p.wendel), format_number(p.frequency() - p.wendel)});
  }
  return t;
}

std::vector<RelaxationPoint> relaxation_scan(ConjugationMode mode, std::size_t n,
                                             const std::vector<double>& ratios, int replicates,
                                             std::uint64_t seed, double extra, bool identity_column,
                                             int max_attempts, int threads) {
  std::vector<double> sorted(ratios);
  std::sort(sorted.begin(), sorted.end());
  const std::size_t d = two_local_strings(n).size();
  std::vector<RelaxationPoint> points(sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    points[i].n = n;
    points[i].d = d;
    points[i].ratio = sorted[i];
    points[i].r = sampled_column_count(d, sorted[i]) + (identity_column ? 1 : 0);
    points[i].nested.assign(static_cast<std::size_t>(replicates), kNaN);
    points[i].iid.assign(static_cast<std::size_t>(replicates), kNaN);
  }
  parallel_for(static_cast<std::size_t>(replicates), threads, [&](std::size_t k) {
    Rng rng = Rng::stream(seed, k);
    SparseHamiltonian j(n);
    std::vector<PauliIndex> rows;
    if (mode == ConjugationMode::kClifford) {
      j = random_two_local(n, extra, rng);
      rows = support_sets(j).suppnz;
    } else {
      rows = two_local_strings(n);
    }
    const Eigen::VectorXd rhs = uniform_vector(rows.size(), rng);
    const std::uint64_t instance_seed = rng.next();

    auto prefix = [&](const std::vector<CliffordLabel>& all, std::size_t count) {
      std::vector<CliffordLabel> cols;
      if (identity_column) cols.push_back(CliffordLabel::identity(n));
      cols.insert(cols.end(), all.begin(), all.begin() + static_cast<std::ptrdiff_t>(count));
      return build_matrix(mode, j, rows, cols);
    };

    const std::size_t largest = sampled_column_count(d, sorted.back());
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
      Rng draw = Rng::stream(instance_seed, static_cast<std::uint64_t>(attempt));
      const auto all = draw_labels(mode, n, largest, draw);
      const auto first = solve_min_time({prefix(all, sampled_column_count(d, sorted.front())).entries, rhs});
      if (first.status != LpStatus::kOptimal) continue;
      points[0].nested[k] = first.objective;
      for (std::size_t i = 1; i < sorted.size(); ++i) {
        const auto sol = solve_min_time({prefix(all, sampled_column_count(d, sorted[i])).entries, rhs});
        points[i].nested[k] = sol.status == LpStatus::kOptimal ? sol.objective : kNaN;
      }
      break;
    }
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      for (int attempt = 0; attempt < max_attempts; ++attempt) {
        Rng draw = Rng::stream(instance_seed, (i + 1) * 1000003 + static_cast<std::uint64_t>(attempt));
        const auto all = draw_labels(mode, n, sampled_column_count(d, sorted[i]), draw);
        const auto sol = solve_min_time({prefix(all, all.size()).entries, rhs});
        if (sol.status != LpStatus::kOptimal) continue;
        points[i].iid[k] = sol.objective;
        break;
      }
    }
  });
  return points;
}

CsvTable relaxation_table(ConjugationMode mode, const std::vector<RelaxationPoint>& points) {
  CsvTable t({"mode", "n", "d", "ratio", "r", "replicates", "nested_mean", "nested_std", "iid_mean", "iid_std",
              "nested_failures", "iid_failures"});
  for (const auto& p : points) {
    const auto nested = finite_only(p.nested), iid = finite_only(p.iid);
    const auto ns = mean_std(nested), is = mean_std(iid);
    t.add_row({mode_name(mode), std::to_string(p.n), std::to_string(p.d), format_number(p.ratio),
               std::to_string(p.r), std::to_string(p.nested.size()), format_number(ns.mean),
               format_number(ns.std), format_number(is.mean), format_number(is.std),
               std::to_string(p.nested.size() - nested.size()), std::to_string(p.iid.size() - iid.size())});
  }
  return t;
}

std::vector<LatticePoint> lattice_bench(const std::vector<std::int64_t>& sides, double ratio, int replicates,
                                        std::uint64_t seed, bool identity_column, int max_attempts,
                                        int threads) {
  std::vector<LatticePoint> points;
  std::vector<SparseHamiltonian> systems;
  for (auto side64 : sides) {
    const auto side = static_cast<std::size_t>(side64);
    LatticePoint p;
    p.side = side;
    p.n = side * side;
    p.edges = lattice_edges(side).size();
    systems.push_back(lattice_system(side));
    p.d = systems.back().size();
    p.r = sampled_column_count(p.d, ratio) + (identity_column ? 1 : 0);
    const auto reps = static_cast<std::size_t>(replicates);
    p.status.assign(reps, LpStatus::kInfeasible);
    p.objective.assign(reps, kNaN);
    p.target_max.assign(reps, kNaN);
    p.seconds.assign(reps, kNaN);
    p.attempts.assign(reps, 0);
    points.push_back(std::move(p));
  }
  const auto reps = static_cast<std::size_t>(replicates);
  parallel_for(points.size() * reps, threads, [&](std::size_t task) {
    auto& p = points[task / reps];
    const std::size_t k = task % reps;
    const auto& j = systems[task / reps];
    Rng rng = Rng::stream(seed, task);
    const auto rows = pauli_rows(j);
    const Eigen::VectorXd rhs = uniform_vector(rows.size(), rng);
    p.target_max[k] = rhs.cwiseAbs().maxCoeff();
    const std::uint64_t draw_seed = rng.next();
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
      Rng draw = Rng::stream(draw_seed, static_cast<std::uint64_t>(attempt));
      const auto w = draw_relaxation(rows, ConjugationMode::kPauli, j, ratio, identity_column, draw);
      const auto start = std::chrono::steady_clock::now();
      const auto sol = solve_min_time({w.entries, rhs});
      const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      p.attempts[k] = attempt + 1;
      p.status[k] = sol.status;
      p.seconds[k] = seconds;
      if (sol.status == LpStatus::kOptimal) {
        p.objective[k] = sol.objective;
        break;
      }
    }
  });
  return points;
}

CsvTable lattice_table(const std::vector<LatticePoint>& points) {
  CsvTable t({"side", "n", "edges", "d", "r", "replicates", "optimal", "objective_mean", "objective_std",
              "target_max_mean", "attempts_mean"});
  for (const auto& p : points) {
    const auto obj = mean_std(finite_only(p.objective));
    const auto tm = mean_std(p.target_max);
    std::vector<double> attempts(p.attempts.begin(), p.attempts.end());
    const auto optimal = std::count(p.status.begin(), p.status.end(), LpStatus::kOptimal);
    t.add_row({std::to_string(p.side), std::to_string(p.n), std::to_string(p.edges), std::to_string(p.d),
               std::to_string(p.r), std::to_string(p.status.size()), std::to_string(optimal),
               format_number(obj.mean), format_number(obj.std), format_number(tm.mean),
               format_number(mean_std(attempts).mean)});
  }
  return t;
}

CsvTable lattice_timing_table(const std::vector<LatticePoint>& points) {
  CsvTable t({"side", "n", "d", "r", "seconds_mean", "seconds_std", "seconds_max"});
  for (const auto& p : points) {
    const auto s = mean_std(p.seconds);
    t.add_row({std::to_string(p.side), std::to_string(p.n), std::to_string(p.d), std::to_string(p.r),
               format_number(s.mean), format_number(s.std),
               format_number(*std::max_element(p.seconds.begin(), p.seconds.end()))});
  }
  return t;
}

std::vector<PreparedReplicate> prepare_replicates(const SimulationStudy& study, int threads) {
  CouplingModel coupling = study.coupling;
  coupling.n = study.n;
  const SparseHamiltonian system = ion_trap_couplings(coupling);
  std::vector<PreparedReplicate> out(static_cast<std::size_t>(study.replicates));
  parallel_for(out.size(), threads, [&](std::size_t k) {
    Rng rng = Rng::stream(study.seed, k);
    SparseHamiltonian target;
    if (study.target_model == "ising") {
      target = random_ising(study.n, rng);
    } else if (study.target_model == "heisenberg") {
      target = random_heisenberg(study.n, rng);
    } else {
      throw std::invalid_argument("unknown target model " + study.target_model);
    }
    SamplerConfig sc;
    sc.ratio = study.ratio;
    sc.max_attempts = study.max_attempts;
    sc.append_identity = study.identity_column;
    sc.seed = rng.next();
    auto result = engineer(system, target, study.mode, sc, false, 1.0);
    out[k] = {system, std::move(target), std::move(result.schedule)};
  });
  return out;
}

std::vector<double> replicate_infidelities(const std::vector<PreparedReplicate>& reps, const SimConfig& cfg,
                                           double t, std::uint64_t seed, int threads) {
  std::vector<double> out(reps.size(), kNaN);
  parallel_for(reps.size(), threads, [&](std::size_t k) {
    PulseSchedule s = reps[k].schedule;
    s.t = t;
    SimConfig local = cfg;
    local.seed = Rng::stream(seed ^ 0x5bd1e995u, k).next();
    const auto u = simulate_schedule(s, local, reps[k].system);
    out[k] = avg_gate_infidelity(u, target_unitary(reps[k].target, t, cfg.dense_limit));
  });
  return out;
}

// ---------------------------------------------------------------- front end

int run_engineer(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto j = load_hamiltonian(cfg.system);
  const auto a = load_hamiltonian(cfg.target);
  if (j.num_qubits() != a.num_qubits()) throw ConfigError("system and target act on different qubit counts");
  SamplerConfig sc;
  sc.ratio = cfg.ratios.front();
  sc.max_attempts = cfg.max_attempts;
  sc.seed = cfg.seed;
  sc.append_identity = cfg.identity_column;
  EngineerResult result;
  try {
    result = engineer(j, a, cfg.mode, sc, cfg.all_columns, cfg.t.front());
  } catch (const UnreachableTarget& e) {
    err << "error: " << e.what() << "\noffending Pauli strings: " << join_strings(e.offending()) << "\n";
    return kExitUnreachable;
  } catch (const SamplerExhausted& e) {
    err << "error: " << e.what() << "\n";
    return kExitSamplerExhausted;
  }
  PulseSchedule s = result.schedule;
  if (cfg.mode == ConjugationMode::kPauli && s.all_pauli()) s = merge_pauli_layers(s);
  std::filesystem::create_directories(cfg.out);
  const auto path = cfg.out / "schedule.json";
  save_schedule(s, path);
  const auto& st = result.solution.stats;
  out << "mode " << mode_name(cfg.mode) << "\n"
      << "objective " << format_number(result.solution.objective) << "\n"
      << "d " << result.matrix.num_rows() << "\n"
      << "r " << result.matrix.num_cols() << "\n"
      << "blocks " << s.blocks.size() << "\n"
      << "commuting " << (s.commuting ? "true" : "false") << "\n"
      << "sampler_attempts " << result.attempts << "\n"
      << "phase1_iterations " << st.phase1_iterations << "\n"
      << "phase2_iterations " << st.phase2_iterations << "\n"
      << "refactorizations " << st.refactorizations << "\n"
      << "solver_seconds " << format_number(st.seconds) << "\n"
      << "schedule " << path.string() << "\n";
  return kExitOk;
}

int run_feasibility_scan(const ExperimentConfig& cfg, std::ostream& out, std::ostream&) {
  const auto points = feasibility_scan(cfg.mode, cfg.n, cfg.ratios, cfg.replicates, cfg.seed, cfg.extra, cfg.threads);
  std::filesystem::create_directories(cfg.out);
  feasibility_table(cfg.mode, points).write(cfg.out / "feasibility_scan.csv");
  LineChart chart;
  chart.title = std::string("Feasible relaxations, ") + mode_name(cfg.mode) + " mode";
  chart.x_label = "r / d";
  chart.y_label = "success frequency";
  for (auto n : cfg.n) {
    Series freq, wendel;
    freq.name = "n = " + std::to_string(n);
    wendel.name = "Wendel, n = " + std::to_string(n);
    wendel.dashed = true;
    for (const auto& p : points) {
      if (p.n != static_cast<std::size_t>(n)) continue;
      freq.x.push_back(p.ratio);
      freq.y.push_back(p.frequency());
      wendel.x.push_back(p.ratio);
      wendel.y.push_back(p.wendel);
    }
    chart.series.push_back(freq);
    chart.series.push_back(wendel);
  }
  chart.write(cfg.out / "feasibility_scan.svg");
  out << "wrote " << (cfg.out / "feasibility_scan.csv").string() << "\n";
  return kExitOk;
}

int run_relaxation_scan(const ExperimentConfig& cfg, std::ostream& out, std::ostream&) {
  std::vector<RelaxationPoint> all;
  LineChart chart;
  chart.title = std::string("Relaxed objective, ") + mode_name(cfg.mode) + " mode";
  chart.x_label = "r / d";
  chart.y_label = "mean objective";
  for (auto n : cfg.n) {
    auto points = relaxation_scan(cfg.mode, static_cast<std::size_t>(n), cfg.ratios, cfg.replicates, cfg.seed,
                                  cfg.extra, cfg.identity_column, cfg.max_attempts, cfg.threads);
    Series nested, iid;
    nested.name = "nested, n = " + std::to_string(n);
    iid.name = "i.i.d., n = " + std::to_string(n);
    iid.dashed = true;
    for (const auto& p : points) {
      const auto a = mean_std(finite_only(p.nested)), b = mean_std(finite_only(p.iid));
      nested.x.push_back(p.ratio);
      nested.y.push_back(a.mean);
      nested.lower.push_back(a.mean - a.std);
      nested.upper.push_back(a.mean + a.std);
      iid.x.push_back(p.ratio);
      iid.y.push_back(b.mean);
    }
    chart.series.push_back(nested);
    chart.series.push_back(iid);
    all.insert(all.end(), points.begin(), points.end());
  }
  std::filesystem::create_directories(cfg.out);
  relaxation_table(cfg.mode, all).write(cfg.out / "relaxation_scan.csv");
  chart.write(cfg.out / "relaxation_scan.svg");
  out << "wrote " << (cfg.out / "relaxation_scan.csv").string() << "\n";
  return kExitOk;
}

int run_lattice_bench(const ExperimentConfig& cfg, std::ostream& out, std::ostream&) {
  const auto points = lattice_bench(cfg.sides, cfg.ratios.front(), cfg.replicates, cfg.seed, cfg.identity_column,
                                    cfg.max_attempts, cfg.threads);
  std::filesystem::create_directories(cfg.out);
  lattice_table(points).write(cfg.out / "lattice_bench.csv");
  lattice_timing_table(points).write(cfg.out / "lattice_timing.csv");
  LineChart chart;
  chart.title = "Square lattice benchmark";
  chart.x_label = "d";
  chart.y_label = "objective";
  Series obj;
  obj.name = "mean objective";
  for (const auto& p : points) {
    const auto s = mean_std(finite_only(p.objective));
    obj.x.push_back(static_cast<double>(p.d));
    obj.y.push_back(s.mean);
    obj.lower.push_back(s.mean - s.std);
    obj.upper.push_back(s.mean + s.std);
  }
  chart.series.push_back(obj);
  chart.write(cfg.out / "lattice_bench.svg");
  out << "wrote " << (cfg.out / "lattice_bench.csv").string() << "\n";
  return kExitOk;
}

namespace {

Eigen::MatrixXd load_matrix(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read " + path.string());
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    std::stringstream ss(line);
    std::vector<double> row;
    double v;
    while (ss >> v) row.push_back(v);
    if (!ss.eof()) throw ConfigError("malformed number in " + path.string());
    if (!row.empty()) rows.push_back(std::move(row));
  }
  Eigen::MatrixXd m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw ConfigError("coupling matrix must be square");
    for (std::size_t k = 0; k < rows.size(); ++k) m(i, k) = rows[i][k];
  }
  return m;
}

SimConfig point_config(const ExperimentConfig& cfg, double value) {
  SimConfig sc;
  sc.t_p = cfg.t_p;
  sc.epsilon = cfg.epsilon;
  sc.cycles = cfg.cycles;
  sc.dense_limit = cfg.dense_limit;
  switch (cfg.sweep) {
    case SweepKind::kPulseTime: sc.t_p = value; break;
    case SweepKind::kEpsilon: sc.epsilon = value; break;
    case SweepKind::kCycles: sc.cycles = static_cast<int>(value); break;
    case SweepKind::kTime: break;
  }
  return sc;
}

}  // namespace

int run_simulate(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err) {
  CouplingModel coupling;
  coupling.alpha = cfg.coupling_alpha;
  coupling.j0 = cfg.coupling_j0;
  coupling.b1 = cfg.coupling_b1;
  coupling.omega = cfg.coupling_omega;
  if (!cfg.coupling_matrix.empty()) coupling.matrix = load_matrix(cfg.coupling_matrix);

  struct Study {
    std::size_t n;
    std::vector<PreparedReplicate> reps;
  };
  std::vector<Study> studies;
  if (cfg.target_model == "file") {
    const auto target = load_hamiltonian(cfg.target);
    const std::size_t n = target.num_qubits();
    if (n > cfg.dense_limit) {
      err << "error: " << n << " qubits exceed the dense limit " << cfg.dense_limit << "\n";
      return kExitDenseLimit;
    }
    coupling.n = n;
    const auto system = cfg.system.empty() ? ion_trap_couplings(coupling) : load_hamiltonian(cfg.system);
    PulseSchedule schedule;
    if (!cfg.schedule.empty()) {
      schedule = load_schedule(cfg.schedule);
    } else {
      SamplerConfig sc;
      sc.ratio = cfg.ratios.front();
      sc.max_attempts = cfg.max_attempts;
      sc.seed = cfg.seed;
      sc.append_identity = cfg.identity_column;
      try {
        schedule = engineer(system, target, cfg.mode, sc, false, 1.0).schedule;
      } catch (const UnreachableTarget& e) {
        err << "error: " << e.what() << "\noffending Pauli strings: " << join_strings(e.offending()) << "\n";
        return kExitUnreachable;
      }
    }
    if (schedule.n != n || system.num_qubits() != n) throw ConfigError("schedule, system and target sizes differ");
    studies.push_back({n, std::vector<PreparedReplicate>(static_cast<std::size_t>(cfg.replicates),
                                                         PreparedReplicate{system, target, schedule})});
  } else {
    for (auto n64 : cfg.n) {
      const auto n = static_cast<std::size_t>(n64);
      if (n > cfg.dense_limit) {
        err << "error: " << n << " qubits exceed the dense limit " << cfg.dense_limit << "\n";
        return kExitDenseLimit;
      }
      if (n < 2) throw ConfigError("simulated ion chains need at least two qubits");
      if (coupling.matrix && static_cast<std::size_t>(coupling.matrix->rows()) != n) {
        throw ConfigError("coupling matrix size does not match n");
      }
      SimulationStudy study;
      study.n = n;
      study.target_model = cfg.target_model;
      study.mode = cfg.mode;
      study.ratio = cfg.ratios.front();
      study.identity_column = cfg.identity_column;
      study.max_attempts = cfg.max_attempts;
      study.coupling = coupling;
      study.seed = cfg.seed;
      study.replicates = cfg.replicates;
      studies.push_back({n, prepare_replicates(study, cfg.threads)});
    }
  }

  CsvTable table({"n", "sweep", "value", "t", "replicates", "mean_infidelity", "std_infidelity"});
  LineChart chart;
  chart.title = std::string("Average gate infidelity vs ") + sweep_name(cfg.sweep);
  chart.x_label = sweep_name(cfg.sweep);
  chart.y_label = "infidelity";
  chart.log_y = true;
  chart.log_x = std::all_of(cfg.values.begin(), cfg.values.end(), [](double v) { return v > 0; }) &&
                cfg.values.size() > 1;
  for (const auto& study : studies) {
    const std::vector<double> times = cfg.sweep == SweepKind::kTime ? std::vector<double>{0.0} : cfg.t;
    for (double t_fixed : times) {
      Series series;
      series.name = "n = " + std::to_string(study.n) +
                    (cfg.sweep == SweepKind::kTime ? "" : ", t = " + format_number(t_fixed));
      for (double value : cfg.values) {
        const double t = cfg.sweep == SweepKind::kTime ? value : t_fixed;
        const auto values = replicate_infidelities(study.reps, point_config(cfg, value), t, cfg.seed, cfg.threads);
        const auto ms = mean_std(values);
        table.add_row({std::to_string(study.n), sweep_name(cfg.sweep), format_number(value), format_number(t),
                       std::to_string(values.size()), format_number(ms.mean), format_number(ms.std)});
        series.x.push_back(value);
        series.y.push_back(ms.mean);
        series.lower.push_back(ms.mean - ms.std);
        series.upper.push_back(ms.mean + ms.std);
      }
      chart.series.push_back(std::move(series));
    }
  }
  std::filesystem::create_directories(cfg.out);
  table.write(cfg.out / "simulate.csv");
  chart.write(cfg.out / "simulate.svg");
  out << "wrote " << (cfg.out / "simulate.csv").string() << "\n";
  return kExitOk;
}

int run_experiment(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    switch (cfg.kind) {
      case ExperimentKind::kEngineer: return run_engineer(cfg, out, err);
      case ExperimentKind::kFeasibilityScan: return run_feasibility_scan(cfg, out, err);
      case ExperimentKind::kRelaxationScan: return run_relaxation_scan(cfg, out, err);
      case ExperimentKind::kLatticeBench: return run_lattice_bench(cfg, out, err);
      case ExperimentKind::kSimulate: return run_simulate(cfg, out, err);
    }
  } catch (const UnreachableTarget& e) {
    err << "error: " << e.what() << "\noffending Pauli strings: " << join_strings(e.offending()) << "\n";
    return kExitUnreachable;
  } catch (const SamplerExhausted& e) {
    err << "error: " << e.what() << "\n";
    return kExitSamplerExhausted;
  } catch (const DenseLimitError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDenseLimit;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const HamiltonianFormatError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const ScheduleFormatError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitConfigError;
  }
  return kExitConfigError;
}

}  // namespace hamshape
