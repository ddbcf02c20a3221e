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

#include "hamshape/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include "hamshape/rng.hpp"

namespace hamshape {

namespace {

constexpr Complex kI{0.0, 1.0};

// exp(-i tau H) from a cached eigendecomposition.
class FreeEvolution {
 public:
  explicit FreeEvolution(const DenseMatrix& h) : es_(h) {
    if (es_.info() != Eigen::Success) throw std::runtime_error("Hermitian eigendecomposition failed");
  }

  DenseMatrix operator()(double tau) const {
    const Eigen::VectorXd& w = es_.eigenvalues();
    Eigen::VectorXcd phases(w.size());
    for (Eigen::Index k = 0; k < w.size(); ++k) phases(k) = std::exp(-kI * (tau * w(k)));
    const DenseMatrix& v = es_.eigenvectors();
    return v * phases.asDiagonal() * v.adjoint();
  }

 private:
  Eigen::SelfAdjointEigenSolver<DenseMatrix> es_;
};

struct LayerFactors {
  DenseMatrix forward;  // exp(-i(S1 + t_p/2 H)) exp(-i(S2 + t_p/2 H))
  DenseMatrix adjoint;  // exp(-i(-S2 + t_p/2 H)) exp(-i(-S1 + t_p/2 H))
};

class LayerCache {
 public:
  LayerCache(const DenseMatrix& h, double t_p, std::size_t limit) : h_(h), t_p_(t_p), limit_(limit) {}

  const LayerFactors& get(const CliffordLabel& layer) {
    auto it = cache_.find(layer);
    if (it != cache_.end()) return it->second;
    LayerFactors f;
    if (t_p_ == 0.0) {
      f.forward = pulse_unitary(layer, true, false, limit_) * pulse_unitary(layer, false, false, limit_);
      f.adjoint = pulse_unitary(layer, false, true, limit_) * pulse_unitary(layer, true, true, limit_);
    } else {
      const PulseGenerators g = pulse_generators(layer, limit_);
      const DenseMatrix drift = (0.5 * t_p_) * h_;
      f.forward = expm_hermitian(g.first + drift) * expm_hermitian(g.second + drift);
      f.adjoint = expm_hermitian(-g.second + drift) * expm_hermitian(-g.first + drift);
    }
    return cache_.emplace(layer, std::move(f)).first->second;
  }

 private:
  const DenseMatrix& h_;
  double t_p_;
  std::size_t limit_;
  std::map<CliffordLabel, LayerFactors> cache_;
};

}  // namespace

double SimConfig::pulse_time_from_rabi(double omega) {
  if (!(omega > 0)) throw std::invalid_argument("Rabi frequency must be positive");
  return std::numbers::pi / omega;
}

DenseMatrix evolution_block(const PulseGenerators& pulses, double lambda, double t, double t_p,
                            const DenseMatrix& h_s) {
  const DenseMatrix drift = (0.5 * t_p) * h_s;
  return expm_hermitian(-pulses.second + drift) * expm_hermitian(-pulses.first + drift) *
         expm_hermitian(h_s, t * lambda) * expm_hermitian(pulses.first + drift) *
         expm_hermitian(pulses.second + drift);
}

DenseMatrix simulate_schedule(const PulseSchedule& s, const SimConfig& cfg,
                              const SparseHamiltonian& h_s) {
  if (cfg.cycles < 1) throw std::invalid_argument("Trotter cycle count must be at least 1");
  if (cfg.t_p < 0) throw std::invalid_argument("pulse time must be non-negative");
  if (cfg.epsilon < 0 || cfg.epsilon >= 1) throw std::invalid_argument("epsilon must lie in [0, 1)");
  if (h_s.num_qubits() != s.n) throw std::invalid_argument("schedule and system differ in qubit count");
  require_dense(s.n, cfg.dense_limit);

  const SparseHamiltonian actual = cfg.epsilon > 0 ? perturb_couplings(h_s, cfg.epsilon, cfg.seed) : h_s;
  const DenseMatrix h = pauli_assemble(actual, cfg.dense_limit);
  const FreeEvolution free_evolution(h);
  LayerCache layers(h, cfg.t_p, cfg.dense_limit);

  const PulseSchedule expanded = s.commuting ? s : trotter_expand(s, cfg.cycles);
  const std::size_t dim = std::size_t{1} << s.n;
  DenseMatrix u = DenseMatrix::Identity(dim, dim);

  if (cfg.merge_pauli_pulses && expanded.all_pauli() && !expanded.blocks.empty()) {
    const PulseSchedule merged = merge_pauli_layers(expanded);
    const auto& pulses = merged.pulses;
    const std::size_t k = expanded.blocks.size();
    for (std::size_t i = 0; i <= k; ++i) {
      if (!pulses[i].is_identity()) {
        u = (i == k ? layers.get(pulses[i]).adjoint : layers.get(pulses[i]).forward) * u;
      }
      if (i < k) u = free_evolution(s.t * expanded.blocks[i].lambda) * u;
    }
    return u;
  }

  for (const auto& b : expanded.blocks) {
    const LayerFactors& f = layers.get(b.layer);
    u = f.adjoint * free_evolution(s.t * b.lambda) * f.forward * u;
  }
  return u;
}

DenseMatrix target_unitary(const SparseHamiltonian& h, double t, std::size_t limit) {
  return expm_hermitian(pauli_assemble(h, limit), t);
}

double avg_gate_infidelity(const DenseMatrix& u_sim, const DenseMatrix& u_target) {
  if (u_sim.rows() != u_target.rows() || u_sim.cols() != u_target.cols() || u_sim.rows() != u_sim.cols()) {
    throw std::invalid_argument("infidelity needs square matrices of equal size");
  }
  const double d = static_cast<double>(u_sim.rows());
  const Complex tr = (u_target.adjoint() * u_sim).trace();
  const double fid = (std::norm(tr) / d + 1.0) / (d + 1.0);
  return std::clamp(1.0 - fid, 0.0, 1.0);
}

SparseHamiltonian perturb_couplings(const SparseHamiltonian& j, double epsilon, std::uint64_t seed) {
  if (epsilon < 0 || epsilon >= 1) throw std::invalid_argument("epsilon must lie in [0, 1)");
  SparseHamiltonian out(j.num_qubits());
  Rng rng(seed);
  for (const auto& [a, coeff] : j.terms()) out.set(a, coeff * rng.uniform(1.0 - epsilon, 1.0 + epsilon));
  return out;
}

SparseHamiltonian ion_trap_couplings(const CouplingModel& m) {
  if (m.n < 2) throw std::invalid_argument("an ion chain needs at least two qubits");
  SparseHamiltonian h(m.n);
  const auto zz = [&](std::size_t i, std::size_t j) {
    PauliIndex a(m.n);
    a.set(i, LocalPauli::Z);
    a.set(j, LocalPauli::Z);
    return a;
  };
  if (m.matrix) {
    const auto& mat = *m.matrix;
    if (mat.rows() != static_cast<Eigen::Index>(m.n) || mat.cols() != mat.rows()) {
      throw std::invalid_argument("coupling matrix must be n x n");
    }
    if (!mat.allFinite()) throw std::invalid_argument("coupling matrix must be finite");
    if ((mat - mat.transpose()).cwiseAbs().maxCoeff() > 1e-12 || mat.diagonal().cwiseAbs().maxCoeff() > 0) {
      throw std::invalid_argument("coupling matrix must be symmetric with zero diagonal");
    }
    for (std::size_t i = 0; i < m.n; ++i) {
      for (std::size_t k = i + 1; k < m.n; ++k) h.set(zz(i, k), -mat(i, k));
    }
    return h;
  }
  const double ref = 40.0 / (2.0 * std::numbers::pi * 400e3);
  const double scale = m.j0 * std::pow((m.b1 / m.omega) / ref, 2);
  for (std::size_t i = 0; i < m.n; ++i) {
    for (std::size_t k = i + 1; k < m.n; ++k) {
      h.set(zz(i, k), -scale / std::pow(static_cast<double>(k - i), m.alpha));
    }
  }
  return h;
}

}  // namespace hamshape
