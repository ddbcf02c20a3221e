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

#include "hamshape/engineering.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace hamshape {

const char* mode_name(ConjugationMode mode) {
  return mode == ConjugationMode::kPauli ? "pauli" : "clifford";
}

ConjugationMode parse_mode(const std::string& text) {
  if (text == "pauli") return ConjugationMode::kPauli;
  if (text == "clifford") return ConjugationMode::kClifford;
  throw std::invalid_argument("unknown conjugation mode '" + text + "'");
}

std::string ConjugationMatrix::to_table() const {
  std::ostringstream os;
  os << "row";
  for (const auto& c : cols) os << '\t' << c.to_string();
  os << '\n';
  for (std::size_t i = 0; i < rows.size(); ++i) {
    os << rows[i].to_string();
    for (std::size_t j = 0; j < cols.size(); ++j) os << '\t' << entries(i, j);
    os << '\n';
  }
  return os.str();
}

namespace {

void check_rows(const std::vector<PauliIndex>& rows, std::size_t n) {
  for (const auto& a : rows) {
    if (a.num_qubits() != n) throw std::invalid_argument("row " + a.to_string() + " has wrong qubit count");
    if (a.is_identity()) throw std::invalid_argument("identity row is not allowed");
  }
}

std::set<std::vector<std::uint64_t>> supports_of(const SparseHamiltonian& h) {
  std::set<std::vector<std::uint64_t>> out;
  for (const auto& [a, coeff] : h.terms()) out.insert(a.support_mask());
  return out;
}

}  // namespace

ConjugationMatrix build_pauli_matrix(const std::vector<PauliIndex>& rows,
                                     const std::vector<PauliIndex>& cols) {
  const std::size_t n = rows.empty() ? (cols.empty() ? 0 : cols[0].num_qubits()) : rows[0].num_qubits();
  check_rows(rows, n);
  ConjugationMatrix w;
  w.mode = ConjugationMode::kPauli;
  w.rows = rows;
  w.cols.reserve(cols.size());
  for (const auto& b : cols) {
    if (b.num_qubits() != n) throw std::invalid_argument("column " + b.to_string() + " has wrong qubit count");
    w.cols.push_back(CliffordLabel::pauli(b));
  }
  w.entries.resize(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      w.entries(i, j) = symplectic_form(rows[i], cols[j]) ? -1.0 : 1.0;
    }
  }
  return w;
}

ConjugationMatrix build_clifford_matrix(const SparseHamiltonian& j,
                                        const std::vector<PauliIndex>& rows,
                                        const std::vector<CliffordLabel>& cols) {
  const std::size_t n = j.num_qubits();
  check_rows(rows, n);
  const auto supports = supports_of(j);
  std::vector<PauliIndex> outside;
  for (const auto& a : rows) {
    if (!supports.contains(a.support_mask())) outside.push_back(a);
  }
  if (!outside.empty()) {
    std::string msg = "rows outside suppnz(J):";
    for (const auto& a : outside) msg += " " + a.to_string();
    throw UnreachableTarget(msg, std::move(outside));
  }
  ConjugationMatrix w;
  w.mode = ConjugationMode::kClifford;
  w.rows = rows;
  w.cols = cols;
  w.entries.resize(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].num_qubits() != n) throw std::invalid_argument("column label has wrong qubit count");
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto [sign, source] = conjugated_coefficient_index(cols[c], rows[i]);
      w.entries(i, c) = sign * j.coefficient(source);
    }
  }
  return w;
}

std::vector<PauliIndex> pauli_rows(const SparseHamiltonian& j) {
  std::vector<PauliIndex> rows;
  rows.reserve(j.size());
  for (const auto& [a, coeff] : j.terms()) rows.push_back(a);
  return rows;
}

TargetVector pauli_target(const SparseHamiltonian& a, const SparseHamiltonian& j,
                          const std::vector<PauliIndex>& rows) {
  std::vector<PauliIndex> outside;
  for (const auto& [idx, coeff] : a.terms()) {
    if (!j.contains(idx)) outside.push_back(idx);
  }
  if (!outside.empty()) {
    std::string msg = "target terms not in nz(J):";
    for (const auto& idx : outside) msg += " " + idx.to_string();
    throw UnreachableTarget(msg, std::move(outside));
  }
  TargetVector t;
  t.rows = rows;
  t.values.resize(static_cast<Eigen::Index>(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const double jv = j.coefficient(rows[i]);
    if (jv == 0.0) throw std::invalid_argument("row " + rows[i].to_string() + " is not in nz(J)");
    t.values(i) = a.coefficient(rows[i]) / jv;
  }
  return t;
}

TargetVector direct_m_target(const std::map<PauliIndex, double>& spec,
                             const std::vector<PauliIndex>& rows) {
  TargetVector t;
  t.rows = rows;
  t.values = Eigen::VectorXd::Ones(static_cast<Eigen::Index>(rows.size()));
  for (const auto& [idx, value] : spec) {
    const auto it = std::find(rows.begin(), rows.end(), idx);
    if (it == rows.end()) throw std::invalid_argument("M entry " + idx.to_string() + " is not a row");
    if (!std::isfinite(value)) throw std::invalid_argument("M entry " + idx.to_string() + " is not finite");
    t.values(it - rows.begin()) = value;
  }
  return t;
}

TargetVector clifford_target(const SparseHamiltonian& a, const SparseHamiltonian& j) {
  if (a.num_qubits() != j.num_qubits()) throw std::invalid_argument("qubit counts differ");
  const auto supports = supports_of(j);
  std::vector<PauliIndex> outside;
  for (const auto& [idx, coeff] : a.terms()) {
    if (!supports.contains(idx.support_mask())) outside.push_back(idx);
  }
  if (!outside.empty()) {
    std::string msg = "target terms not in suppnz(J):";
    for (const auto& idx : outside) msg += " " + idx.to_string();
    throw UnreachableTarget(msg, std::move(outside));
  }
  TargetVector t;
  t.rows = support_sets(j).suppnz;
  t.values = coefficients_on(a, t.rows);
  return t;
}

SparseHamiltonian conjugate(const SparseHamiltonian& h, const CliffordLabel& c) {
  if (c.num_qubits() != h.num_qubits()) throw std::invalid_argument("qubit counts differ");
  std::vector<std::uint8_t> inverse(c.perms());
  for (auto& p : inverse) p = static_cast<std::uint8_t>(LocalPermutation(p).inverse().selector());
  SparseHamiltonian out(h.num_qubits());
  for (const auto& [source, coeff] : h.terms()) {
    const int sign = symplectic_form(source, c.signs()) ? -1 : 1;
    out.set(permute(inverse, source), sign * coeff);
  }
  return out;
}

Eigen::VectorXd coefficients_on(const SparseHamiltonian& h, const std::vector<PauliIndex>& rows) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) v(i) = h.coefficient(rows[i]);
  return v;
}

bool all_rows_odd_weight(const std::vector<PauliIndex>& rows) {
  return std::all_of(rows.begin(), rows.end(), [](const PauliIndex& a) { return a.bit_weight() % 2 == 1; });
}

std::vector<PauliIndex> all_pauli_labels(std::size_t num_qubits) {
  if (num_qubits > 16) throw std::invalid_argument("too many qubits to enumerate all Pauli labels");
  const std::uint64_t count = std::uint64_t{1} << (2 * num_qubits);
  std::vector<PauliIndex> out;
  out.reserve(count);
  for (std::uint64_t k = 0; k < count; ++k) out.push_back(PauliIndex::from_ordinal(num_qubits, k));
  return out;
}

std::vector<CliffordLabel> all_clifford_labels(std::size_t num_qubits) {
  if (num_qubits > 6) throw std::invalid_argument("too many qubits to enumerate all Clifford labels");
  std::size_t count = 1;
  for (std::size_t q = 0; q < num_qubits; ++q) count *= 12;
  std::vector<CliffordLabel> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    std::vector<std::uint8_t> perms(num_qubits);
    PauliIndex signs(num_qubits);
    std::size_t rest = k;
    for (std::size_t q = 0; q < num_qubits; ++q) {
      perms[q] = static_cast<std::uint8_t>(rest % 3);
      signs.set(q, static_cast<LocalPauli>((rest / 3) % 4));
      rest /= 12;
    }
    out.emplace_back(std::move(perms), std::move(signs));
  }
  return out;
}

}  // namespace hamshape
