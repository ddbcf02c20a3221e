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

#ifndef HAMSHAPE_ENGINEERING_HPP
#define HAMSHAPE_ENGINEERING_HPP

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "hamshape/hamiltonian.hpp"
#include "hamshape/pauli.hpp"

namespace hamshape {

enum class ConjugationMode { kPauli, kClifford };

const char* mode_name(ConjugationMode mode);
ConjugationMode parse_mode(const std::string& text);

/// Column l lists the Pauli coefficients of S_l^dag H_S S_l over the rows.
/// In Pauli mode every column label has p = 0 and the entries are the
/// coefficient-free signs (-1)^{<a,b>}.
struct ConjugationMatrix {
  ConjugationMode mode = ConjugationMode::kPauli;
  std::vector<PauliIndex> rows;
  std::vector<CliffordLabel> cols;
  Eigen::MatrixXd entries;

  std::size_t num_rows() const { return rows.size(); }
  std::size_t num_cols() const { return cols.size(); }

  /// Tab separated dump for debugging: header of column tokens, then one
  /// line per row starting with the Pauli string.
  std::string to_table() const;
};

struct TargetVector {
  std::vector<PauliIndex> rows;
  Eigen::VectorXd values;
};

/// Thrown when a target needs Pauli terms the chosen conjugation mode cannot
/// produce from the system Hamiltonian.
class UnreachableTarget : public std::runtime_error {
 public:
  UnreachableTarget(const std::string& what, std::vector<PauliIndex> offending)
      : std::runtime_error(what), offending_(std::move(offending)) {}
  const std::vector<PauliIndex>& offending() const { return offending_; }

 private:
  std::vector<PauliIndex> offending_;
};

/// entry(i, j) = (-1)^{<rows[i], cols[j]>}.
ConjugationMatrix build_pauli_matrix(const std::vector<PauliIndex>& rows,
                                     const std::vector<PauliIndex>& cols);

/// entry(i, j) = (-1)^{<pi_p(a), b>} J[pi_p(a)] for a = rows[i], (p, b) = cols[j].
/// Rows must lie in suppnz(J).
ConjugationMatrix build_clifford_matrix(const SparseHamiltonian& j,
                                        const std::vector<PauliIndex>& rows,
                                        const std::vector<CliffordLabel>& cols);

/// Rows equal to nz(J) in canonical order.
std::vector<PauliIndex> pauli_rows(const SparseHamiltonian& j);

/// M_a = A_a / J_a over the rows. Throws UnreachableTarget if A has a term
/// outside nz(J) and std::invalid_argument if some row is not in nz(J).
TargetVector pauli_target(const SparseHamiltonian& a, const SparseHamiltonian& j,
                          const std::vector<PauliIndex>& rows);

/// Dense M over the rows with 1.0 for unspecified entries.
TargetVector direct_m_target(const std::map<PauliIndex, double>& spec,
                             const std::vector<PauliIndex>& rows);

/// Rows = suppnz(J), values A_a. Throws UnreachableTarget if A has a term
/// outside suppnz(J).
TargetVector clifford_target(const SparseHamiltonian& a, const SparseHamiltonian& j);

/// S_c^dag H S_c as a Pauli-basis Hamiltonian.
SparseHamiltonian conjugate(const SparseHamiltonian& h, const CliffordLabel& c);

/// Coefficients of h over the given rows.
Eigen::VectorXd coefficients_on(const SparseHamiltonian& h, const std::vector<PauliIndex>& rows);

/// True when every row has odd Hamming weight as a 2n-bit vector, the case
/// in which the column sign-complement symmetry holds.
bool all_rows_odd_weight(const std::vector<PauliIndex>& rows);

/// Every b in F_2^{2n} in ordinal order (n <= 16).
std::vector<PauliIndex> all_pauli_labels(std::size_t num_qubits);

/// All 12^n C_XY layer labels (n <= 6).
std::vector<CliffordLabel> all_clifford_labels(std::size_t num_qubits);

}  // namespace hamshape

#endif  // HAMSHAPE_ENGINEERING_HPP
