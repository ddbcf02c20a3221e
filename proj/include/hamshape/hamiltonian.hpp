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

#ifndef HAMSHAPE_HAMILTONIAN_HPP
#define HAMSHAPE_HAMILTONIAN_HPP

#include <cstddef>
#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "hamshape/dense.hpp"
#include "hamshape/pauli.hpp"

namespace hamshape {

/// Real Pauli-basis Hamiltonian sum_a J_a P_a without the identity term.
/// Coefficients are angular rates: evolution is exp(-i t H) with t in seconds.
class SparseHamiltonian {
 public:
  using TermMap = std::map<PauliIndex, double>;

  SparseHamiltonian() = default;
  explicit SparseHamiltonian(std::size_t num_qubits) : n_(num_qubits) {}

  std::size_t num_qubits() const { return n_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  /// Sets J_a; a zero value removes the term. Throws on identity index,
  /// qubit-count mismatch or non-finite value.
  void set(const PauliIndex& a, double value);
  /// J_a += value, dropping the term if it cancels exactly.
  void add(const PauliIndex& a, double value);
  /// J_a, or 0 for indices not stored.
  double coefficient(const PauliIndex& a) const;
  bool contains(const PauliIndex& a) const { return terms_.contains(a); }

  /// Largest |J_a|.
  double max_abs() const;

  friend bool operator==(const SparseHamiltonian&, const SparseHamiltonian&) = default;

 private:
  std::size_t n_ = 0;
  TermMap terms_;
};

/// nz: stored indices. suppnz: every index whose support equals the support
/// of some stored index. Both sorted canonically.
struct SupportSets {
  std::vector<PauliIndex> nz;
  std::vector<PauliIndex> suppnz;
};

inline constexpr double kHermitianTolerance = 1e-10;
inline constexpr double kDecomposeDropTolerance = 1e-12;

/// J_a = Tr(P_a H) / 2^n for every non-identity a, via one Walsh-Hadamard
/// transform per X-pattern. Entries with |J_a| below the drop tolerance are
/// discarded. Throws std::invalid_argument for non-Hermitian input.
SparseHamiltonian pauli_decompose(const DenseMatrix& h, std::size_t limit = kDefaultDenseLimit);

DenseMatrix pauli_assemble(const SparseHamiltonian& h, std::size_t limit = kDefaultDenseLimit);

SupportSets support_sets(const SparseHamiltonian& h);

/// All 3^|S| strings whose support is exactly the given qubit set.
std::vector<PauliIndex> strings_on_support(std::size_t num_qubits,
                                           const std::vector<std::size_t>& support);

/// Smallest k such that every stored term acts on at most k qubits.
std::size_t k_locality(const SparseHamiltonian& h);

class HamiltonianFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// {"n": int, "terms": [{"pauli": "XIZ", "coeff": 0.5}, ...]}; coefficients
/// written with 17 significant digits.
std::string to_json(const SparseHamiltonian& h);
SparseHamiltonian hamiltonian_from_json(const std::string& text);

void save_hamiltonian(const SparseHamiltonian& h, const std::filesystem::path& path);
SparseHamiltonian load_hamiltonian(const std::filesystem::path& path);

}  // namespace hamshape

#endif  // HAMSHAPE_HAMILTONIAN_HPP
