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

#ifndef HAMSHAPE_PAULI_HPP
#define HAMSHAPE_PAULI_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hamshape {

/// Two-bit code of a single-qubit Pauli, laid out as (x << 1) | z.
enum class LocalPauli : std::uint8_t { I = 0, Z = 1, X = 2, Y = 3 };

char local_pauli_char(LocalPauli p);

/// A point (a_x, a_z) of F_2^{2n} naming the Pauli string
/// i^{a_x . a_z} X(a_x) Z(a_z).
///
/// Bits are packed 64 qubits per word. Qubit q lives at bit (63 - q % 64) of
/// word q / 64, so that comparing words numerically is the same as comparing
/// the bit vectors lexicographically with qubit 0 first. The canonical order
/// compares a_x first, then a_z.
class PauliIndex {
 public:
  PauliIndex() = default;
  explicit PauliIndex(std::size_t num_qubits);

  /// Parses a string over {I,X,Y,Z}; qubit 0 is the leftmost character.
  static PauliIndex from_string(std::string_view text);
  /// Unpacks the integer encoding used by `to_ordinal` (n <= 32).
  static PauliIndex from_ordinal(std::size_t num_qubits, std::uint64_t ordinal);

  std::size_t num_qubits() const { return n_; }

  bool x(std::size_t q) const;
  bool z(std::size_t q) const;
  LocalPauli local(std::size_t q) const;
  void set(std::size_t q, LocalPauli p);
  void set(std::size_t q, bool x, bool z);

  bool is_identity() const;
  /// Number of qubits acted on non-trivially, |supp(a)|.
  std::size_t support_size() const;
  /// Hamming weight of the 2n-bit vector (a_x, a_z).
  std::size_t bit_weight() const;
  /// Sorted qubit indices of supp(a).
  std::vector<std::size_t> support() const;
  /// Packed support mask (x | z), one word per 64 qubits.
  std::vector<std::uint64_t> support_mask() const;

  /// a_x in the low n bits and a_z in the next n bits, qubit 0 least
  /// significant within each half (n <= 32).
  std::uint64_t to_ordinal() const;

  /// Bitwise XOR; the index of P_a P_b up to phase.
  PauliIndex operator^(const PauliIndex& other) const;
  /// Complement of all 2n bits.
  PauliIndex complement() const;

  std::string to_string() const;

  const std::vector<std::uint64_t>& x_words() const { return xs_; }
  const std::vector<std::uint64_t>& z_words() const { return zs_; }

  friend bool operator==(const PauliIndex&, const PauliIndex&) = default;
  friend std::strong_ordering operator<=>(const PauliIndex& a, const PauliIndex& b);

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> xs_;
  std::vector<std::uint64_t> zs_;
};

/// <a,b> = a_x . b_z + a_z . b_x over F_2. Throws std::invalid_argument when
/// the qubit counts differ.
int symplectic_form(const PauliIndex& a, const PauliIndex& b);

/// Exponent k such that P_a P_b = i^k P_{a xor b}, for the Hermitian
/// convention P_a = i^{a_x . a_z} X(a_x) Z(a_z).
int product_phase(const PauliIndex& a, const PauliIndex& b);

/// Local permutation pi_p of F_2^2 selected by p in {0,1,2}. pi_0 is the
/// identity, pi_1 sends X->Y->Z->X and pi_2 = pi_1^{-1}.
class LocalPermutation {
 public:
  explicit LocalPermutation(int selector);
  int selector() const { return p_; }
  LocalPauli operator()(LocalPauli a) const;
  LocalPermutation inverse() const;

 private:
  int p_;
};

/// Label (p, b) of a layer of single-qubit gates from C_XY, one gate per
/// qubit. Per qubit, p selects the axis permutation and b_q the sign flips:
///
///   p = 0: I, X, Y, Z               for b_q = (0,0), (1,0), (1,1), (0,1)
///   p = 1: SxSy, Sx'Sy, Sx'Sy', SxSy'
///   p = 2: Sy'Sx', SySx, SySx', Sy'Sx
///
/// where Sx = sqrt(X), Sy = sqrt(Y) and a prime marks the adjoint. A label
/// with p = 0 everywhere is the Pauli layer P_b.
class CliffordLabel {
 public:
  CliffordLabel() = default;
  explicit CliffordLabel(std::size_t num_qubits);
  CliffordLabel(std::vector<std::uint8_t> perms, PauliIndex signs);

  static CliffordLabel pauli(const PauliIndex& b);
  static CliffordLabel identity(std::size_t num_qubits);
  /// Parses whitespace or comma separated per-qubit tokens.
  static CliffordLabel from_tokens(const std::vector<std::string>& tokens);

  std::size_t num_qubits() const { return signs_.num_qubits(); }
  const std::vector<std::uint8_t>& perms() const { return perms_; }
  const PauliIndex& signs() const { return signs_; }

  bool is_pauli() const;
  bool is_identity() const;

  /// Token of the gate acting on qubit q.
  std::string token(std::size_t q) const;
  std::vector<std::string> tokens() const;
  std::string to_string() const;

  friend bool operator==(const CliffordLabel&, const CliffordLabel&) = default;
  friend std::strong_ordering operator<=>(const CliffordLabel& a, const CliffordLabel& b);

 private:
  std::vector<std::uint8_t> perms_;
  PauliIndex signs_;
};

/// Applies pi_p qubit-wise.
PauliIndex permute(const std::vector<std::uint8_t>& perms, const PauliIndex& a);

struct ConjugatedIndex {
  int sign;
  PauliIndex source;
};

/// Where the coefficient of P_a in S_c^dag H S_c comes from: it equals
/// sign * J_source with source = pi_p(a) and sign = (-1)^{<source, b>}.
ConjugatedIndex conjugated_coefficient_index(const CliffordLabel& c, const PauliIndex& a);

}  // namespace hamshape

#endif  // HAMSHAPE_PAULI_HPP
