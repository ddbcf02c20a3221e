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

#include "hamshape/pauli.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace hamshape {

namespace {

constexpr std::size_t kWordBits = 64;

std::size_t word_count(std::size_t n) { return (n + kWordBits - 1) / kWordBits; }

std::uint64_t bit_mask(std::size_t q) { return std::uint64_t{1} << (kWordBits - 1 - q % kWordBits); }

void require_same_size(const PauliIndex& a, const PauliIndex& b) {
  if (a.num_qubits() != b.num_qubits()) {
    throw std::invalid_argument("Pauli indices act on different qubit counts (" +
                                std::to_string(a.num_qubits()) + " vs " +
                                std::to_string(b.num_qubits()) + ")");
  }
}

// Rows of Table 2: tokens for (p, b_q) with b_q given as LocalPauli code.
// Indexed [p][code] with code = (x << 1) | z.
constexpr std::array<std::array<const char*, 4>, 3> kGateTokens = {{
    {"I", "Z", "X", "Y"},
    {"SxSy", "SxSy'", "Sx'Sy", "Sx'Sy'"},
    {"Sy'Sx'", "Sy'Sx", "SySx", "SySx'"},
}};

// Image of each code under pi_p, indexed [p][code].
constexpr std::array<std::array<std::uint8_t, 4>, 3> kPermutation = {{
    {0, 1, 2, 3},
    // pi_1: X(2)->Y(3), Y(3)->Z(1), Z(1)->X(2)
    {0, 2, 3, 1},
    // pi_2: X(2)->Z(1), Y(3)->X(2), Z(1)->Y(3)
    {0, 3, 1, 2},
}};

}  // namespace

char local_pauli_char(LocalPauli p) {
  switch (p) {
    case LocalPauli::I:
      return 'I';
    case LocalPauli::X:
      return 'X';
    case LocalPauli::Y:
      return 'Y';
    case LocalPauli::Z:
      return 'Z';
  }
  return '?';
}

PauliIndex::PauliIndex(std::size_t num_qubits)
    : n_(num_qubits), xs_(word_count(num_qubits), 0), zs_(word_count(num_qubits), 0) {}

PauliIndex PauliIndex::from_string(std::string_view text) {
  PauliIndex result(text.size());
  for (std::size_t q = 0; q < text.size(); ++q) {
    switch (text[q]) {
      case 'I':
      case '_':
        break;
      case 'X':
        result.set(q, LocalPauli::X);
        break;
      case 'Y':
        result.set(q, LocalPauli::Y);
        break;
      case 'Z':
        result.set(q, LocalPauli::Z);
        break;
      default:
        throw std::invalid_argument("invalid Pauli character '" + std::string(1, text[q]) +
                                    "' in \"" + std::string(text) + "\"");
    }
  }
  return result;
}

PauliIndex PauliIndex::from_ordinal(std::size_t num_qubits, std::uint64_t ordinal) {
  if (num_qubits > 32) {
    throw std::invalid_argument("ordinal encoding supports at most 32 qubits");
  }
  PauliIndex result(num_qubits);
  for (std::size_t q = 0; q < num_qubits; ++q) {
    result.set(q, (ordinal >> q) & 1, (ordinal >> (q + num_qubits)) & 1);
  }
  return result;
}

bool PauliIndex::x(std::size_t q) const { return (xs_[q / kWordBits] & bit_mask(q)) != 0; }

bool PauliIndex::z(std::size_t q) const { return (zs_[q / kWordBits] & bit_mask(q)) != 0; }

LocalPauli PauliIndex::local(std::size_t q) const {
  return static_cast<LocalPauli>((static_cast<int>(x(q)) << 1) | static_cast<int>(z(q)));
}

void PauliIndex::set(std::size_t q, bool x, bool z) {
  if (q >= n_) {
    throw std::out_of_range("qubit " + std::to_string(q) + " out of range for " +
                            std::to_string(n_) + " qubits");
  }
  const std::uint64_t m = bit_mask(q);
  auto& xw = xs_[q / kWordBits];
  auto& zw = zs_[q / kWordBits];
  xw = x ? (xw | m) : (xw & ~m);
  zw = z ? (zw | m) : (zw & ~m);
}

void PauliIndex::set(std::size_t q, LocalPauli p) {
  const auto code = static_cast<int>(p);
  set(q, (code & 2) != 0, (code & 1) != 0);
}

bool PauliIndex::is_identity() const {
  return std::all_of(xs_.begin(), xs_.end(), [](auto w) { return w == 0; }) &&
         std::all_of(zs_.begin(), zs_.end(), [](auto w) { return w == 0; });
}

std::size_t PauliIndex::support_size() const {
  std::size_t total = 0;
  for (std::size_t w = 0; w < xs_.size(); ++w) total += std::popcount(xs_[w] | zs_[w]);
  return total;
}

std::size_t PauliIndex::bit_weight() const {
  std::size_t total = 0;
  for (std::size_t w = 0; w < xs_.size(); ++w) {
    total += std::popcount(xs_[w]) + std::popcount(zs_[w]);
  }
  return total;
}

std::vector<std::size_t> PauliIndex::support() const {
  std::vector<std::size_t> out;
  for (std::size_t q = 0; q < n_; ++q) {
    if (x(q) || z(q)) out.push_back(q);
  }
  return out;
}

std::vector<std::uint64_t> PauliIndex::support_mask() const {
  std::vector<std::uint64_t> out(xs_.size());
  for (std::size_t w = 0; w < xs_.size(); ++w) out[w] = xs_[w] | zs_[w];
  return out;
}

std::uint64_t PauliIndex::to_ordinal() const {
  if (n_ > 32) throw std::invalid_argument("ordinal encoding supports at most 32 qubits");
  std::uint64_t out = 0;
  for (std::size_t q = 0; q < n_; ++q) {
    out |= static_cast<std::uint64_t>(x(q)) << q;
    out |= static_cast<std::uint64_t>(z(q)) << (q + n_);
  }
  return out;
}

PauliIndex PauliIndex::operator^(const PauliIndex& other) const {
  require_same_size(*this, other);
  PauliIndex out(n_);
  for (std::size_t w = 0; w < xs_.size(); ++w) {
    out.xs_[w] = xs_[w] ^ other.xs_[w];
    out.zs_[w] = zs_[w] ^ other.zs_[w];
  }
  return out;
}

PauliIndex PauliIndex::complement() const {
  PauliIndex out(n_);
  for (std::size_t q = 0; q < n_; ++q) out.set(q, !x(q), !z(q));
  return out;
}

std::string PauliIndex::to_string() const {
  std::string out(n_, 'I');
  for (std::size_t q = 0; q < n_; ++q) out[q] = local_pauli_char(local(q));
  return out;
}

std::strong_ordering operator<=>(const PauliIndex& a, const PauliIndex& b) {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  if (auto c = a.xs_ <=> b.xs_; c != 0) return c;
  return a.zs_ <=> b.zs_;
}

int symplectic_form(const PauliIndex& a, const PauliIndex& b) {
  require_same_size(a, b);
  std::uint64_t acc = 0;
  const auto& ax = a.x_words();
  const auto& az = a.z_words();
  const auto& bx = b.x_words();
  const auto& bz = b.z_words();
  for (std::size_t w = 0; w < ax.size(); ++w) acc ^= (ax[w] & bz[w]) ^ (az[w] & bx[w]);
  return std::popcount(acc) & 1;
}

int product_phase(const PauliIndex& a, const PauliIndex& b) {
  require_same_size(a, b);
  // Per-qubit exponent of i in sigma_a sigma_b, indexed [code_a][code_b].
  // Codes: I=0, Z=1, X=2, Y=3. XY = iZ, YZ = iX, ZX = iY.
  static constexpr std::array<std::array<int, 4>, 4> kPhase = {{
      {0, 0, 0, 0},
      {0, 0, 1, 3},  // Z*X = iY, Z*Y = -iX
      {0, 3, 0, 1},  // X*Z = -iY, X*Y = iZ
      {0, 1, 3, 0},  // Y*Z = iX, Y*X = -iZ
  }};
  int k = 0;
  for (std::size_t q = 0; q < a.num_qubits(); ++q) {
    k += kPhase[static_cast<int>(a.local(q))][static_cast<int>(b.local(q))];
  }
  return k & 3;
}

LocalPermutation::LocalPermutation(int selector) : p_(selector) {
  if (selector < 0 || selector > 2) {
    throw std::invalid_argument("permutation selector must be 0, 1 or 2");
  }
}

LocalPauli LocalPermutation::operator()(LocalPauli a) const {
  return static_cast<LocalPauli>(kPermutation[p_][static_cast<int>(a)]);
}

LocalPermutation LocalPermutation::inverse() const { return LocalPermutation((3 - p_) % 3); }

PauliIndex permute(const std::vector<std::uint8_t>& perms, const PauliIndex& a) {
  if (perms.size() != a.num_qubits()) {
    throw std::invalid_argument("permutation selector length does not match qubit count");
  }
  PauliIndex out = a;
  for (std::size_t q = 0; q < perms.size(); ++q) {
    if (perms[q] == 0) continue;
    const auto code = static_cast<int>(a.local(q));
    if (code == 0) continue;
    out.set(q, static_cast<LocalPauli>(kPermutation[perms[q]][code]));
  }
  return out;
}

CliffordLabel::CliffordLabel(std::size_t num_qubits) : perms_(num_qubits, 0), signs_(num_qubits) {}

CliffordLabel::CliffordLabel(std::vector<std::uint8_t> perms, PauliIndex signs)
    : perms_(std::move(perms)), signs_(std::move(signs)) {
  if (perms_.size() != signs_.num_qubits()) {
    throw std::invalid_argument("Clifford label: p and b describe different qubit counts");
  }
  for (auto p : perms_) {
    if (p > 2) throw std::invalid_argument("Clifford label: p entries must lie in {0,1,2}");
  }
}

CliffordLabel CliffordLabel::pauli(const PauliIndex& b) {
  return CliffordLabel(std::vector<std::uint8_t>(b.num_qubits(), 0), b);
}

CliffordLabel CliffordLabel::identity(std::size_t num_qubits) { return CliffordLabel(num_qubits); }

CliffordLabel CliffordLabel::from_tokens(const std::vector<std::string>& tokens) {
  CliffordLabel out(tokens.size());
  for (std::size_t q = 0; q < tokens.size(); ++q) {
    bool found = false;
    for (std::uint8_t p = 0; p < 3 && !found; ++p) {
      for (int code = 0; code < 4; ++code) {
        if (tokens[q] == kGateTokens[p][code]) {
          out.perms_[q] = p;
          out.signs_.set(q, static_cast<LocalPauli>(code));
          found = true;
          break;
        }
      }
    }
    if (!found) throw std::invalid_argument("unknown gate token '" + tokens[q] + "'");
  }
  return out;
}

bool CliffordLabel::is_pauli() const {
  return std::all_of(perms_.begin(), perms_.end(), [](auto p) { return p == 0; });
}

bool CliffordLabel::is_identity() const { return is_pauli() && signs_.is_identity(); }

std::string CliffordLabel::token(std::size_t q) const {
  return kGateTokens[perms_.at(q)][static_cast<int>(signs_.local(q))];
}

std::vector<std::string> CliffordLabel::tokens() const {
  std::vector<std::string> out;
  out.reserve(num_qubits());
  for (std::size_t q = 0; q < num_qubits(); ++q) out.push_back(token(q));
  return out;
}

std::string CliffordLabel::to_string() const {
  std::ostringstream os;
  for (std::size_t q = 0; q < num_qubits(); ++q) {
    if (q) os << ' ';
    os << token(q);
  }
  return os.str();
}

std::strong_ordering operator<=>(const CliffordLabel& a, const CliffordLabel& b) {
  if (auto c = a.perms_ <=> b.perms_; c != 0) return c;
  return a.signs_ <=> b.signs_;
}

ConjugatedIndex conjugated_coefficient_index(const CliffordLabel& c, const PauliIndex& a) {
  if (c.num_qubits() != a.num_qubits()) {
    throw std::invalid_argument("Clifford label and Pauli index act on different qubit counts");
  }
  PauliIndex source = permute(c.perms(), a);
  const int sign = symplectic_form(source, c.signs()) ? -1 : 1;
  return {sign, std::move(source)};
}

}  // namespace hamshape
