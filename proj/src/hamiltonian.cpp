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

#include "hamshape/hamiltonian.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "hamshape/walsh_hadamard.hpp"

namespace hamshape {

void SparseHamiltonian::set(const PauliIndex& a, double value) {
  if (a.num_qubits() != n_) {
    throw std::invalid_argument("term " + a.to_string() + " does not act on " +
                                std::to_string(n_) + " qubits");
  }
  if (a.is_identity()) {
    throw std::invalid_argument("the identity term is not part of a Hamiltonian model");
  }
  if (!std::isfinite(value)) {
    throw std::invalid_argument("coefficient of " + a.to_string() + " is not finite");
  }
  if (value == 0.0) {
    terms_.erase(a);
  } else {
    terms_[a] = value;
  }
}

void SparseHamiltonian::add(const PauliIndex& a, double value) { set(a, coefficient(a) + value); }

double SparseHamiltonian::coefficient(const PauliIndex& a) const {
  auto it = terms_.find(a);
  return it == terms_.end() ? 0.0 : it->second;
}

double SparseHamiltonian::max_abs() const {
  double best = 0.0;
  for (const auto& [a, v] : terms_) best = std::max(best, std::abs(v));
  return best;
}

SparseHamiltonian pauli_decompose(const DenseMatrix& h, std::size_t limit) {
  const auto dim = static_cast<std::size_t>(h.rows());
  if (h.rows() != h.cols() || dim == 0 || (dim & (dim - 1)) != 0) {
    throw std::invalid_argument("Pauli decomposition needs a square 2^n x 2^n matrix");
  }
  const auto n = static_cast<std::size_t>(std::countr_zero(dim));
  require_dense(n, limit);
  if ((h - h.adjoint()).cwiseAbs().maxCoeff() > kHermitianTolerance) {
    throw std::invalid_argument("matrix is not Hermitian");
  }

  static constexpr Complex kPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  SparseHamiltonian out(n);
  std::vector<Complex> v(dim);
  const double norm = 1.0 / static_cast<double>(dim);
  for (std::uint64_t xmask = 0; xmask < dim; ++xmask) {
    for (std::uint64_t m = 0; m < dim; ++m) v[m] = h(m, m ^ xmask);
    walsh_hadamard_transform(std::span<Complex>(v));
    for (std::uint64_t zmask = 0; zmask < dim; ++zmask) {
      if (xmask == 0 && zmask == 0) continue;
      const Complex tr = kPowers[std::popcount(xmask & zmask) & 3] * v[zmask];
      const double coeff = tr.real() * norm;
      if (std::abs(coeff) < kDecomposeDropTolerance) continue;
      PauliIndex a(n);
      for (std::size_t q = 0; q < n; ++q) {
        const std::uint64_t bit = std::uint64_t{1} << (n - 1 - q);
        a.set(q, (xmask & bit) != 0, (zmask & bit) != 0);
      }
      out.set(a, coeff);
    }
  }
  return out;
}

DenseMatrix pauli_assemble(const SparseHamiltonian& h, std::size_t limit) {
  const std::size_t n = h.num_qubits();
  require_dense(n, limit);
  const std::size_t dim = std::size_t{1} << n;
  DenseMatrix out = DenseMatrix::Zero(dim, dim);
  for (const auto& [a, coeff] : h.terms()) out += coeff * pauli_dense(a, limit);
  return out;
}

std::vector<PauliIndex> strings_on_support(std::size_t num_qubits,
                                           const std::vector<std::size_t>& support) {
  static constexpr LocalPauli kNonIdentity[3] = {LocalPauli::X, LocalPauli::Y, LocalPauli::Z};
  std::vector<PauliIndex> out;
  std::size_t count = 1;
  for (std::size_t i = 0; i < support.size(); ++i) count *= 3;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    PauliIndex a(num_qubits);
    std::size_t rest = k;
    for (auto q : support) {
      a.set(q, kNonIdentity[rest % 3]);
      rest /= 3;
    }
    out.push_back(std::move(a));
  }
  return out;
}

SupportSets support_sets(const SparseHamiltonian& h) {
  SupportSets out;
  std::set<std::vector<std::size_t>> supports;
  for (const auto& [a, coeff] : h.terms()) {
    out.nz.push_back(a);
    supports.insert(a.support());
  }
  std::set<PauliIndex> all;
  for (const auto& s : supports) {
    for (auto& a : strings_on_support(h.num_qubits(), s)) all.insert(std::move(a));
  }
  out.suppnz.assign(all.begin(), all.end());
  return out;
}

std::size_t k_locality(const SparseHamiltonian& h) {
  std::size_t k = 0;
  for (const auto& [a, coeff] : h.terms()) k = std::max(k, a.support_size());
  return k;
}

std::string to_json(const SparseHamiltonian& h) {
  std::ostringstream os;
  os << "{\n  \"n\": " << h.num_qubits() << ",\n  \"terms\": [";
  bool first = true;
  char buf[64];
  for (const auto& [a, coeff] : h.terms()) {
    std::snprintf(buf, sizeof buf, "%.17g", coeff);
    os << (first ? "\n" : ",\n") << "    {\"pauli\": \"" << a.to_string() << "\", \"coeff\": " << buf
       << "}";
    first = false;
  }
  os << (first ? "]\n}\n" : "\n  ]\n}\n");
  return os.str();
}

SparseHamiltonian hamiltonian_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw HamiltonianFormatError(std::string("malformed Hamiltonian file: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer() ||
      !doc.contains("terms") || !doc["terms"].is_array()) {
    throw HamiltonianFormatError("Hamiltonian file needs integer \"n\" and array \"terms\"");
  }
  const auto n = doc["n"].get<long long>();
  if (n < 1) throw HamiltonianFormatError("\"n\" must be positive");
  SparseHamiltonian h(static_cast<std::size_t>(n));
  for (const auto& term : doc["terms"]) {
    if (!term.is_object() || !term.contains("pauli") || !term["pauli"].is_string() ||
        !term.contains("coeff") || !term["coeff"].is_number()) {
      throw HamiltonianFormatError("each term needs string \"pauli\" and number \"coeff\"");
    }
    const auto text_pauli = term["pauli"].get<std::string>();
    if (text_pauli.size() != h.num_qubits()) {
      throw HamiltonianFormatError("term \"" + text_pauli + "\" has length " +
                                   std::to_string(text_pauli.size()) + " but n = " +
                                   std::to_string(n));
    }
    PauliIndex a;
    try {
      a = PauliIndex::from_string(text_pauli);
    } catch (const std::invalid_argument& e) {
      throw HamiltonianFormatError(e.what());
    }
    if (a.is_identity()) throw HamiltonianFormatError("identity term is not allowed");
    if (h.contains(a)) throw HamiltonianFormatError("duplicate term \"" + text_pauli + "\"");
    const double coeff = term["coeff"].get<double>();
    if (!std::isfinite(coeff)) throw HamiltonianFormatError("non-finite coefficient");
    // Explicit zeros are accepted and dropped.
    h.set(a, coeff);
  }
  return h;
}

void save_hamiltonian(const SparseHamiltonian& h, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << to_json(h);
}

SparseHamiltonian load_hamiltonian(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return hamiltonian_from_json(buffer.str());
}

}  // namespace hamshape
