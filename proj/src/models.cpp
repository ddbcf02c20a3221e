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

#include "hamshape/models.hpp"

#include <algorithm>
#include <stdexcept>

namespace hamshape {

namespace {

constexpr LocalPauli kAxes[3] = {LocalPauli::X, LocalPauli::Y, LocalPauli::Z};

double random_magnitude(Rng& rng) {
  const double v = rng.uniform(0.5, 1.5);
  return rng.bit() ? v : -v;
}

}  // namespace

PauliIndex pair_string(std::size_t n, std::size_t i, LocalPauli pi, std::size_t j, LocalPauli pj) {
  PauliIndex a(n);
  a.set(i, pi);
  a.set(j, pj);
  return a;
}

SparseHamiltonian random_ising(std::size_t n, Rng& rng) {
  SparseHamiltonian h(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) h.set(pair_string(n, i, LocalPauli::Z, j, LocalPauli::Z), -rng.uniform());
  }
  return h;
}

SparseHamiltonian random_heisenberg(std::size_t n, Rng& rng) {
  SparseHamiltonian h(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (auto p : kAxes) h.set(pair_string(n, i, p, j, p), -rng.uniform());
    }
  }
  return h;
}

std::vector<PauliIndex> two_local_strings(std::size_t n) {
  std::vector<PauliIndex> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (auto& a : strings_on_support(n, {i})) out.push_back(std::move(a));
    for (std::size_t j = i + 1; j < n; ++j) {
      for (auto& a : strings_on_support(n, {i, j})) out.push_back(std::move(a));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

SparseHamiltonian random_two_local(std::size_t n, double extra, Rng& rng) {
  SparseHamiltonian h(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto single = strings_on_support(n, {i});
    h.set(single[rng.below(single.size())], random_magnitude(rng));
    for (std::size_t j = i + 1; j < n; ++j) {
      auto pair = strings_on_support(n, {i, j});
      h.set(pair[rng.below(pair.size())], random_magnitude(rng));
    }
  }
  for (const auto& a : two_local_strings(n)) {
    const bool keep = rng.uniform() < extra;
    const double v = random_magnitude(rng);
    if (keep && !h.contains(a)) h.set(a, v);
  }
  return h;
}

SparseHamiltonian random_on(const std::vector<PauliIndex>& strings, double density, double lo,
                            double hi, Rng& rng) {
  if (strings.empty()) throw std::invalid_argument("no strings to draw from");
  SparseHamiltonian h(strings.front().num_qubits());
  for (const auto& a : strings) {
    const bool keep = rng.uniform() < density;
    const double v = rng.uniform(lo, hi);
    if (keep && v != 0.0) h.set(a, v);
  }
  if (h.empty()) h.set(strings[rng.below(strings.size())], rng.uniform(lo, hi));
  return h;
}

std::vector<std::pair<std::size_t, std::size_t>> lattice_edges(std::size_t side) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t r = 0; r < side; ++r) {
    for (std::size_t c = 0; c < side; ++c) {
      const std::size_t q = r * side + c;
      if (c + 1 < side) edges.emplace_back(q, q + 1);
      if (r + 1 < side) edges.emplace_back(q, q + side);
    }
  }
  return edges;
}

SparseHamiltonian lattice_system(std::size_t side) {
  const std::size_t n = side * side;
  SparseHamiltonian h(n);
  for (const auto& [i, j] : lattice_edges(side)) {
    for (auto& a : strings_on_support(n, {i, j})) h.set(a, 1.0);
  }
  return h;
}

}  // namespace hamshape
