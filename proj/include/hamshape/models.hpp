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

// Random and structured Hamiltonian families used by experiments and tests.

#ifndef HAMSHAPE_MODELS_HPP
#define HAMSHAPE_MODELS_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "hamshape/hamiltonian.hpp"
#include "hamshape/rng.hpp"

namespace hamshape {

/// Z_i Z_j, X_i X_j, ... on the qubit pair (i, j).
PauliIndex pair_string(std::size_t n, std::size_t i, LocalPauli pi, std::size_t j, LocalPauli pj);

/// -sum_{i<j} A_ij Z_i Z_j with A_ij ~ unif[0, 1].
SparseHamiltonian random_ising(std::size_t n, Rng& rng);

/// -sum_{i<j} (Ax_ij X_i X_j + Ay_ij Y_i Y_j + Az_ij Z_i Z_j), all ~ unif[0, 1].
SparseHamiltonian random_heisenberg(std::size_t n, Rng& rng);

/// All 1- and 2-local Pauli strings on n qubits, canonical order.
std::vector<PauliIndex> two_local_strings(std::size_t n);

/// A random 2-local Hamiltonian: every qubit and every pair carries one
/// random non-identity string, and each further 1- or 2-local string is
/// present with probability `extra`. Magnitudes ~ unif[0.5, 1.5] with
/// random signs.
SparseHamiltonian random_two_local(std::size_t n, double extra, Rng& rng);

/// Random coefficients ~ unif[lo, hi] on a subset of the given strings,
/// each kept with probability `density` (at least one is kept).
SparseHamiltonian random_on(const std::vector<PauliIndex>& strings, double density, double lo,
                            double hi, Rng& rng);

/// Edges of a side x side square grid; qubit (r, c) is r * side + c.
std::vector<std::pair<std::size_t, std::size_t>> lattice_edges(std::size_t side);

/// All nine two-body strings on every edge with coefficient 1.
SparseHamiltonian lattice_system(std::size_t side);

}  // namespace hamshape

#endif  // HAMSHAPE_MODELS_HPP
