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

// Dense 2^n x 2^n realizations of Pauli strings and C_XY gate layers, used for
// verification at small qubit counts. Qubit 0 is the leftmost Kronecker
// factor, i.e. the most significant bit of the basis-state index.

#ifndef HAMSHAPE_DENSE_HPP
#define HAMSHAPE_DENSE_HPP

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

#include "hamshape/pauli.hpp"

namespace hamshape {

using Complex = std::complex<double>;
using DenseMatrix = Eigen::MatrixXcd;

inline constexpr std::size_t kDefaultDenseLimit = 12;

/// Raised when a dense operation is requested above the configured qubit limit.
class DenseLimitError : public std::runtime_error {
 public:
  DenseLimitError(std::size_t num_qubits, std::size_t limit)
      : std::runtime_error("dense representation requested for " + std::to_string(num_qubits) +
                           " qubits, limit is " + std::to_string(limit)),
        num_qubits_(num_qubits),
        limit_(limit) {}
  std::size_t num_qubits() const { return num_qubits_; }
  std::size_t limit() const { return limit_; }

 private:
  std::size_t num_qubits_;
  std::size_t limit_;
};

void require_dense(std::size_t num_qubits, std::size_t limit = kDefaultDenseLimit);

DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b);

/// The Hermitian Pauli string P_a as a dense signed-permutation matrix.
DenseMatrix pauli_dense(const PauliIndex& a, std::size_t limit = kDefaultDenseLimit);

/// Single-qubit Pauli and square-root Pauli matrices, phases as in
/// sqrt(X) = (1/2)[[1+i, 1-i], [1-i, 1+i]], sqrt(Y) = (1/2)[[1+i, -1-i], [1+i, 1+i]],
/// sqrt(Z) = diag(1, i).
namespace gates {
DenseMatrix identity();
DenseMatrix x();
DenseMatrix y();
DenseMatrix z();
DenseMatrix sqrt_x();
DenseMatrix sqrt_y();
DenseMatrix sqrt_z();
}  // namespace gates

/// 2x2 unitary of the gate named by (p, b_q); a product QD is the matrix
/// product Q * D.
DenseMatrix local_clifford_dense(int perm, LocalPauli sign);

/// Tensor product of the per-qubit gates of the layer.
DenseMatrix clifford_dense(const CliffordLabel& c, std::size_t limit = kDefaultDenseLimit);

/// The two pi/2-rotation generators realizing a gate as
/// S = exp(-i S1) exp(-i S2), each one of (pi/4) * (+-P) per qubit.
struct PulseGenerators {
  DenseMatrix first;
  DenseMatrix second;
};

/// Per qubit: the signed axis of each half pulse, as (sign, axis) pairs.
struct LocalPulse {
  int first_sign = 0;
  LocalPauli first_axis = LocalPauli::I;
  int second_sign = 0;
  LocalPauli second_axis = LocalPauli::I;
};

LocalPulse local_pulse(int perm, LocalPauli sign);

PulseGenerators pulse_generators(const CliffordLabel& c, std::size_t limit = kDefaultDenseLimit);

/// exp(-i t H) for Hermitian H via eigendecomposition.
DenseMatrix expm_hermitian(const DenseMatrix& h, double t = 1.0);

/// exp(-i G), or exp(+i G) when `inverse`, for G the first or second
/// generator of the layer. Built as a Kronecker product of 2x2 rotations.
DenseMatrix pulse_unitary(const CliffordLabel& c, bool first_half, bool inverse,
                          std::size_t limit = kDefaultDenseLimit);

}  // namespace hamshape

#endif  // HAMSHAPE_DENSE_HPP
