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

#include "hamshape/dense.hpp"

#include <bit>
#include <cmath>
#include <numbers>

namespace hamshape {

namespace {

constexpr Complex kI{0.0, 1.0};

DenseMatrix local_pauli_dense(LocalPauli p) {
  switch (p) {
    case LocalPauli::I:
      return gates::identity();
    case LocalPauli::X:
      return gates::x();
    case LocalPauli::Y:
      return gates::y();
    case LocalPauli::Z:
      return gates::z();
  }
  return gates::identity();
}

// cos(theta) I - i sin(theta) P
DenseMatrix local_rotation(double theta, LocalPauli axis) {
  DenseMatrix out = std::cos(theta) * gates::identity();
  if (axis != LocalPauli::I) out += -kI * std::sin(theta) * local_pauli_dense(axis);
  return out;
}

// Basis-state bit of qubit q for an n-qubit register (qubit 0 = MSB).
std::uint64_t basis_bit(std::size_t n, std::size_t q) { return std::uint64_t{1} << (n - 1 - q); }

}  // namespace

void require_dense(std::size_t num_qubits, std::size_t limit) {
  if (num_qubits > limit) throw DenseLimitError(num_qubits, limit);
}

DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b) {
  DenseMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

DenseMatrix pauli_dense(const PauliIndex& a, std::size_t limit) {
  const std::size_t n = a.num_qubits();
  require_dense(n, limit);
  std::uint64_t xmask = 0;
  std::uint64_t zmask = 0;
  for (std::size_t q = 0; q < n; ++q) {
    if (a.x(q)) xmask |= basis_bit(n, q);
    if (a.z(q)) zmask |= basis_bit(n, q);
  }
  // P_a |k> = i^{x.z} (-1)^{z.k} |k xor x>
  static constexpr Complex kPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const Complex phase = kPowers[std::popcount(xmask & zmask) & 3];
  const std::size_t dim = std::size_t{1} << n;
  DenseMatrix out = DenseMatrix::Zero(dim, dim);
  for (std::uint64_t k = 0; k < dim; ++k) {
    const double sign = (std::popcount(zmask & k) & 1) ? -1.0 : 1.0;
    out(k ^ xmask, k) = phase * sign;
  }
  return out;
}

namespace gates {

DenseMatrix identity() { return DenseMatrix::Identity(2, 2); }

DenseMatrix x() {
  DenseMatrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

DenseMatrix y() {
  DenseMatrix m(2, 2);
  m << 0, -kI, kI, 0;
  return m;
}

DenseMatrix z() {
  DenseMatrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

DenseMatrix sqrt_x() {
  DenseMatrix m(2, 2);
  m << Complex(1, 1), Complex(1, -1), Complex(1, -1), Complex(1, 1);
  return 0.5 * m;
}

DenseMatrix sqrt_y() {
  DenseMatrix m(2, 2);
  m << Complex(1, 1), Complex(-1, -1), Complex(1, 1), Complex(1, 1);
  return 0.5 * m;
}

DenseMatrix sqrt_z() {
  DenseMatrix m(2, 2);
  m << 1, 0, 0, kI;
  return m;
}

}  // namespace gates

DenseMatrix local_clifford_dense(int perm, LocalPauli sign) {
  const DenseMatrix sx = gates::sqrt_x();
  const DenseMatrix sy = gates::sqrt_y();
  const DenseMatrix sxd = sx.adjoint();
  const DenseMatrix syd = sy.adjoint();
  switch (perm) {
    case 0:
      return local_pauli_dense(sign);
    case 1:
      switch (sign) {
        case LocalPauli::I:
          return sx * sy;
        case LocalPauli::X:
          return sxd * sy;
        case LocalPauli::Y:
          return sxd * syd;
        case LocalPauli::Z:
          return sx * syd;
      }
      break;
    case 2:
      switch (sign) {
        case LocalPauli::I:
          return syd * sxd;
        case LocalPauli::X:
          return sy * sx;
        case LocalPauli::Y:
          return sy * sxd;
        case LocalPauli::Z:
          return syd * sx;
      }
      break;
  }
  throw std::invalid_argument("permutation selector must be 0, 1 or 2");
}

DenseMatrix clifford_dense(const CliffordLabel& c, std::size_t limit) {
  require_dense(c.num_qubits(), limit);
  DenseMatrix out = DenseMatrix::Identity(1, 1);
  for (std::size_t q = 0; q < c.num_qubits(); ++q) {
    out = kron(out, local_clifford_dense(c.perms()[q], c.signs().local(q)));
  }
  return out;
}

LocalPulse local_pulse(int perm, LocalPauli sign) {
  using enum LocalPauli;
  switch (perm) {
    case 0:
      if (sign == I) return {};
      return {1, sign, 1, sign};
    case 1:
      switch (sign) {
        case I:
          return {1, X, 1, Y};
        case X:
          return {-1, X, 1, Y};
        case Y:
          return {-1, X, -1, Y};
        case Z:
          return {1, X, -1, Y};
      }
      break;
    case 2:
      switch (sign) {
        case I:
          return {-1, Y, -1, X};
        case X:
          return {1, Y, 1, X};
        case Y:
          return {1, Y, -1, X};
        case Z:
          return {-1, Y, 1, X};
      }
      break;
  }
  throw std::invalid_argument("permutation selector must be 0, 1 or 2");
}

PulseGenerators pulse_generators(const CliffordLabel& c, std::size_t limit) {
  const std::size_t n = c.num_qubits();
  require_dense(n, limit);
  const std::size_t dim = std::size_t{1} << n;
  PulseGenerators out{DenseMatrix::Zero(dim, dim), DenseMatrix::Zero(dim, dim)};
  const double quarter = std::numbers::pi / 4.0;
  for (std::size_t q = 0; q < n; ++q) {
    const LocalPulse lp = local_pulse(c.perms()[q], c.signs().local(q));
    if (lp.first_sign != 0) {
      PauliIndex a(n);
      a.set(q, lp.first_axis);
      out.first += (quarter * lp.first_sign) * pauli_dense(a, limit);
    }
    if (lp.second_sign != 0) {
      PauliIndex a(n);
      a.set(q, lp.second_axis);
      out.second += (quarter * lp.second_sign) * pauli_dense(a, limit);
    }
  }
  return out;
}

DenseMatrix expm_hermitian(const DenseMatrix& h, double t) {
  Eigen::SelfAdjointEigenSolver<DenseMatrix> es(h);
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("Hermitian eigendecomposition failed");
  }
  const Eigen::VectorXd& w = es.eigenvalues();
  Eigen::VectorXcd phases(w.size());
  for (Eigen::Index k = 0; k < w.size(); ++k) phases(k) = std::exp(-kI * (t * w(k)));
  const DenseMatrix& v = es.eigenvectors();
  return v * phases.asDiagonal() * v.adjoint();
}

DenseMatrix pulse_unitary(const CliffordLabel& c, bool first_half, bool inverse, std::size_t limit) {
  require_dense(c.num_qubits(), limit);
  const double quarter = std::numbers::pi / 4.0;
  DenseMatrix out = DenseMatrix::Identity(1, 1);
  for (std::size_t q = 0; q < c.num_qubits(); ++q) {
    const LocalPulse lp = local_pulse(c.perms()[q], c.signs().local(q));
    const int sign = first_half ? lp.first_sign : lp.second_sign;
    const LocalPauli axis = first_half ? lp.first_axis : lp.second_axis;
    const double theta = (inverse ? -1.0 : 1.0) * quarter * sign;
    out = kron(out, local_rotation(theta, axis));
  }
  return out;
}

}  // namespace hamshape
