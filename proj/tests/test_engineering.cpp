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

#include <catch_amalgamated.hpp>

#include <set>

#include "hamshape/dense.hpp"
#include "hamshape/engineering.hpp"
#include "hamshape/models.hpp"
#include "oracles.hpp"

using namespace hamshape;

namespace {

PauliIndex P(const char* s) { return PauliIndex::from_string(s); }

std::vector<PauliIndex> non_identity(std::size_t n) {
  auto all = all_pauli_labels(n);
  all.erase(all.begin());
  return all;
}

}  // namespace

TEST_CASE("Pauli matrix on one qubit", "[engineering]") {
  const auto w = build_pauli_matrix({P("X"), P("Y"), P("Z")}, all_pauli_labels(1));
  REQUIRE(w.entries.rows() == 3);
  REQUIRE(w.entries.cols() == 4);
  // Symplectic forms by hand; column order I, Z, X, Y from the ordinal encoding.
  const auto& cols = w.cols;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    const char b = cols[j].signs().to_string()[0];
    for (std::size_t i = 0; i < 3; ++i) {
      const char a = "XYZ"[i];
      const bool commute = b == 'I' || a == b;
      CHECK(w.entries(i, j) == (commute ? 1.0 : -1.0));
    }
  }
  CHECK(w.entries.rowwise().sum().cwiseAbs().maxCoeff() == 0.0);
  CHECK(build_pauli_matrix({P("X")}, {P("I"), P("X")}).entries == Eigen::RowVector2d(1, 1));
  CHECK(build_pauli_matrix({P("X")}, {P("Z")}).entries(0, 0) == -1.0);
  CHECK_THROWS_AS(build_pauli_matrix({P("I")}, {P("Z")}), std::invalid_argument);
  CHECK_THROWS_AS(build_pauli_matrix({P("X")}, {P("ZZ")}), std::invalid_argument);
}

TEST_CASE("full Pauli matrix rows sum to zero and are orthogonal", "[engineering][property]") {
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto w = build_pauli_matrix(non_identity(n), all_pauli_labels(n));
    CHECK(w.entries.rowwise().sum().cwiseAbs().maxCoeff() == 0.0);
    const Eigen::MatrixXd gram = w.entries * w.entries.transpose();
    const double full = static_cast<double>(w.entries.cols());
    CHECK((gram - full * Eigen::MatrixXd::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("sign complement for odd-weight rows", "[engineering][property]") {
  for (std::size_t n = 2; n <= 3; ++n) {
    const auto labels = all_pauli_labels(n);
    for (const auto& a : non_identity(n)) {
      if (a.bit_weight() % 2 == 0) continue;
      for (const auto& b : labels) {
        const auto w = build_pauli_matrix({a}, {b, b.complement()});
        CHECK(w.entries(0, 0) == -w.entries(0, 1));
      }
    }
  }
  CHECK(all_rows_odd_weight({P("XI"), P("YI")}) == false);
  CHECK(all_rows_odd_weight({P("XI"), P("YZ")}) == true);
}

TEST_CASE("Clifford matrix examples", "[engineering]") {
  SparseHamiltonian j(1);
  j.set(P("Z"), 1.0);
  auto w = build_clifford_matrix(j, {P("X")}, {CliffordLabel::from_tokens({"Sy'Sx'"}), CliffordLabel::identity(1)});
  CHECK(w.entries(0, 0) == 1.0);
  CHECK(w.entries(0, 1) == 0.0);
  SparseHamiltonian half(1);
  half.set(P("Z"), 0.5);
  w = build_clifford_matrix(half, {P("Z")}, {CliffordLabel::pauli(P("X"))});
  CHECK(w.entries(0, 0) == -0.5);
  SparseHamiltonian zz(2);
  zz.set(P("ZZ"), 1.0);
  CHECK_THROWS_AS(build_clifford_matrix(zz, {P("XI")}, {CliffordLabel::identity(2)}), UnreachableTarget);
}

TEST_CASE("Clifford columns equal dense conjugations", "[engineering][dense][property]") {
  Rng rng(21);
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto j = random_two_local(n, 0.4, rng);
    const auto rows = support_sets(j).suppnz;
    const auto cols = n <= 2 ? all_clifford_labels(n) : std::vector<CliffordLabel>{};
    std::vector<CliffordLabel> labels = cols;
    if (n == 3) {
      for (int k = 0; k < 60; ++k) {
        std::vector<std::uint8_t> perms(n);
        PauliIndex signs(n);
        for (std::size_t q = 0; q < n; ++q) {
          perms[q] = static_cast<std::uint8_t>(rng.below(3));
          signs.set(q, static_cast<LocalPauli>(rng.below(4)));
        }
        labels.emplace_back(perms, signs);
      }
    }
    const auto w = build_clifford_matrix(j, rows, labels);
    oracle::Mat hs = oracle::Mat::Zero(std::size_t{1} << n, std::size_t{1} << n);
    for (const auto& [a, v] : j.terms()) hs += v * oracle::pauli(a.to_string());
    for (std::size_t c = 0; c < labels.size(); ++c) {
      oracle::Mat u = oracle::Mat::Identity(1, 1);
      for (const auto& tok : labels[c].tokens()) u = oracle::kron(u, oracle::clifford_gate(tok));
      const oracle::Mat conj = u.adjoint() * hs * u;
      oracle::Mat from_column = oracle::Mat::Zero(hs.rows(), hs.cols());
      for (std::size_t i = 0; i < rows.size(); ++i) from_column += w.entries(i, c) * oracle::pauli(rows[i].to_string());
      CHECK(oracle::max_abs(conj - from_column) < 1e-12);
      const auto sparse = conjugate(j, labels[c]);
      CHECK((coefficients_on(sparse, rows) - w.entries.col(c)).cwiseAbs().maxCoeff() == 0.0);
    }
  }
}

TEST_CASE("identity column reproduces J", "[engineering]") {
  Rng rng(4);
  const auto j = random_two_local(3, 0.3, rng);
  const auto rows = support_sets(j).suppnz;
  const auto w = build_clifford_matrix(j, rows, {CliffordLabel::identity(3)});
  CHECK((w.entries.col(0) - coefficients_on(j, rows)).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("Pauli targets", "[engineering]") {
  SparseHamiltonian j(2), a(2);
  j.set(P("ZZ"), 2.0);
  a.set(P("ZZ"), -1.0);
  auto t = pauli_target(a, j, pauli_rows(j));
  CHECK(t.values(0) == -0.5);
  t = pauli_target(j, j, pauli_rows(j));
  CHECK(t.values(0) == 1.0);
  SparseHamiltonian bad(2);
  bad.set(P("XX"), 1.0);
  try {
    pauli_target(bad, j, pauli_rows(j));
    FAIL("expected UnreachableTarget");
  } catch (const UnreachableTarget& e) {
    CHECK(e.offending() == std::vector<PauliIndex>{P("XX")});
  }
}

TEST_CASE("direct M targets", "[engineering]") {
  const std::vector<PauliIndex> rows{P("XX"), P("ZZ")};
  auto t = direct_m_target({{P("XX"), 0.0}}, rows);
  CHECK(t.values(0) == 0.0);
  CHECK(t.values(1) == 1.0);
  t = direct_m_target({{P("ZZ"), -1.0}}, rows);
  CHECK(t.values(1) == -1.0);
  CHECK(direct_m_target({}, rows).values == Eigen::Vector2d(1, 1));
  CHECK_THROWS_AS(direct_m_target({{P("YY"), 1.0}}, rows), std::invalid_argument);
}

TEST_CASE("Clifford targets", "[engineering]") {
  SparseHamiltonian j(2), a(2);
  j.set(P("ZZ"), 1.0);
  a.set(P("XX"), 0.4);
  auto t = clifford_target(a, j);
  CHECK(t.rows.size() == 9);
  for (std::size_t i = 0; i < t.rows.size(); ++i) CHECK(t.values(i) == (t.rows[i] == P("XX") ? 0.4 : 0.0));
  CHECK(clifford_target(SparseHamiltonian(2), j).values.isZero());
  SparseHamiltonian j3(3), a3(3);
  j3.set(P("ZZI"), 1.0);
  j3.set(P("IZZ"), 1.0);
  a3.set(P("XXX"), 1.0);
  CHECK_THROWS_AS(clifford_target(a3, j3), UnreachableTarget);
}

TEST_CASE("label enumeration", "[engineering]") {
  CHECK(all_pauli_labels(2).size() == 16);
  CHECK(all_clifford_labels(2).size() == 144);
  const auto labels = all_clifford_labels(1);
  CHECK(std::set<CliffordLabel>(labels.begin(), labels.end()).size() == 12);
  CHECK_FALSE(build_pauli_matrix({P("X")}, all_pauli_labels(1)).to_table().empty());
}
