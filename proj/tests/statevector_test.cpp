// Copyright 2026 The Phantom Codes Authors
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

#include <random>

#include <Eigen/Dense>
#include <gtest/gtest.h>

#include "phantom/statevector.hpp"

namespace phantom::sv {
namespace {

StateVector random_state(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> g;
  StateVector s(n);
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = Complex(g(rng), g(rng));
  return normalized(s);
}

StateVector basis(std::string_view bits) { return StateVector::basis(BitVector::from_string(bits)); }

// J^2 from Kronecker products of Pauli matrices.
Eigen::MatrixXcd casimir_by_kronecker(int n) {
  Eigen::Matrix2cd px, py, pz;
  px << 0, 1, 1, 0;
  py << 0, Complex(0, -1), Complex(0, 1), 0;
  pz << 1, 0, 0, -1;
  const auto d = Eigen::Index{1} << n;
  Eigen::MatrixXcd total = Eigen::MatrixXcd::Zero(d, d);
  for (const Eigen::Matrix2cd* p : {&px, &py, &pz}) {
    Eigen::MatrixXcd j = Eigen::MatrixXcd::Zero(d, d);
    for (int q = 0; q < n; ++q) {
      Eigen::MatrixXcd term = Eigen::MatrixXcd::Identity(1, 1);
      for (int r = 0; r < n; ++r) {
        const Eigen::MatrixXcd f = r == q ? Eigen::MatrixXcd(*p) : Eigen::MatrixXcd::Identity(2, 2);
        Eigen::MatrixXcd next(term.rows() * 2, term.cols() * 2);
        for (Eigen::Index a = 0; a < term.rows(); ++a)
          for (Eigen::Index b = 0; b < term.cols(); ++b) next.block(a * 2, b * 2, 2, 2) = term(a, b) * f;
        term = next;
      }
      j += 0.5 * term;
    }
    total += j * j;
  }
  return total;
}

TEST(PermutationTest, IdentityIsNoOp) {
  std::mt19937_64 rng(1);
  const auto s = random_state(rng, 5);
  EXPECT_EQ(max_abs_diff(apply_permutation(s, Permutation::identity(5)), s), 0.0);
}

TEST(PermutationTest, PhiG12OnReference) {
  const auto out = apply_permutation(basis("10101010"), Permutation::from_cycles("(1 2)(3 4)(5 6)(7 8)", 8));
  EXPECT_EQ(max_abs_diff(out, basis("01010101")), 0.0);
}

TEST(PermutationTest, NormPreserved) {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 20; ++t) {
    std::vector<int> img{1, 2, 3, 4, 5, 6};
    std::shuffle(img.begin(), img.end(), rng);
    EXPECT_NEAR(norm(apply_permutation(random_state(rng, 6), Permutation(img))), 1.0, 1e-12);
  }
}

TEST(PermutationTest, Representation) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    std::vector<int> a{1, 2, 3, 4, 5}, b{1, 2, 3, 4, 5};
    std::shuffle(a.begin(), a.end(), rng);
    std::shuffle(b.begin(), b.end(), rng);
    const Permutation pa(a), pb(b);
    const auto s = random_state(rng, 5);
    EXPECT_LT(max_abs_diff(apply_permutation(s, pa * pb), apply_permutation(apply_permutation(s, pb), pa)), 1e-15);
  }
}

TEST(PauliTest, Z1Z2OnReference) {
  const auto out = apply_pauli(basis("10101010"), css::PauliLabel::from_string("ZZIIIIII"));
  EXPECT_EQ(max_abs_diff(out, -1.0 * basis("10101010")), 0.0);
}

TEST(PauliTest, AllXFlipsZero) {
  const auto out = apply_pauli(basis("00000000"), css::PauliLabel::from_string("XXXXXXXX"));
  EXPECT_EQ(max_abs_diff(out, basis("11111111")), 0.0);
}

TEST(PauliTest, WeightOneXLeavesWeightFourSector) {
  StateVector line = basis("10101010") + basis("01010101");
  const auto out = apply_pauli(line, css::PauliLabel::from_string("IIXIIIII"));
  for (std::size_t s = 0; s < out.size(); ++s)
    if (std::abs(out[s]) > 0) {
      EXPECT_NE(std::popcount(s), 4);
    }
}

TEST(KnillLaflammeTest, IdentityIsOne) {
  const auto q = css_codewords(css::hypercube_code(3));
  const auto rep = knill_laflamme_check(q, 0);
  ASSERT_EQ(rep.entries.size(), 1U);
  EXPECT_NEAR(std::abs(rep.entries[0].scalar - 1.0), 0.0, 1e-12);
}

TEST(KnillLaflammeTest, HypercubeDistanceAgreesWithSymplectic) {
  const auto code = css::hypercube_code(3);
  EXPECT_EQ(knill_laflamme_check(css_codewords(code), 2).distance, css::css_distance(code).d);
}

TEST(CasimirTest, TopState) {
  const auto out = collective_casimir_apply(basis("11111111"));
  EXPECT_LT(max_abs_diff(out, 20.0 * basis("11111111")), 1e-12);
}

TEST(CasimirTest, Singlet) {
  const auto singlet = normalized(basis("01") - basis("10"));
  EXPECT_LT(norm(collective_casimir_apply(singlet)), 1e-12);
}

TEST(CasimirTest, MatchesKroneckerConstruction) {
  for (int n = 1; n <= 5; ++n)
    EXPECT_LT((dense_operator(n, collective_casimir_apply) - casimir_by_kronecker(n)).cwiseAbs().maxCoeff(), 1e-12) << n;
}

TEST(CssCodewordsTest, HypercubeZero) {
  const auto q = css_codewords(css::hypercube_code(3));
  const auto expected = normalized(basis("0000000") + basis("1111111"));
  EXPECT_LT(max_abs_diff(q[0], expected), 1e-12);
}

TEST(CssCodewordsTest, StabiliserEigenstates) {
  const auto code = css::hypercube_code(3);
  const auto q = css_codewords(code);
  EXPECT_LT((q.gram() - Eigen::MatrixXcd::Identity(8, 8)).cwiseAbs().maxCoeff(), 1e-12);
  for (const auto& psi : q.basis()) {
    for (const auto& x : code.x_stabilizers().generators())
      EXPECT_LT(max_abs_diff(apply_pauli(psi, {x, BitVector(7)}), psi), 1e-12);
    for (const auto& z : code.z_stabilizers().generators())
      EXPECT_LT(max_abs_diff(apply_pauli(psi, {BitVector(7), z}), psi), 1e-12);
  }
}

TEST(CssCodewordsTest, LogicalZActsDiagonally) {
  const auto code = css::hypercube_code(3);
  const auto q = css_codewords(code);
  for (int i = 0; i < 3; ++i) {
    const auto m = q.logical_matrix([&](const StateVector& s) { return apply_pauli(s, {BitVector(7), code.logical_z()[i]}); });
    for (Eigen::Index x = 0; x < 8; ++x) {
      const double sign = ((x >> (2 - i)) & 1) ? -1.0 : 1.0;
      EXPECT_NEAR(m(x, x).real(), sign, 1e-12);
    }
  }
}

TEST(CssCodewordsTest, RejectsLargeCodes) {
  EXPECT_THROW(css_codewords(css::hypercube_code(4)), std::length_error);
}

}  // namespace
}  // namespace phantom::sv
