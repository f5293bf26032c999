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

#include <gtest/gtest.h>

#include "phantom/gl.hpp"

namespace phantom::gl {
namespace {

GlElement random_gl(std::mt19937_64& rng, int k) {
  for (;;) {
    std::vector<BitVector> rows;
    for (int i = 0; i < k; ++i) rows.emplace_back(k, rng() & ((1U << k) - 1));
    Gf2Matrix m(rows, k);
    if (rank(m) == k) return GlElement(m);
  }
}

TEST(TransvectionTest, G12MatchesPrintedMatrix) {
  EXPECT_EQ(transvection(1, 2, 4).matrix(), Gf2Matrix::from_strings({"1100", "0100", "0010", "0001"}));
}

TEST(TransvectionTest, SquaresToIdentity) {
  const auto g = transvection(1, 2, 2);
  EXPECT_TRUE((g * g).is_identity());
}

TEST(TransvectionTest, Commutator) {
  EXPECT_EQ(commutator(transvection(1, 2, 4), transvection(2, 3, 4)), transvection(1, 3, 4));
}

TEST(TransvectionTest, RejectsBadIndices) {
  EXPECT_THROW(transvection(1, 1, 3), std::out_of_range);
  EXPECT_THROW(transvection(1, 4, 3), std::out_of_range);
}

TEST(GlOrderTest, Values) {
  EXPECT_EQ(gl_order(4), 20160U);
  EXPECT_EQ(gl_order(1), 1U);
  EXPECT_EQ(gl_order(3), 7U * 6U * 4U);
}

TEST(GlOrderTest, MatchesEnumeration) {
  for (int k = 2; k <= 4; ++k) EXPECT_EQ(enumerate_gl(k).order(), gl_order(k));
}

TEST(PhiTest, GeneratorImage) {
  EXPECT_EQ(phi(transvection(1, 2, 4)).to_cycle_string(), "(1 2)(3 4)(5 6)(7 8)");
}

TEST(PhiTest, Identity) { EXPECT_TRUE(phi(GlElement::identity(4)).is_identity()); }

TEST(PhiTest, NonAdjacentFromCommutator) {
  EXPECT_EQ(phi(transvection(1, 3, 4)), Permutation::from_cycles("(1 3)(2 4)(5 7)(6 8)", 8));
}

TEST(PhiTest, PresentationHoldsForImages) {
  EXPECT_TRUE(presentation_violations(4, phi_transvection_images(), Permutation::identity(8)).empty());
}

TEST(PhiTest, PresentationHoldsForMatrices) {
  for (int k = 2; k <= 5; ++k) {
    std::map<Letter, GlElement> e;
    for (const auto& l : all_letters(k)) e.emplace(l, transvection(l, k));
    EXPECT_TRUE(presentation_violations(k, e, GlElement::identity(k)).empty()) << k;
  }
}

TEST(PhiTest, IsAHomomorphismIntoA8) {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 100; ++t) {
    const auto a = random_gl(rng, 4);
    const auto b = random_gl(rng, 4);
    EXPECT_EQ(phi(a * b), phi(a) * phi(b));
    EXPECT_TRUE(phi(a).is_even());
  }
}

TEST(PhiTest, DualityConjugation) {
  // tau phi(g) tau^-1 = phi(g^-T)
  const auto& tau = duality_permutation();
  std::mt19937_64 rng(17);
  for (int t = 0; t < 50; ++t) {
    const auto g = random_gl(rng, 4);
    EXPECT_EQ(tau * phi(g) * tau.inverse(), phi(dual_element(g)));
  }
  EXPECT_FALSE(tau.is_even());
}

TEST(PhiTest, WordsMultiplyLeftToRight) {
  const auto w = parse_word("23 32");
  EXPECT_EQ(evaluate(w, 4), transvection(2, 3, 4) * transvection(3, 2, 4));
  EXPECT_EQ(Phi::instance()(w), phi(evaluate(w, 4)));
}

TEST(DualElementTest, Examples) {
  EXPECT_TRUE(dual_element(GlElement::identity(3)).is_identity());
  EXPECT_EQ(dual_element(transvection(1, 2, 4)), transvection(2, 1, 4));
}

TEST(DualElementTest, Involution) {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 100; ++t) {
    const auto g = random_gl(rng, 4);
    EXPECT_EQ(dual_element(dual_element(g)), g);
  }
}

TEST(CnotTest, IdentityK2) {
  EXPECT_EQ(cnot_circuit_unitary(GlElement::identity(2)), (std::vector<std::size_t>{0, 1, 2, 3}));
}

TEST(CnotTest, ControlOneTargetTwo) {
  // Brute force x -> (1 + E21) x with x1 the high bit of the index.
  const auto g = transvection(2, 1, 2);
  std::vector<std::size_t> expected(4);
  for (std::size_t x = 0; x < 4; ++x) {
    const std::size_t x1 = x >> 1, x2 = x & 1;
    expected[x] = (x1 << 1) | (x2 ^ x1);
  }
  EXPECT_EQ(cnot_circuit_unitary(g), expected);
  EXPECT_EQ(expected, (std::vector<std::size_t>{0, 1, 3, 2}));
}

TEST(CnotTest, Homomorphism) {
  const auto a = transvection(1, 2, 3), b = transvection(2, 3, 3);
  const auto ua = cnot_circuit_unitary(a), ub = cnot_circuit_unitary(b), uab = cnot_circuit_unitary(a * b);
  for (std::size_t x = 0; x < 8; ++x) EXPECT_EQ(ua[ub[x]], uab[x]);
}

TEST(PointPermutationTest, RoundTrip) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 50; ++t) {
    const auto g = random_gl(rng, 4);
    EXPECT_EQ(from_point_permutation(point_permutation(g), 4), g);
  }
}

TEST(GlElementTest, RejectsSingular) {
  EXPECT_THROW(GlElement(Gf2Matrix::from_strings({"11", "11"})), std::invalid_argument);
}

}  // namespace
}  // namespace phantom::gl
