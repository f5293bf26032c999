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
#include <set>

#include <gtest/gtest.h>

#include "phantom/gf2.hpp"

namespace phantom {
namespace {

// Brute-force span of a list of rows, as packed words.
std::set<std::uint64_t> span_of(const std::vector<BitVector>& rows) {
  std::set<std::uint64_t> out{0};
  for (const auto& r : rows) {
    std::set<std::uint64_t> next = out;
    for (auto w : out) next.insert(w ^ r.packed());
    out = std::move(next);
  }
  return out;
}

Gf2Matrix random_matrix(std::mt19937_64& rng, int rows, int cols) {
  std::vector<BitVector> r;
  for (int i = 0; i < rows; ++i) r.emplace_back(cols, rng() & ((std::uint64_t{1} << cols) - 1));
  return Gf2Matrix(r, cols);
}

TEST(BitVectorTest, PositionOneIsMostSignificant) {
  const auto v = BitVector::from_string("10101010");
  EXPECT_EQ(v.packed(), 0xAAU);
  EXPECT_TRUE(v.get(1));
  EXPECT_FALSE(v.get(2));
  EXPECT_EQ(v.weight(), 4);
  EXPECT_EQ(v.to_string(), "10101010");
  EXPECT_EQ(v.complement().to_string(), "01010101");
  EXPECT_EQ(v.support(), (std::vector<int>{1, 3, 5, 7}));
}

TEST(BitVectorTest, RejectsBadInput) {
  EXPECT_THROW(BitVector::from_string("10a"), std::invalid_argument);
  EXPECT_THROW(BitVector::from_string("1") ^ BitVector::from_string("10"), std::invalid_argument);
}

TEST(RrefTest, Identity) {
  EXPECT_EQ(rref(Gf2Matrix::identity(3)), Gf2Matrix::identity(3));
}

TEST(RrefTest, RankOneCollapse) {
  EXPECT_EQ(rref(Gf2Matrix::from_strings({"11", "11"})), Gf2Matrix::from_strings({"11", "00"}));
}

TEST(RrefTest, RepetitionGenerator) {
  const auto rep = ClassicalCode::repetition(7);
  ASSERT_EQ(rep.dim(), 1);
  EXPECT_EQ(rep.generators()[0].to_string(), "1111111");
}

TEST(RrefTest, PreservesRowSpaceOnRandomMatrices) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto m = random_matrix(rng, 1 + static_cast<int>(rng() % 8), 1 + static_cast<int>(rng() % 12));
    const auto r = rref(m);
    EXPECT_EQ(span_of(m.row_list()), span_of(r.row_list()));
    EXPECT_EQ(rank(m), static_cast<int>(std::count_if(r.row_list().begin(), r.row_list().end(),
                                                      [](const BitVector& v) { return !v.is_zero(); })));
  }
}

TEST(InverseTest, RandomInvertibleMatrices) {
  std::mt19937_64 rng(11);
  int found = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const auto m = random_matrix(rng, 5, 5);
    const auto inv = inverse(m);
    EXPECT_EQ(inv.has_value(), rank(m) == 5);
    if (inv) {
      EXPECT_EQ(m * *inv, Gf2Matrix::identity(5));
      ++found;
    }
  }
  EXPECT_GT(found, 0);
}

TEST(DualCodeTest, RepetitionToEvenWeight) {
  const auto d = dual_code(ClassicalCode::repetition(7));
  EXPECT_EQ(d.dim(), 6);
  EXPECT_EQ(d, ClassicalCode::even_weight(7));
}

TEST(DualCodeTest, FullToZero) { EXPECT_EQ(dual_code(ClassicalCode::full(7)), ClassicalCode::zero(7)); }

TEST(DualCodeTest, MatchesBruteForceOrthogonalComplement) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const ClassicalCode c(n, random_matrix(rng, static_cast<int>(rng() % 5), n).row_list());
    std::set<std::uint64_t> expected;
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
      const BitVector bv(n, v);
      bool orth = true;
      for (const auto& g : c.generators()) orth &= !bv.dot(g);
      if (orth) expected.insert(v);
    }
    EXPECT_EQ(span_of(dual_code(c).generators()), expected);
    EXPECT_EQ(dual_code(dual_code(c)), c);
  }
}

TEST(MinWeightTest, Repetition) { EXPECT_EQ(min_weight(ClassicalCode::repetition(7)), 7); }

TEST(MinWeightTest, HammingByExhaustiveSweep) {
  // [7,4,3] Hamming code: columns of the parity check are 1..7 in binary.
  const ClassicalCode ham = dual_code(ClassicalCode(7, {BitVector::from_string("0001111"), BitVector::from_string("0110011"),
                                                        BitVector::from_string("1010101")}));
  ASSERT_EQ(ham.dim(), 4);
  int best = 99;
  for (auto w : span_of(ham.generators()))
    if (w) best = std::min(best, std::popcount(w));
  EXPECT_EQ(best, 3);
  EXPECT_EQ(min_weight(ham), 3);
}

TEST(MinWeightTest, ExclusionFindsWeightOneOutsideHamming) {
  const ClassicalCode ham = dual_code(ClassicalCode(7, {BitVector::from_string("0001111"), BitVector::from_string("0110011"),
                                                        BitVector::from_string("1010101")}));
  const auto full = ClassicalCode::full(7);
  EXPECT_EQ(min_weight(full, &ham), 1);
  EXPECT_EQ(min_weight_by_support(full, 3, &ham), 1);
}

TEST(MinWeightTest, SupportSearchAgreesWithEnumeration) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 7);
    const ClassicalCode c(n, random_matrix(rng, 1 + static_cast<int>(rng() % 4), n).row_list());
    if (c.dim() == 0) continue;
    EXPECT_EQ(min_weight_by_support(c, n), min_weight(c));
  }
}

TEST(ClassicalCodeTest, CanonicalFormIsBasisIndependent) {
  const ClassicalCode a(4, {BitVector::from_string("1100"), BitVector::from_string("0110")});
  const ClassicalCode b(4, {BitVector::from_string("1010"), BitVector::from_string("0110"), BitVector::from_string("1100")});
  EXPECT_EQ(a, b);
  EXPECT_TRUE(a.contains(BitVector::from_string("1010")));
  EXPECT_FALSE(a.contains(BitVector::from_string("1000")));
}

}  // namespace
}  // namespace phantom
