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

#include <set>

#include <gtest/gtest.h>

#include "phantom/pg32.hpp"

namespace phantom::pg32 {
namespace {

Subspace points_of(std::initializer_list<std::string_view> s) {
  Subspace out;
  for (auto p : s) out.push_back(point(p));
  return normalize(out);
}

TEST(GeometryTest, LineCount) { EXPECT_EQ(all_lines().size(), 35U); }

TEST(GeometryTest, ReferenceLine) {
  EXPECT_EQ(line_through(point("1000"), point("0100")), points_of({"1000", "0100", "1100"}));
}

TEST(GeometryTest, IncidenceRegularity) {
  const auto lines = all_lines();
  const auto planes = all_planes();
  ASSERT_EQ(planes.size(), 15U);
  for (const auto& l : lines) {
    EXPECT_EQ(l.size(), 3U);
    int containing = 0;
    for (const auto& p : planes) containing += contains_all(p, l);
    EXPECT_EQ(containing, 3);
  }
  for (const auto& x : all_points()) {
    int through = 0;
    for (const auto& l : lines) through += std::binary_search(l.begin(), l.end(), x);
    EXPECT_EQ(through, 7);
  }
  for (const auto& p : planes) {
    EXPECT_EQ(p.size(), 7U);
    int inside = 0;
    for (const auto& l : lines) inside += contains_all(p, l);
    EXPECT_EQ(inside, 7);
  }
}

TEST(DualTest, PlaneOfPoint1010MatchesTable) {
  const auto plane = dual_subspace({point("1010")});
  const auto row = std::find_if(kPointTable.begin(), kPointTable.end(), [](const PointRow& r) { return r.point == "1010"; });
  ASSERT_NE(row, kPointTable.end());
  Subspace listed;
  for (auto p : row->plane_points) listed.push_back(point(p));
  EXPECT_EQ(plane, normalize(listed));
  for (const auto& x : plane) EXPECT_FALSE(x.dot(point("1010")));
}

TEST(DualTest, InvolutionOnAllSubspaces) {
  std::vector<Subspace> all;
  for (const auto& p : all_points()) all.push_back({p});
  for (const auto& l : all_lines()) all.push_back(l);
  for (const auto& p : all_planes()) all.push_back(p);
  ASSERT_EQ(all.size(), 65U);
  for (const auto& s : all) EXPECT_EQ(dual_subspace(dual_subspace(s)), s);
}

TEST(DualTest, LineOneIsDualToLineTwenty) {
  const auto& t = line_table();
  EXPECT_EQ(t.id_of(dual_subspace(t.entry(1).points)), 20);
}

TEST(RepresentativeTest, PrintedRows) {
  EXPECT_EQ(line_representative(1).to_string(), "10101010");
  EXPECT_EQ(line_representative(4).to_string(), "11110000");
  EXPECT_EQ(line_representative(35).to_string(), "00101011");
}

TEST(BipartitionTest, ReferenceClass) { EXPECT_EQ(bipartition_of_line(1).to_string(), "10101010"); }

TEST(BipartitionTest, BijectiveOntoBalancedPairs) {
  std::set<std::uint64_t> seen;
  for (const auto& l : all_lines()) {
    const auto w = bipartition_of_line(l);
    EXPECT_EQ(w.weight(), 4);
    EXPECT_TRUE(w.get(1));
    seen.insert(w.packed());
  }
  EXPECT_EQ(seen.size(), 35U);
}

TEST(BipartitionTest, Equivariance) {
  for (const auto& letter : gl::adjacent_letters(4)) {
    const auto g = gl::transvection(letter, 4);
    const auto s = gl::phi(g);
    for (const auto& l : all_lines())
      EXPECT_EQ(bipartition_of_line(image(g, l)), canonical_bipartition(act_on_bitvector(s, bipartition_of_line(l))));
  }
}

TEST(BipartitionTest, TableWordsMapReferenceLineToRow) {
  for (const auto& e : line_table().entries())
    EXPECT_EQ(image(gl::evaluate(e.word, 4), reference_line()), e.points) << "row " << e.id;
}

TEST(StabiliserTest, ReferenceLineInGl4) {
  const auto& gl4 = gl::Phi::instance().gl4();
  std::vector<gl::GlElement> gens;
  for (const auto& l : gl::adjacent_letters(4)) gens.push_back(gl::transvection(l, 4));
  const auto r = orbit_and_stabilizer(gl4.order(), gens, reference_line(),
                                      [](const gl::GlElement& g, const Subspace& s) { return image(g, s); });
  EXPECT_EQ(r.orbit.size(), 35U);
  EXPECT_EQ(r.stabilizer_order, 576U);
}

TEST(VerifyTablesTest, FixtureHasNoMismatches) {
  const auto rep = verify_tables();
  EXPECT_TRUE(rep.ok());
  for (const auto& m : rep.mismatches) ADD_FAILURE() << m.table << " row " << m.row << " " << m.field;
}

TEST(VerifyTablesTest, AlteredRowTwentyIsReported) {
  // The complement lies in the same bipartition class, so only b itself changes.
  auto lines = kLineTable;
  static const std::string flipped = BitVector::from_string(lines[19].representative).complement().to_string();
  lines[19].representative = flipped;
  const auto rep = verify_tables(lines);
  ASSERT_EQ(rep.mismatches.size(), 1U);
  EXPECT_EQ(rep.mismatches[0].row, 20);
}

TEST(VerifyTablesTest, DualityConsistency) { EXPECT_TRUE(duality_violations().empty()); }

TEST(IsotropyTest, SevenIsotropicPoints) {
  int n = 0;
  for (const auto& x : all_points()) n += is_isotropic(x);
  EXPECT_EQ(n, 7);
  EXPECT_TRUE(is_isotropic(point("1100")));
  EXPECT_FALSE(is_isotropic(point("1000")));
}

}  // namespace
}  // namespace phantom::pg32
