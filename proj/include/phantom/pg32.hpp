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

/// \file pg32.hpp
/// \brief PG(3,2): points, lines, planes, duality, and the bijection between
/// lines and 4|4 bipartitions of eight letters.
///
/// A projective subspace is stored as the sorted list of its nonzero vectors.
/// Line ids come from the transcribed table in pg32_fixture.hpp.

#ifndef PHANTOM_PG32_HPP
#define PHANTOM_PG32_HPP

#include <algorithm>
#include <map>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "gf2.hpp"
#include "gl.hpp"
#include "perm.hpp"
#include "pg32_fixture.hpp"

namespace phantom::pg32 {

inline constexpr int kDim = 4;
inline constexpr int kNumPoints = 15;
inline constexpr int kNumLines = 35;

using Point = BitVector;
/// Sorted nonzero vectors of a projective subspace.
using Subspace = std::vector<Point>;

inline Point point(std::string_view s) {
  Point p = BitVector::from_string(s);
  if (p.length() != kDim || p.is_zero()) throw std::invalid_argument("not a point of PG(3,2): " + std::string(s));
  return p;
}

/// The 15 points in numeral order 0001, 0010, ..., 1111.
inline std::vector<Point> all_points() {
  std::vector<Point> pts;
  for (std::uint64_t v = 1; v < (1U << kDim); ++v) pts.emplace_back(kDim, v);
  return pts;
}

inline Subspace normalize(Subspace s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

inline Subspace line_through(const Point& u, const Point& v) {
  if (u == v || u.is_zero() || v.is_zero()) throw std::invalid_argument("line_through needs two distinct points");
  return normalize({u, v, u ^ v});
}

/// Every line, from all unordered pairs of distinct points, deduplicated.
inline std::vector<Subspace> all_lines() {
  std::set<Subspace> lines;
  const auto pts = all_points();
  for (std::size_t a = 0; a < pts.size(); ++a)
    for (std::size_t b = a + 1; b < pts.size(); ++b) lines.insert(line_through(pts[a], pts[b]));
  return {lines.begin(), lines.end()};
}

/// {x : <x, y> = 0 for all y in s}, without the zero vector.
inline Subspace dual_subspace(const Subspace& s) {
  Subspace out;
  for (const auto& x : all_points())
    if (std::none_of(s.begin(), s.end(), [&x](const Point& y) { return x.dot(y); })) out.push_back(x);
  return out;
}

inline std::vector<Subspace> all_planes() {
  std::vector<Subspace> planes;
  for (const auto& p : all_points()) planes.push_back(dual_subspace({p}));
  return planes;
}

inline bool contains_all(const Subspace& big, const Subspace& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

inline Subspace image(const gl::GlElement& g, const Subspace& s) {
  Subspace out;
  for (const auto& p : s) out.push_back(g.apply(p));
  return normalize(std::move(out));
}

/// x lies in x^perp.
inline bool is_isotropic(const Point& x) { return !x.dot(x); }

/// Reference line <e1, e2> and its string 10101010.
inline Subspace reference_line() { return line_through(point("1000"), point("0100")); }
inline BitVector reference_string() { return BitVector::from_string("10101010"); }

/// The member of {b, complement(b)} with bit 1 set.
inline BitVector canonical_bipartition(const BitVector& b) { return b.get(1) ? b : b.complement(); }

/// Lines indexed by the ids of the transcribed table.
class LineTable {
public:
  struct Entry {
    int id = 0;
    Subspace points;
    BitVector representative;
    gl::TransvectionWord word;
    int dual = 0;
  };

  explicit LineTable(std::span<const LineRow> rows = kLineTable) {
    for (const auto& r : rows) {
      Entry e;
      e.id = r.id;
      e.points = normalize({point(r.points[0]), point(r.points[1]), point(r.points[2])});
      e.representative = BitVector::from_string(r.representative);
      e.word = gl::parse_word(r.word);
      e.dual = r.dual;
      by_points_[e.points] = e.id;
      entries_.push_back(std::move(e));
    }
  }

  const std::vector<Entry>& entries() const { return entries_; }
  const Entry& entry(int id) const {
    for (const auto& e : entries_)
      if (e.id == id) return e;
    throw std::out_of_range("no line with id " + std::to_string(id));
  }

  /// Id of the line with these points, or 0.
  int id_of(const Subspace& line) const {
    auto it = by_points_.find(normalize(line));
    return it == by_points_.end() ? 0 : it->second;
  }

private:
  std::vector<Entry> entries_;
  std::map<Subspace, int> by_points_;
};

inline const LineTable& line_table() {
  static const LineTable t;
  return t;
}

/// b(l) = phi(g_l) . 10101010, with g_l the stored word multiplied left to
/// right and phi applied letter by letter.
inline BitVector line_representative(const gl::TransvectionWord& word) {
  return act_on_bitvector(gl::Phi::instance()(word), reference_string());
}

inline BitVector line_representative(int id) { return line_representative(line_table().entry(id).word); }

/// w(l) = {b(l), complement b(l)}, as its canonical member.
inline BitVector bipartition_of_line(int id) { return canonical_bipartition(line_representative(id)); }

/// w(l) for a line given by its points.
inline BitVector bipartition_of_line(const Subspace& line) {
  const int id = line_table().id_of(line);
  if (id == 0) throw std::invalid_argument("not a line of PG(3,2)");
  return bipartition_of_line(id);
}

struct Mismatch {
  std::string table;
  int row = 0;
  std::string field;
  std::string expected;
  std::string actual;
};

struct TableReport {
  std::vector<Mismatch> mismatches;
  bool ok() const { return mismatches.empty(); }
};

inline std::string join(const Subspace& s) {
  std::string out;
  for (const auto& p : s) out += (out.empty() ? "" : " ") + p.to_string();
  return out;
}

inline std::string join(const std::vector<int>& v) {
  std::string out;
  for (int x : v) out += (out.empty() ? "" : " ") + std::to_string(x);
  return out;
}

/// Recomputes every column of both tables from the geometry and phi and
/// lists each disagreement with its row id.
inline TableReport verify_tables(std::span<const LineRow> lines = kLineTable,
                                 std::span<const PointRow> points = kPointTable) {
  TableReport rep;
  auto miss = [&rep](std::string t, int row, std::string f, std::string e, std::string a) {
    rep.mismatches.push_back({std::move(t), row, std::move(f), std::move(e), std::move(a)});
  };
  const LineTable table(lines);
  const Subspace l0 = reference_line();
  const auto derived_lines = all_lines();
  const std::set<Subspace> line_set(derived_lines.begin(), derived_lines.end());

  if (static_cast<int>(lines.size()) != kNumLines)
    miss("lines", 0, "row count", std::to_string(kNumLines), std::to_string(lines.size()));

  std::set<BitVector> classes;
  for (const auto& e : table.entries()) {
    if (!line_set.contains(e.points)) miss("lines", e.id, "points", "a line", join(e.points));
    const Subspace img = image(gl::evaluate(e.word, kDim), l0);
    if (img != e.points) miss("lines", e.id, "word image", join(e.points), join(img));
    const BitVector b = line_representative(e.word);
    if (b != e.representative) miss("lines", e.id, "b", e.representative.to_string(), b.to_string());
    if (e.representative.weight() != 4) miss("lines", e.id, "b weight", "4", std::to_string(e.representative.weight()));
    classes.insert(canonical_bipartition(e.representative));
    const int dual_id = table.id_of(dual_subspace(e.points));
    if (dual_id != e.dual) miss("lines", e.id, "dual", std::to_string(e.dual), std::to_string(dual_id));
  }
  if (static_cast<int>(classes.size()) != kNumLines)
    miss("lines", 0, "distinct bipartitions", std::to_string(kNumLines), std::to_string(classes.size()));

  for (const auto& r : points) {
    const Point x = point(r.point);
    const int row = static_cast<int>(x.packed());
    std::vector<int> through;
    for (const auto& e : table.entries())
      if (std::binary_search(e.points.begin(), e.points.end(), x)) through.push_back(e.id);
    std::vector<int> listed(r.lines_through.begin(), r.lines_through.end());
    std::sort(listed.begin(), listed.end());
    if (through != listed) miss("points", row, "lines through", join(listed), join(through));

    const Subspace plane = dual_subspace({x});
    Subspace listed_plane;
    for (auto s : r.plane_points) listed_plane.push_back(point(s));
    listed_plane = normalize(listed_plane);
    if (plane != listed_plane) miss("points", row, "plane points", join(listed_plane), join(plane));

    std::vector<int> in_plane;
    for (const auto& e : table.entries())
      if (contains_all(plane, e.points)) in_plane.push_back(e.id);
    std::vector<int> listed_pl(r.plane_lines.begin(), r.plane_lines.end());
    std::sort(listed_pl.begin(), listed_pl.end());
    if (in_plane != listed_pl) miss("points", row, "plane lines", join(listed_pl), join(in_plane));
  }
  if (static_cast<int>(points.size()) != kNumPoints)
    miss("points", 0, "row count", std::to_string(kNumPoints), std::to_string(points.size()));
  return rep;
}

/// Ids l with b(l^perp) != tau_c . b(l).
inline std::vector<int> duality_violations() {
  std::vector<int> bad;
  for (const auto& e : line_table().entries()) {
    const BitVector lhs = line_representative(line_table().entry(e.dual).word);
    if (lhs != act_on_bitvector(gl::duality_permutation(), line_representative(e.word))) bad.push_back(e.id);
  }
  return bad;
}

}  // namespace phantom::pg32

#endif  // PHANTOM_PG32_HPP
