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

/// \file reed_muller.hpp
/// \brief Reed-Muller codes by monomial evaluation, subcube indicators, and
/// enumeration of the linear codes invariant under a permutation group.
///
/// Coordinates: the full code evaluates at the points of F2^m in numeral
/// order (x_1 is the most significant bit), origin first, so coordinate i is
/// the point with numeral i - 1. Puncturing drops the origin, so coordinate p
/// of a punctured or shortened code is the point with numeral p.

#ifndef PHANTOM_REED_MULLER_HPP
#define PHANTOM_REED_MULLER_HPP

#include <bit>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "gf2.hpp"
#include "gl.hpp"
#include "perm.hpp"

namespace phantom::rm {

enum class Variant { kFull, kPunctured, kShortened };

inline constexpr int kMaxM = 6;

/// Bit i - 1 of the mask selects variable x_i.
using Monomial = std::uint32_t;

inline bool coordinate_bit(std::uint64_t numeral, int i, int m) { return (numeral >> (m - i)) & 1U; }

inline std::vector<std::uint64_t> evaluation_points(int m, bool punctured) {
  std::vector<std::uint64_t> pts;
  for (std::uint64_t v = punctured ? 1 : 0; v < (std::uint64_t{1} << m); ++v) pts.push_back(v);
  return pts;
}

inline BitVector evaluate(Monomial s, int m, bool punctured) {
  const auto pts = evaluation_points(m, punctured);
  BitVector out(static_cast<int>(pts.size()));
  for (std::size_t c = 0; c < pts.size(); ++c) {
    bool val = true;
    for (int i = 1; i <= m && val; ++i)
      if ((s >> (i - 1)) & 1U) val = coordinate_bit(pts[c], i, m);
    if (val) out.set(static_cast<int>(c) + 1);
  }
  return out;
}

/// Squarefree monomials of degree in [lo, hi], by degree then mask.
inline std::vector<Monomial> monomials(int m, int lo, int hi) {
  std::vector<Monomial> out;
  for (int d = lo; d <= hi; ++d)
    for (Monomial s = 0; s < (Monomial{1} << m); ++s)
      if (std::popcount(s) == d) out.push_back(s);
  return out;
}

inline ClassicalCode rm_code(int r, int m, Variant variant) {
  if (m < 1 || m > kMaxM) throw std::out_of_range("rm_code: m must be in [1, 6]");
  const bool full = variant == Variant::kFull;
  if (full ? (r < -1 || r > m) : (r < 0 || r > m - 1))
    throw std::out_of_range("rm_code: r=" + std::to_string(r) + " out of range for m=" + std::to_string(m));
  const int n = full ? (1 << m) : (1 << m) - 1;
  std::vector<BitVector> gens;
  for (Monomial s : monomials(m, variant == Variant::kShortened ? 1 : 0, r)) gens.push_back(evaluate(s, m, !full));
  return ClassicalCode(n, gens);
}

struct Parameters {
  int n = 0;
  int k = 0;
  int d = 0;
};

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t c = 1;
  for (int i = 1; i <= k; ++i) c = c * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return c;
}

/// Textbook [n, k, d] for RM, RM* and RM_*, valid for 0 <= r <= m - 1.
inline Parameters expected_parameters(int r, int m, Variant variant) {
  int k = 0;
  for (int s = variant == Variant::kShortened ? 1 : 0; s <= r; ++s) k += static_cast<int>(binomial(m, s));
  switch (variant) {
    case Variant::kFull: return {1 << m, k, 1 << (m - r)};
    case Variant::kPunctured: return {(1 << m) - 1, k, (1 << (m - r)) - 1};
    case Variant::kShortened: return {(1 << m) - 1, k, 1 << (m - r)};
  }
  return {};
}

/// Evaluation vector of prod_{i in s} (1 + b_i + x_i): the indicator of the
/// subcube {x : x_i = b_i for i in s}. `s` and `b` are parallel lists.
inline BitVector subcube_indicator(const std::vector<int>& s, const std::vector<int>& b, int m, bool punctured) {
  if (s.size() != b.size()) throw std::invalid_argument("subcube_indicator: s and b differ in size");
  const auto pts = evaluation_points(m, punctured);
  BitVector out(static_cast<int>(pts.size()));
  for (std::size_t c = 0; c < pts.size(); ++c) {
    bool in = true;
    for (std::size_t t = 0; t < s.size() && in; ++t) {
      if (s[t] < 1 || s[t] > m) throw std::out_of_range("subcube_indicator: index out of range");
      in = coordinate_bit(pts[c], s[t], m) == (b[t] != 0);
    }
    if (in) out.set(static_cast<int>(c) + 1);
  }
  return out;
}

/// RM*(r,m)^perp == RM_*(m-1-r,m) and RM_*(r,m)^perp == RM*(m-1-r,m).
inline bool verify_rm_duality(int r, int m) {
  const int s = m - 1 - r;
  return dual_code(rm_code(r, m, Variant::kPunctured)) == rm_code(s, m, Variant::kShortened) &&
         dual_code(rm_code(r, m, Variant::kShortened)) == rm_code(s, m, Variant::kPunctured);
}

inline constexpr int kMaxInvariantLength = 15;

struct CodeOrder {
  bool operator()(const ClassicalCode& a, const ClassicalCode& b) const {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    return a.generators() < b.generators();
  }
};

/// Every binary linear code of length n fixed by all generators, sorted by
/// dimension. Each invariant code is a sum of orbit spans, so the list is
/// the orbit spans of all nonzero vectors closed under pairwise sums, plus
/// the zero code.
inline std::vector<ClassicalCode> invariant_codes(const std::vector<Permutation>& gens, int n) {
  if (n < 1 || n > kMaxInvariantLength) throw std::length_error("invariant_codes supports 1 <= n <= 15");
  for (const auto& g : gens)
    if (g.degree() != n) throw std::invalid_argument("invariant_codes: generator degree differs from n");

  std::set<ClassicalCode, CodeOrder> codes{ClassicalCode::zero(n)};
  std::vector<bool> visited(std::size_t{1} << n, false);
  for (std::uint64_t v = 1; v < (std::uint64_t{1} << n); ++v) {
    if (visited[v]) continue;
    std::vector<BitVector> orbit{BitVector(n, v)};
    visited[v] = true;
    for (std::size_t head = 0; head < orbit.size(); ++head)
      for (const auto& g : gens) {
        const BitVector w = act_on_bitvector(g, orbit[head]);
        if (!visited[w.packed()]) {
          visited[w.packed()] = true;
          orbit.push_back(w);
        }
      }
    codes.insert(ClassicalCode(n, orbit));
  }

  for (bool grew = true; grew;) {
    grew = false;
    const std::vector<ClassicalCode> snapshot(codes.begin(), codes.end());
    for (std::size_t a = 0; a < snapshot.size(); ++a)
      for (std::size_t b = a + 1; b < snapshot.size(); ++b)
        grew |= codes.insert(code_sum(snapshot[a], snapshot[b])).second;
  }
  return {codes.begin(), codes.end()};
}

/// GL_m(F2) acting on the 2^m - 1 points of PG(m-1,2), one generator per
/// adjacent transvection. Point p is coordinate p of the punctured codes.
inline std::vector<Permutation> projective_action_generators(int m) {
  std::vector<Permutation> gens;
  for (const auto& l : gl::adjacent_letters(m)) gens.push_back(gl::point_permutation(gl::transvection(l, m)));
  return gens;
}

/// A_n on n points via the 3-cycles (1 2 i).
inline std::vector<Permutation> alternating_generators(int n) {
  std::vector<Permutation> gens;
  for (int i = 3; i <= n; ++i)
    gens.push_back(Permutation::from_cycles("(1 2 " + std::to_string(i) + ")", n));
  return gens;
}

}  // namespace phantom::rm

#endif  // PHANTOM_REED_MULLER_HPP
