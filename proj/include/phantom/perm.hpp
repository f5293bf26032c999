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

/// \file perm.hpp
/// \brief Permutations on {1..n}, enumerated groups, orbits.
///
/// Composition follows function notation: (a * b)(i) = a(b(i)), so the
/// right factor acts first. Groups are small enough to enumerate outright;
/// there is no stabiliser chain.

#ifndef PHANTOM_PERM_HPP
#define PHANTOM_PERM_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "gf2.hpp"

namespace phantom {

class Permutation {
public:
  Permutation() = default;

  explicit Permutation(int degree) : img_(static_cast<std::size_t>(degree)) {
    if (degree < 1) throw std::invalid_argument("permutation degree must be positive");
    std::iota(img_.begin(), img_.end(), 1);
  }

  /// One-line notation, 1-based.
  explicit Permutation(std::vector<int> images) : img_(std::move(images)) {
    if (img_.empty()) throw std::invalid_argument("permutation degree must be positive");
    std::vector<bool> hit(img_.size() + 1, false);
    for (int x : img_) {
      if (x < 1 || x > degree() || hit[static_cast<std::size_t>(x)])
        throw std::invalid_argument("images do not form a bijection on {1..n}");
      hit[static_cast<std::size_t>(x)] = true;
    }
  }

  static Permutation identity(int degree) { return Permutation(degree); }

  /// Parses cycle notation such as "(2 4)(3 7)(5 6)". "()" is the identity.
  static Permutation from_cycles(std::string_view text, int degree) {
    Permutation p(degree);
    std::size_t i = 0;
    while (i < text.size()) {
      if (text[i] == ' ') {
        ++i;
        continue;
      }
      if (text[i] != '(') throw std::invalid_argument("cycle notation: expected '('");
      const std::size_t close = text.find(')', i);
      if (close == std::string_view::npos) throw std::invalid_argument("cycle notation: missing ')'");
      std::istringstream in(std::string(text.substr(i + 1, close - i - 1)));
      std::vector<int> cyc;
      for (int x; in >> x;) cyc.push_back(x);
      if (!in.eof()) throw std::invalid_argument("cycle notation: bad point");
      Permutation c(degree);
      for (std::size_t k = 0; k < cyc.size(); ++k) {
        const int a = cyc[k];
        const int b = cyc[(k + 1) % cyc.size()];
        if (a < 1 || a > degree || b < 1 || b > degree)
          throw std::invalid_argument("cycle notation: point out of range");
        c.img_[static_cast<std::size_t>(a - 1)] = b;
      }
      // Rightmost cycle acts first.
      p = p * Permutation(c.img_);
      i = close + 1;
    }
    return p;
  }

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int point) const { return img_.at(static_cast<std::size_t>(point - 1)); }
  const std::vector<int>& images() const { return img_; }

  bool is_identity() const {
    for (int i = 1; i <= degree(); ++i)
      if ((*this)(i) != i) return false;
    return true;
  }

  Permutation inverse() const {
    std::vector<int> inv(img_.size());
    for (int i = 1; i <= degree(); ++i) inv[static_cast<std::size_t>((*this)(i) - 1)] = i;
    return Permutation(std::move(inv));
  }

  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree()) throw std::invalid_argument("permutation degree mismatch");
    std::vector<int> c(a.img_.size());
    for (int i = 1; i <= a.degree(); ++i) c[static_cast<std::size_t>(i - 1)] = a(b(i));
    Permutation r;
    r.img_ = std::move(c);
    return r;
  }

  std::vector<std::vector<int>> cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(img_.size() + 1, false);
    for (int i = 1; i <= degree(); ++i) {
      if (seen[static_cast<std::size_t>(i)]) continue;
      std::vector<int> c;
      for (int j = i; !seen[static_cast<std::size_t>(j)]; j = (*this)(j)) {
        seen[static_cast<std::size_t>(j)] = true;
        c.push_back(j);
      }
      if (c.size() > 1) out.push_back(std::move(c));
    }
    return out;
  }

  /// +1 for even, -1 for odd.
  int parity() const {
    int transpositions = 0;
    for (const auto& c : cycles()) transpositions += static_cast<int>(c.size()) - 1;
    return transpositions % 2 == 0 ? 1 : -1;
  }
  bool is_even() const { return parity() == 1; }

  std::string to_cycle_string() const {
    const auto cs = cycles();
    if (cs.empty()) return "()";
    std::string s;
    for (const auto& c : cs) {
      s += '(';
      for (std::size_t k = 0; k < c.size(); ++k) {
        if (k) s += ' ';
        s += std::to_string(c[k]);
      }
      s += ')';
    }
    return s;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
  std::vector<int> img_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const {
    std::size_t h = 1469598103934665603ULL;
    for (int x : p.images()) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ULL;
    return h;
  }
};

/// Moves the bit at position p to position sigma(p).
inline BitVector act_on_bitvector(const Permutation& sigma, const BitVector& v) {
  if (sigma.degree() != v.length()) throw std::invalid_argument("act_on_bitvector: degree mismatch");
  BitVector out(v.length());
  for (int p = 1; p <= v.length(); ++p)
    if (v.get(p)) out.set(sigma(p));
  return out;
}

/// A finite permutation group, enumerated by breadth-first closure. Every
/// element records the element it was reached from and the generator used,
/// which yields one word in the generators for it.
class PermGroup {
public:
  static constexpr std::size_t kMaxOrder = 1'000'000;

  static PermGroup closure(std::vector<Permutation> gens, int degree = -1,
                           std::size_t max_order = kMaxOrder) {
    PermGroup g;
    if (gens.empty()) {
      if (degree < 1) throw std::invalid_argument("closure of no generators needs a degree");
      g.degree_ = degree;
    } else {
      g.degree_ = gens.front().degree();
      for (const auto& s : gens)
        if (s.degree() != g.degree_) throw std::invalid_argument("generators differ in degree");
    }
    g.gens_ = std::move(gens);
    g.add(Permutation::identity(g.degree_), -1, -1);
    for (std::size_t head = 0; head < g.elems_.size(); ++head) {
      for (std::size_t k = 0; k < g.gens_.size(); ++k) {
        Permutation next = g.elems_[head] * g.gens_[k];
        if (g.index_.contains(next)) continue;
        if (g.elems_.size() >= max_order)
          throw std::length_error("group closure exceeded " + std::to_string(max_order) + " elements");
        g.add(std::move(next), static_cast<int>(head), static_cast<int>(k));
      }
    }
    return g;
  }

  int degree() const { return degree_; }
  std::size_t order() const { return elems_.size(); }
  const std::vector<Permutation>& generators() const { return gens_; }
  const std::vector<Permutation>& elements() const { return elems_; }
  const Permutation& element(std::size_t i) const { return elems_.at(i); }

  bool contains(const Permutation& p) const { return index_.contains(p); }

  std::optional<std::size_t> index_of(const Permutation& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  /// Generator indices w_1..w_r with element = gens[w_1] * ... * gens[w_r].
  std::vector<int> word(std::size_t i) const {
    std::vector<int> w;
    for (auto at = static_cast<int>(i); parent_[static_cast<std::size_t>(at)] >= 0;
         at = parent_[static_cast<std::size_t>(at)])
      w.push_back(via_[static_cast<std::size_t>(at)]);
    return {w.rbegin(), w.rend()};
  }

  Permutation evaluate(const std::vector<int>& w) const {
    Permutation p = Permutation::identity(degree_);
    for (int k : w) p = p * gens_.at(static_cast<std::size_t>(k));
    return p;
  }

private:
  void add(Permutation p, int parent, int via) {
    index_.emplace(p, elems_.size());
    elems_.push_back(std::move(p));
    parent_.push_back(parent);
    via_.push_back(via);
  }

  int degree_ = 0;
  std::vector<Permutation> gens_;
  std::vector<Permutation> elems_;
  std::vector<int> parent_;
  std::vector<int> via_;
  std::unordered_map<Permutation, std::size_t, PermutationHash> index_;
};

template <typename Point>
struct OrbitResult {
  std::vector<Point> orbit;
  std::size_t stabilizer_order = 0;
};

/// Orbit of `x` under the group generated by `gens` (of known order), with
/// the stabiliser order from orbit-stabiliser. `act(g, x)` must be a group
/// action; Point needs operator<.
template <typename Gen, typename Point, typename Action>
OrbitResult<Point> orbit_and_stabilizer(std::size_t group_order, const std::vector<Gen>& gens,
                                        const Point& x, Action act) {
  std::map<Point, bool> seen{{x, true}};
  OrbitResult<Point> r;
  r.orbit.push_back(x);
  for (std::size_t head = 0; head < r.orbit.size(); ++head) {
    for (const auto& g : gens) {
      Point y = act(g, r.orbit[head]);
      if (seen.emplace(y, true).second) r.orbit.push_back(std::move(y));
    }
  }
  if (group_order % r.orbit.size() != 0)
    throw std::logic_error("orbit size does not divide the group order");
  r.stabilizer_order = group_order / r.orbit.size();
  return r;
}

template <typename Point, typename Action>
OrbitResult<Point> orbit_and_stabilizer(const PermGroup& g, const Point& x, Action act) {
  return orbit_and_stabilizer(g.order(), g.generators(), x, act);
}

/// Number of group elements fixing x, counted directly over the enumeration.
template <typename Point, typename Action>
std::size_t count_stabilizer(const PermGroup& g, const Point& x, Action act) {
  std::size_t c = 0;
  for (const auto& e : g.elements())
    if (act(e, x) == x) ++c;
  return c;
}

/// Exponent of prime p in m! (Legendre).
inline std::uint64_t legendre_exponent(std::uint64_t m, std::uint64_t p) {
  std::uint64_t e = 0;
  for (std::uint64_t q = m / p; q > 0; q /= p) e += q;
  return e;
}

/// True iff group_order divides m!, i.e. Lagrange allows a subgroup of that
/// order in S_m. False certifies that no faithful action on m points exists.
inline bool lagrange_embedding_obstruction(std::uint64_t group_order, std::uint64_t m) {
  if (group_order == 0 || m == 0) throw std::invalid_argument("group order and degree must be positive");
  std::uint64_t rest = group_order;
  for (std::uint64_t p = 2; p * p <= rest; ++p) {
    std::uint64_t e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    if (e > 0 && legendre_exponent(m, p) < e) return false;
  }
  if (rest > 1 && legendre_exponent(m, rest) < 1) return false;
  return true;
}

/// n! for n <= 20, 0 on overflow.
inline std::uint64_t factorial_or_zero(int m) {
  if (m < 0 || m > 20) return 0;
  std::uint64_t f = 1;
  for (int i = 2; i <= m; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

}  // namespace phantom

#endif  // PHANTOM_PERM_HPP
