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

/// \file gl.hpp
/// \brief GL_k(F2) through elementary transvections, and the isomorphism
/// GL_4(F2) -> A_8.
///
/// Matrices act on column vectors: x -> g x. A vector x in F2^k is indexed by
/// its binary numeral with x_1 as the most significant bit, which is also the
/// basis-state index used by cnot_circuit_unitary().

#ifndef PHANTOM_GL_HPP
#define PHANTOM_GL_HPP

#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gf2.hpp"
#include "perm.hpp"

namespace phantom::gl {

/// An invertible k x k binary matrix.
class GlElement {
public:
  GlElement() = default;

  explicit GlElement(Gf2Matrix m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols() || m_.rows() < 1) throw std::invalid_argument("GlElement needs a square matrix");
    if (rank(m_) != m_.rows()) throw std::invalid_argument("GlElement matrix is singular");
  }

  static GlElement identity(int k) { return GlElement(Gf2Matrix::identity(k)); }

  int dim() const { return m_.rows(); }
  const Gf2Matrix& matrix() const { return m_; }
  bool is_identity() const { return m_ == Gf2Matrix::identity(dim()); }

  BitVector apply(const BitVector& x) const { return m_.apply(x); }

  GlElement inverse() const { return GlElement(*phantom::inverse(m_), Trusted{}); }
  GlElement transpose() const { return GlElement(m_.transpose(), Trusted{}); }

  friend GlElement operator*(const GlElement& a, const GlElement& b) {
    return GlElement(a.m_ * b.m_, Trusted{});
  }
  friend bool operator==(const GlElement& a, const GlElement& b) { return a.m_ == b.m_; }
  friend bool operator<(const GlElement& a, const GlElement& b) {
    return a.m_.to_strings() < b.m_.to_strings();
  }

private:
  struct Trusted {};
  GlElement(Gf2Matrix m, Trusted) : m_(std::move(m)) {}

  Gf2Matrix m_;
};

/// Index pair (i, j) naming the transvection 1 + E_ij.
struct Letter {
  int i = 0;
  int j = 0;
  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

using TransvectionWord = std::vector<Letter>;

inline GlElement transvection(int i, int j, int k) {
  if (i == j || i < 1 || j < 1 || i > k || j > k)
    throw std::out_of_range("transvection indices must be distinct and in [1, k]");
  Gf2Matrix m = Gf2Matrix::identity(k);
  m.set(i, j);
  return GlElement(std::move(m));
}

inline GlElement transvection(Letter l, int k) { return transvection(l.i, l.j, k); }

/// Parses "12 23 21" (single-digit indices) or "" for the identity.
inline TransvectionWord parse_word(std::string_view text) {
  TransvectionWord w;
  std::istringstream in{std::string(text)};
  for (std::string tok; in >> tok;) {
    if (tok.size() != 2 || tok[0] < '1' || tok[0] > '9' || tok[1] < '1' || tok[1] > '9')
      throw std::invalid_argument("bad transvection letter '" + tok + "'");
    w.push_back({tok[0] - '0', tok[1] - '0'});
  }
  return w;
}

/// Product of the letters taken left to right.
inline GlElement evaluate(const TransvectionWord& w, int k) {
  GlElement g = GlElement::identity(k);
  for (const auto& l : w) g = g * transvection(l, k);
  return g;
}

/// |GL_k(F2)| = prod_{l<k} (2^k - 2^l); throws if it does not fit in 64 bits.
inline std::uint64_t gl_order(int k) {
  if (k < 1 || k > 8) throw std::out_of_range("gl_order: k must be in [1, 8]");
  std::uint64_t order = 1;
  const std::uint64_t top = std::uint64_t{1} << k;
  for (int l = 0; l < k; ++l) order *= top - (std::uint64_t{1} << l);
  return order;
}

/// Inverse transpose; the contragredient automorphism.
inline GlElement dual_element(const GlElement& g) { return g.inverse().transpose(); }

/// a^{-1} b^{-1} a b.
template <typename T>
T commutator(const T& a, const T& b) {
  return a.inverse() * b.inverse() * a * b;
}

/// The computational-basis permutation of the CNOT circuit for g: entry x is
/// the index of g x, so U_g |x> = |g x>.
inline std::vector<std::size_t> cnot_circuit_unitary(const GlElement& g) {
  const int k = g.dim();
  std::vector<std::size_t> image(std::size_t{1} << k);
  for (std::size_t x = 0; x < image.size(); ++x)
    image[x] = static_cast<std::size_t>(g.apply(BitVector(k, x)).packed());
  return image;
}

/// The permutation v -> g v of the 2^k - 1 nonzero vectors, each labelled by
/// its numeral.
inline Permutation point_permutation(const GlElement& g) {
  const int k = g.dim();
  const int n = (1 << k) - 1;
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int p = 1; p <= n; ++p)
    img[static_cast<std::size_t>(p - 1)] = static_cast<int>(g.apply(BitVector(k, static_cast<std::uint64_t>(p))).packed());
  return Permutation(std::move(img));
}

/// Recovers the matrix from its action on the points e_1..e_k.
inline GlElement from_point_permutation(const Permutation& p, int k) {
  Gf2Matrix m(k, k);
  for (int c = 1; c <= k; ++c) {
    const BitVector col(k, static_cast<std::uint64_t>(p(static_cast<int>(BitVector::unit(k, c).packed()))));
    for (int r = 1; r <= k; ++r) m.set(r, c, col.get(r));
  }
  return GlElement(std::move(m));
}

/// 12, 23, ..., then 21, 32, ...
inline std::vector<Letter> adjacent_letters(int k) {
  std::vector<Letter> out;
  for (int i = 1; i < k; ++i) out.push_back({i, i + 1});
  for (int i = 1; i < k; ++i) out.push_back({i + 1, i});
  return out;
}

/// Every ordered pair i != j.
inline std::vector<Letter> all_letters(int k) {
  std::vector<Letter> out;
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= k; ++j)
      if (i != j) out.push_back({i, j});
  return out;
}

/// GL_k(F2) enumerated through its action on the 2^k - 1 points, generated by
/// the adjacent transvections in adjacent_letters() order.
inline PermGroup enumerate_gl(int k) {
  std::vector<Permutation> gens;
  for (const auto& l : adjacent_letters(k)) gens.push_back(point_permutation(transvection(l, k)));
  return PermGroup::closure(std::move(gens));
}

/// Images of the six adjacent transvections of GL_4(F2) in A_8.
inline const std::map<Letter, Permutation>& phi_generator_images() {
  static const std::map<Letter, Permutation> images{
      {{1, 2}, Permutation::from_cycles("(1 2)(3 4)(5 6)(7 8)", 8)},
      {{2, 3}, Permutation::from_cycles("(1 5)(2 8)(3 7)(4 6)", 8)},
      {{3, 4}, Permutation::from_cycles("(1 2)(3 8)(4 7)(5 6)", 8)},
      {{2, 1}, Permutation::from_cycles("(1 4)(2 7)(3 8)(5 6)", 8)},
      {{3, 2}, Permutation::from_cycles("(1 6)(2 5)(3 7)(4 8)", 8)},
      {{4, 3}, Permutation::from_cycles("(1 4)(2 3)(5 6)(7 8)", 8)},
  };
  return images;
}

/// The odd permutation realising g -> g^{-T} by conjugation.
inline const Permutation& duality_permutation() {
  static const Permutation tau = Permutation::from_cycles("(2 4)(3 7)(5 6)", 8);
  return tau;
}

/// Images of all twelve transvections, the non-adjacent ones obtained from
/// [e_ij, e_jk] = e_ik applied to the adjacent images.
inline std::map<Letter, Permutation> phi_transvection_images() {
  std::map<Letter, Permutation> im = phi_generator_images();
  auto derive = [&im](Letter target, Letter a, Letter b) { im[target] = commutator(im.at(a), im.at(b)); };
  derive({1, 3}, {1, 2}, {2, 3});
  derive({2, 4}, {2, 3}, {3, 4});
  derive({1, 4}, {1, 3}, {3, 4});
  derive({3, 1}, {3, 2}, {2, 1});
  derive({4, 2}, {4, 3}, {3, 2});
  derive({4, 1}, {4, 2}, {2, 1});
  return im;
}

/// Checks e_ij^2 = 1, [e_ij, e_kl] = 1 for j != k and i != l, and
/// [e_ij, e_jk] = e_ik for distinct i, j, k. Returns one line per violation.
template <typename T>
std::vector<std::string> presentation_violations(int k, const std::map<Letter, T>& e, const T& one) {
  std::vector<std::string> bad;
  auto name = [](Letter l) { return "e" + std::to_string(l.i) + std::to_string(l.j); };
  const auto letters = all_letters(k);
  for (const auto& a : letters) {
    if (!(e.at(a) * e.at(a) == one)) bad.push_back(name(a) + "^2 != 1");
    for (const auto& b : letters) {
      if (a.j != b.i && a.i != b.j && !(commutator(e.at(a), e.at(b)) == one))
        bad.push_back("[" + name(a) + "," + name(b) + "] != 1");
      if (a.j == b.i && a.i != b.j && !(commutator(e.at(a), e.at(b)) == e.at({a.i, b.j})))
        bad.push_back("[" + name(a) + "," + name(b) + "] != " + name({a.i, b.j}));
    }
  }
  return bad;
}

/// The isomorphism GL_4(F2) -> A_8. An element is mapped by finding a word
/// for it in the adjacent transvections and multiplying the generator images
/// letter by letter.
class Phi {
public:
  static const Phi& instance() {
    static const Phi phi;
    return phi;
  }

  Permutation operator()(const GlElement& g) const {
    if (g.dim() != 4) throw std::invalid_argument("phi is defined on GL_4(F2)");
    const auto idx = group_.index_of(point_permutation(g));
    if (!idx) throw std::logic_error("matrix missing from the GL_4(F2) enumeration");
    return image_of_word(group_.word(*idx));
  }

  /// Image of a transvection word, letter by letter.
  Permutation operator()(const TransvectionWord& w) const {
    const auto& im = phi_transvection_images_;
    Permutation p = Permutation::identity(8);
    for (const auto& l : w) p = p * im.at(l);
    return p;
  }

  const PermGroup& gl4() const { return group_; }

private:
  Phi() : group_(enumerate_gl(4)), phi_transvection_images_(phi_transvection_images()) {
    for (const auto& l : adjacent_letters(4)) gen_images_.push_back(phi_generator_images().at(l));
  }

  Permutation image_of_word(const std::vector<int>& w) const {
    Permutation p = Permutation::identity(8);
    for (int idx : w) p = p * gen_images_[static_cast<std::size_t>(idx)];
    return p;
  }

  PermGroup group_;
  std::map<Letter, Permutation> phi_transvection_images_;
  std::vector<Permutation> gen_images_;
};

inline Permutation phi(const GlElement& g) { return Phi::instance()(g); }

}  // namespace phantom::gl

#endif  // PHANTOM_GL_HPP
