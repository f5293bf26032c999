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

/// \file css.hpp
/// \brief CSS codes in binary form, permutation-induced logical actions, the
/// punctured hypercube family and its phantom certificate, and the Pauli
/// no-go bookkeeping for ((8, 2^4, 2)).
///
/// A CSS code is a pair (C_X, C_Z) with C_X^perp <= C_Z. X-type stabilisers
/// span C_X^perp and Z-type stabilisers span C_Z^perp. Logical X operators are
/// taken from C_Z and logical Z operators from C_X.

#ifndef PHANTOM_CSS_HPP
#define PHANTOM_CSS_HPP

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gf2.hpp"
#include "gl.hpp"
#include "perm.hpp"
#include "reed_muller.hpp"

namespace phantom::css {

/// X^x Z^z up to phase.
struct PauliLabel {
  BitVector x;
  BitVector z;

  static PauliLabel identity(int n) { return {BitVector(n), BitVector(n)}; }

  /// Parses "IXYZ..." with position 1 leftmost.
  static PauliLabel from_string(std::string_view s) {
    const int n = static_cast<int>(s.size());
    PauliLabel p = identity(n);
    for (int i = 1; i <= n; ++i) {
      switch (s[static_cast<std::size_t>(i - 1)]) {
        case 'I': break;
        case 'X': p.x.set(i); break;
        case 'Z': p.z.set(i); break;
        case 'Y': p.x.set(i); p.z.set(i); break;
        default: throw std::invalid_argument("Pauli string must use I, X, Y, Z");
      }
    }
    return p;
  }

  int length() const { return x.length(); }
  int weight() const { return (x | z).weight(); }
  bool commutes_with(const PauliLabel& o) const { return x.dot(o.z) == o.x.dot(z); }

  std::string to_string() const {
    std::string s;
    for (int i = 1; i <= length(); ++i) s += "IZXY"[(x.get(i) ? 2 : 0) + (z.get(i) ? 1 : 0)];
    return s;
  }

  friend bool operator==(const PauliLabel&, const PauliLabel&) = default;
};

class CssViolation : public std::invalid_argument {
public:
  explicit CssViolation(BitVector witness)
      : std::invalid_argument("CSS condition fails: " + witness.to_string() + " is in C_X^perp but not in C_Z"),
        witness_(witness) {}
  const BitVector& witness() const { return witness_; }

private:
  BitVector witness_;
};

namespace detail {

/// Rows of `big` (canonical order) that extend `small` to a basis of `big`.
inline std::vector<BitVector> complement_basis(const ClassicalCode& small, const ClassicalCode& big) {
  std::vector<BitVector> span = small.generators();
  std::vector<BitVector> out;
  for (const auto& g : big.generators()) {
    if (ClassicalCode(big.length(), span).contains(g)) continue;
    span.push_back(g);
    out.push_back(g);
  }
  return out;
}

/// P[i][j] = lx[i] . lz[j].
inline Gf2Matrix pairing(const std::vector<BitVector>& lx, const std::vector<BitVector>& lz) {
  Gf2Matrix p(static_cast<int>(lx.size()), static_cast<int>(lz.size()));
  for (std::size_t i = 0; i < lx.size(); ++i)
    for (std::size_t j = 0; j < lz.size(); ++j) p.set(static_cast<int>(i) + 1, static_cast<int>(j) + 1, lx[i].dot(lz[j]));
  return p;
}

}  // namespace detail

class CssCode {
public:
  CssCode() = default;

  /// Canonical logical representatives: the rows of rref(C_Z) that extend
  /// C_X^perp, likewise for Z, then the Z side is recombined so the pairing
  /// matrix is the identity.
  CssCode(ClassicalCode c_x, ClassicalCode c_z) : c_x_(std::move(c_x)), c_z_(std::move(c_z)) {
    init_spans();
    lx_ = detail::complement_basis(sx_, c_z_);
    std::vector<BitVector> lz = detail::complement_basis(sz_, c_x_);
    if (k() == 0) return;
    const auto pinv = phantom::inverse(detail::pairing(lx_, lz));
    if (!pinv) throw std::logic_error("logical pairing is singular");
    // lz'_j = sum_m (P^{-1})[m][j] lz_m, so lx_i . lz'_j = (P P^{-1})[i][j].
    for (int j = 1; j <= k(); ++j) {
      BitVector v(n());
      for (int m = 1; m <= k(); ++m)
        if (pinv->get(m, j)) v ^= lz[static_cast<std::size_t>(m - 1)];
      lz_.push_back(v);
    }
  }

  /// Explicit logical representatives, validated.
  CssCode(ClassicalCode c_x, ClassicalCode c_z, std::vector<BitVector> logical_x, std::vector<BitVector> logical_z)
      : c_x_(std::move(c_x)), c_z_(std::move(c_z)), lx_(std::move(logical_x)), lz_(std::move(logical_z)) {
    init_spans();
    if (static_cast<int>(lx_.size()) != k() || static_cast<int>(lz_.size()) != k())
      throw std::invalid_argument("expected k logical representatives of each type");
    for (const auto& v : lx_)
      if (!c_z_.contains(v)) throw std::invalid_argument("logical X representative outside C_Z");
    for (const auto& v : lz_)
      if (!c_x_.contains(v)) throw std::invalid_argument("logical Z representative outside C_X");
    if (k() > 0 && detail::pairing(lx_, lz_) != Gf2Matrix::identity(k()))
      throw std::invalid_argument("logical representatives do not pair to the identity");
  }

  int n() const { return c_x_.length(); }
  int k() const { return c_x_.dim() - sz_.dim(); }
  const ClassicalCode& c_x() const { return c_x_; }
  const ClassicalCode& c_z() const { return c_z_; }
  /// Span of the X-type stabilisers, C_X^perp.
  const ClassicalCode& x_stabilizers() const { return sx_; }
  /// Span of the Z-type stabilisers, C_Z^perp.
  const ClassicalCode& z_stabilizers() const { return sz_; }
  const std::vector<BitVector>& logical_x() const { return lx_; }
  const std::vector<BitVector>& logical_z() const { return lz_; }

  /// Requires k >= 1.
  Gf2Matrix pairing_matrix() const { return detail::pairing(lx_, lz_); }

  /// Same classical pair; logical representatives are not compared.
  friend bool operator==(const CssCode& a, const CssCode& b) { return a.c_x_ == b.c_x_ && a.c_z_ == b.c_z_; }

private:
  void init_spans() {
    if (c_x_.length() != c_z_.length()) throw std::invalid_argument("C_X and C_Z differ in length");
    sx_ = dual_code(c_x_);
    sz_ = dual_code(c_z_);
    for (const auto& g : sx_.generators())
      if (!c_z_.contains(g)) throw CssViolation(g);
  }

  ClassicalCode c_x_, c_z_, sx_, sz_;
  std::vector<BitVector> lx_, lz_;
};

inline CssCode css_from_pair(const ClassicalCode& c_x, const ClassicalCode& c_z) { return CssCode(c_x, c_z); }

/// Coordinate of the point with numeral v in a length 2^k - 1 code.
inline BitVector point_indicator(int k, std::uint64_t v) { return BitVector::unit((1 << k) - 1, static_cast<int>(v)); }

/// [[2^k - 1, k, 2]] with C_X = RM_*(k-1, k) and C_Z = RM*(1, k). Logical X_i
/// is the half-cube x_i = 1 and logical Z_i the edge from 1...1 to 1...1 with
/// bit i cleared.
inline CssCode hypercube_code(int k) {
  if (k < 2 || k > rm::kMaxM) throw std::out_of_range("hypercube_code: k must be in [2, 6]");
  const std::uint64_t top = (std::uint64_t{1} << k) - 1;
  std::vector<BitVector> lx, lz;
  for (int i = 1; i <= k; ++i) {
    lx.push_back(rm::subcube_indicator({i}, {1}, k, true));
    lz.push_back(point_indicator(k, top) ^ point_indicator(k, top & ~(std::uint64_t{1} << (k - i))));
  }
  return CssCode(rm::rm_code(k - 1, k, rm::Variant::kShortened), rm::rm_code(1, k, rm::Variant::kPunctured),
                 std::move(lx), std::move(lz));
}

struct Distance {
  int d_x = 0;
  int d_z = 0;
  int d = 0;
};

namespace detail {

inline int coset_min_weight(const ClassicalCode& c, const ClassicalCode& exclude) {
  if (c.dim() <= kMaxEnumerationDim) return min_weight(c, &exclude);
  constexpr int kSupportSearchLimit = 4;
  if (const int w = min_weight_by_support(c, kSupportSearchLimit, &exclude)) return w;
  throw std::length_error("coset minimum weight above 4 for a code of dimension " + std::to_string(c.dim()));
}

}  // namespace detail

/// d_z = min |c_z \ C_X^perp|, d_x = min |c_x \ C_Z^perp|. Codes of dimension
/// above 24 are searched by support size up to weight 4.
inline Distance css_distance(const CssCode& code) {
  if (code.k() < 1) throw std::invalid_argument("css_distance needs k >= 1");
  Distance d;
  d.d_z = detail::coset_min_weight(code.c_z(), code.x_stabilizers());
  d.d_x = detail::coset_min_weight(code.c_x(), code.z_stabilizers());
  d.d = std::min(d.d_x, d.d_z);
  return d;
}

inline ClassicalCode permute_code(const Permutation& s, const ClassicalCode& c) {
  std::vector<BitVector> g;
  for (const auto& v : c.generators()) g.push_back(act_on_bitvector(s, v));
  return ClassicalCode(c.length(), g);
}

struct LogicalAction {
  std::optional<gl::GlElement> matrix;
  std::string rejection;
  bool ok() const { return matrix.has_value(); }
};

/// Column j of the result holds the coordinates of sigma(X_j) in the basis
/// X_1..X_k modulo stabilisers, read off by pairing with Z_i. Throws
/// std::logic_error if the Z action is not the inverse transpose.
inline LogicalAction permutation_logical_action(const CssCode& code, const Permutation& s) {
  if (s.degree() != code.n()) throw std::invalid_argument("permutation degree differs from code length");
  if (permute_code(s, code.x_stabilizers()) != code.x_stabilizers())
    return {std::nullopt, "X stabiliser span C_X^perp is not preserved"};
  if (permute_code(s, code.z_stabilizers()) != code.z_stabilizers())
    return {std::nullopt, "Z stabiliser span C_Z^perp is not preserved"};
  const int k = code.k();
  Gf2Matrix mx(k, k), mz(k, k);
  for (int j = 1; j <= k; ++j) {
    const BitVector sx = act_on_bitvector(s, code.logical_x()[static_cast<std::size_t>(j - 1)]);
    const BitVector sz = act_on_bitvector(s, code.logical_z()[static_cast<std::size_t>(j - 1)]);
    for (int i = 1; i <= k; ++i) {
      mx.set(i, j, sx.dot(code.logical_z()[static_cast<std::size_t>(i - 1)]));
      mz.set(i, j, sz.dot(code.logical_x()[static_cast<std::size_t>(i - 1)]));
    }
  }
  const gl::GlElement g(mx);
  if (gl::dual_element(g).matrix() != mz) throw std::logic_error("logical Z action is not the inverse transpose");
  return {g, {}};
}

/// v -> A v on the nonzero vectors of F2^k, labelled by numeral; this is the
/// qubit labelling of hypercube_code(k).
inline Permutation geometric_automorphism(const gl::GlElement& a) { return gl::point_permutation(a); }

/// The qubit permutation chosen for logical circuit g. geom(A) acts on the
/// logical X labels as A^{-T}, so sigma_g = geom(g^{-T}).
inline Permutation sigma_for(const gl::GlElement& g) { return geometric_automorphism(gl::dual_element(g)); }

inline constexpr const char* kSigmaConvention = "sigma_g = geom(g^-T), geom(A): v -> A v";

struct CertificateEntry {
  gl::Letter letter;
  gl::GlElement g;
  Permutation sigma;
  bool verified = false;
};

struct PhantomCertificate {
  int k = 0;
  std::string convention = kSigmaConvention;
  std::vector<CertificateEntry> entries;
  std::uint64_t image_order = 0;
  /// True when image_order was taken from |GL_k(F2)| instead of a closure.
  bool image_order_by_formula = false;
  bool ok() const {
    return !entries.empty() && std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.verified; });
  }
};

class CertificationFailure : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Checks that every transvection g_ij is realised by sigma_g. The logical
/// images are closed into a group for k <= 4; for larger k the order is
/// quoted from gl_order().
inline PhantomCertificate phantom_certificate(const CssCode& code, int k) {
  if (code.k() != k || code.n() != (1 << k) - 1) throw std::invalid_argument("phantom_certificate expects hypercube_code(k)");
  PhantomCertificate cert;
  cert.k = k;
  std::vector<Permutation> images;
  for (const auto& l : gl::all_letters(k)) {
    const gl::GlElement g = gl::transvection(l, k);
    const Permutation s = sigma_for(g);
    const LogicalAction act = permutation_logical_action(code, s);
    const bool good = act.ok() && *act.matrix == g;
    cert.entries.push_back({l, g, s, good});
    if (!good)
      throw CertificationFailure("transvection g" + std::to_string(l.i) + std::to_string(l.j) + " is not realised: " +
                                 (act.ok() ? "logical action differs" : act.rejection));
    images.push_back(gl::point_permutation(*act.matrix));
  }
  if (k <= 4) {
    cert.image_order = PermGroup::closure(images).order();
  } else {
    cert.image_order = gl::gl_order(k);
    cert.image_order_by_formula = true;
  }
  return cert;
}

/// Every (c_x, c_z) from `codes` that is a CSS pair with the given k and
/// distance above 1.
inline std::vector<CssCode> scan_css_pairs(const std::vector<ClassicalCode>& codes, int k) {
  std::vector<CssCode> out;
  for (const auto& cx : codes)
    for (const auto& cz : codes) {
      if (!cz.contains(dual_code(cx))) continue;
      CssCode c(cx, cz);
      if (c.k() != k || k < 1) continue;
      if (css_distance(c).d > 1) out.push_back(std::move(c));
    }
  return out;
}

/// Drops every code whose X/Z swap (c_z, c_x) appears earlier in the list.
inline std::vector<CssCode> up_to_swap(const std::vector<CssCode>& codes) {
  std::vector<CssCode> out;
  for (const auto& c : codes) {
    const bool seen = std::any_of(out.begin(), out.end(), [&c](const CssCode& o) {
      return (o.c_x() == c.c_x() && o.c_z() == c.c_z()) || (o.c_x() == c.c_z() && o.c_z() == c.c_x());
    });
    if (!seen) out.push_back(c);
  }
  return out;
}

struct NogoCase {
  int r = 0;
  /// "singleton" or "dimension".
  std::string kind;
  int lhs = 0;
  int rhs = 0;
  std::vector<int> allowed_dims;
  std::string text;
  /// The inequality lhs <= rhs that would have to hold is false.
  bool contradiction = false;
};

struct NogoReport {
  std::vector<int> invariant_dims;
  std::vector<NogoCase> cases;
  bool ok() const {
    return !cases.empty() && std::all_of(cases.begin(), cases.end(), [](const auto& c) { return c.contradiction; });
  }
};

/// Rules out an ((8, 2^4, 2)) subsystem stabiliser phantom code with r gauge
/// qubits for r = 0..4.
inline NogoReport stabilizer_nogo_8_4() {
  constexpr int n = 8, k = 4, d = 2;
  NogoReport rep;
  for (const auto& c : rm::invariant_codes(rm::alternating_generators(n), n)) rep.invariant_dims.push_back(c.dim());
  for (int r = 0; r <= 4; ++r) {
    NogoCase c;
    c.r = r;
    const int singleton = n - 2 * d + 2;
    if (k + r > singleton) {
      c.kind = "singleton";
      c.lhs = k + r;
      c.rhs = singleton;
      c.contradiction = true;
      c.text = "k+r = " + std::to_string(k + r) + " > n-2d+2 = " + std::to_string(singleton);
    } else {
      c.kind = "dimension";
      for (int dim : rep.invariant_dims)
        if (dim <= k + r) c.allowed_dims.push_back(dim);
      const int best = c.allowed_dims.empty() ? 0 : *std::max_element(c.allowed_dims.begin(), c.allowed_dims.end());
      c.lhs = k + r;
      c.rhs = 2 * best;
      c.contradiction = c.lhs > c.rhs;
      c.text = "need dim Gamma_X + dim Gamma_Z >= k+r = " + std::to_string(c.lhs) + " but at most " + std::to_string(c.rhs) + " is available";
    }
    rep.cases.push_back(std::move(c));
  }
  return rep;
}

}  // namespace phantom::css

#endif  // PHANTOM_CSS_HPP
