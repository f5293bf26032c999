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

/// \file gf2.hpp
/// \brief Exact linear algebra over the two-element field.
///
/// Vectors are packed into a single 64-bit word. Position 1 is the leftmost
/// character of the string form and the most significant bit of the packed
/// n-bit field, so the packed value of "10101010" is 0xAA.

#ifndef PHANTOM_GF2_HPP
#define PHANTOM_GF2_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace phantom {

inline constexpr int kMaxBits = 64;

class BitVector {
public:
  BitVector() = default;

  explicit BitVector(int length, std::uint64_t packed = 0) : n_(length), w_(packed) {
    if (length < 1 || length > kMaxBits)
      throw std::invalid_argument("BitVector length must be in [1, 64]");
    w_ &= mask();
  }

  /// Parses an ASCII '0'/'1' string, leftmost character = position 1.
  static BitVector from_string(std::string_view s) {
    BitVector v(static_cast<int>(s.size()));
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '1')
        v.set(static_cast<int>(i) + 1);
      else if (s[i] != '0')
        throw std::invalid_argument("bit string may only contain '0' and '1'");
    }
    return v;
  }

  static BitVector ones(int length) {
    BitVector v(length);
    v.w_ = v.mask();
    return v;
  }

  static BitVector unit(int length, int pos) {
    BitVector v(length);
    v.set(pos);
    return v;
  }

  int length() const { return n_; }
  std::uint64_t packed() const { return w_; }

  bool get(int pos) const { return (w_ >> shift(pos)) & 1U; }
  void set(int pos, bool value = true) {
    const std::uint64_t b = std::uint64_t{1} << shift(pos);
    w_ = value ? (w_ | b) : (w_ & ~b);
  }
  void flip(int pos) { w_ ^= std::uint64_t{1} << shift(pos); }

  int weight() const { return std::popcount(w_); }
  bool is_zero() const { return w_ == 0; }

  BitVector complement() const { return BitVector(n_, ~w_); }

  /// Standard dot product over F2.
  bool dot(const BitVector& o) const {
    check_same(o);
    return std::popcount(w_ & o.w_) & 1;
  }

  std::vector<int> support() const {
    std::vector<int> s;
    for (int i = 1; i <= n_; ++i)
      if (get(i)) s.push_back(i);
    return s;
  }

  std::string to_string() const {
    std::string s(static_cast<std::size_t>(n_), '0');
    for (int i = 1; i <= n_; ++i)
      if (get(i)) s[static_cast<std::size_t>(i - 1)] = '1';
    return s;
  }

  BitVector& operator^=(const BitVector& o) {
    check_same(o);
    w_ ^= o.w_;
    return *this;
  }
  BitVector& operator&=(const BitVector& o) {
    check_same(o);
    w_ &= o.w_;
    return *this;
  }
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
  BitVector& operator|=(const BitVector& o) {
    check_same(o);
    w_ |= o.w_;
    return *this;
  }
  friend BitVector operator&(BitVector a, const BitVector& b) { return a &= b; }
  friend BitVector operator|(BitVector a, const BitVector& b) { return a |= b; }

  friend bool operator==(const BitVector&, const BitVector&) = default;
  friend auto operator<=>(const BitVector&, const BitVector&) = default;

private:
  std::uint64_t mask() const {
    return n_ == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n_) - 1);
  }
  int shift(int pos) const {
    if (pos < 1 || pos > n_) throw std::out_of_range("bit position out of range");
    return n_ - pos;
  }
  void check_same(const BitVector& o) const {
    if (n_ != o.n_) throw std::invalid_argument("BitVector length mismatch");
  }

  int n_ = 0;
  std::uint64_t w_ = 0;
};

class Gf2Matrix {
public:
  Gf2Matrix() = default;
  Gf2Matrix(int rows, int cols) : cols_(cols), rows_(static_cast<std::size_t>(rows), BitVector(cols)) {}

  /// All rows must share one length; an empty list needs an explicit width.
  explicit Gf2Matrix(std::vector<BitVector> rows, int cols = -1) : rows_(std::move(rows)) {
    if (rows_.empty()) {
      if (cols < 1) throw std::invalid_argument("empty Gf2Matrix needs a column count");
      cols_ = cols;
      return;
    }
    cols_ = rows_.front().length();
    for (const auto& r : rows_)
      if (r.length() != cols_) throw std::invalid_argument("Gf2Matrix rows differ in length");
  }

  static Gf2Matrix identity(int n) {
    Gf2Matrix m(n, n);
    for (int i = 1; i <= n; ++i) m.set(i, i);
    return m;
  }

  /// Rows given as bit strings, e.g. {"110", "011"}.
  static Gf2Matrix from_strings(const std::vector<std::string>& rows) {
    std::vector<BitVector> r;
    for (const auto& s : rows) r.push_back(BitVector::from_string(s));
    return Gf2Matrix(std::move(r));
  }

  int rows() const { return static_cast<int>(rows_.size()); }
  int cols() const { return cols_; }

  bool get(int r, int c) const { return rows_.at(static_cast<std::size_t>(r - 1)).get(c); }
  void set(int r, int c, bool v = true) { rows_.at(static_cast<std::size_t>(r - 1)).set(c, v); }

  const BitVector& row(int r) const { return rows_.at(static_cast<std::size_t>(r - 1)); }
  const std::vector<BitVector>& row_list() const { return rows_; }

  Gf2Matrix transpose() const {
    Gf2Matrix t(cols_, rows());
    for (int r = 1; r <= rows(); ++r)
      for (int c = 1; c <= cols_; ++c)
        if (get(r, c)) t.set(c, r);
    return t;
  }

  /// Matrix times column vector.
  BitVector apply(const BitVector& x) const {
    if (x.length() != cols_) throw std::invalid_argument("dimension mismatch in Gf2Matrix::apply");
    BitVector y(rows());
    for (int r = 1; r <= rows(); ++r)
      if (row(r).dot(x)) y.set(r);
    return y;
  }

  friend Gf2Matrix operator*(const Gf2Matrix& a, const Gf2Matrix& b) {
    if (a.cols_ != b.rows()) throw std::invalid_argument("dimension mismatch in Gf2Matrix product");
    Gf2Matrix c(a.rows(), b.cols_);
    for (int r = 1; r <= a.rows(); ++r) {
      BitVector acc(b.cols_);
      for (int k = 1; k <= a.cols_; ++k)
        if (a.get(r, k)) acc ^= b.row(k);
      c.rows_[static_cast<std::size_t>(r - 1)] = acc;
    }
    return c;
  }

  friend bool operator==(const Gf2Matrix&, const Gf2Matrix&) = default;

  std::vector<std::string> to_strings() const {
    std::vector<std::string> s;
    for (const auto& r : rows_) s.push_back(r.to_string());
    return s;
  }

private:
  int cols_ = 0;
  std::vector<BitVector> rows_;
};

/// Reduced row-echelon form; zero rows are kept at the bottom so the shape
/// is unchanged.
inline Gf2Matrix rref(const Gf2Matrix& m) {
  std::vector<BitVector> rows = m.row_list();
  std::size_t lead = 0;
  for (int c = 1; c <= m.cols() && lead < rows.size(); ++c) {
    auto piv = std::find_if(rows.begin() + static_cast<std::ptrdiff_t>(lead), rows.end(),
                            [c](const BitVector& r) { return r.get(c); });
    if (piv == rows.end()) continue;
    std::swap(*piv, rows[lead]);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (r != lead && rows[r].get(c)) rows[r] ^= rows[lead];
    ++lead;
  }
  return Gf2Matrix(std::move(rows), m.cols());
}

inline int rank(const Gf2Matrix& m) {
  const Gf2Matrix r = rref(m);
  return static_cast<int>(std::count_if(r.row_list().begin(), r.row_list().end(),
                                        [](const BitVector& v) { return !v.is_zero(); }));
}

/// Inverse of a square matrix, or nullopt when singular.
inline std::optional<Gf2Matrix> inverse(const Gf2Matrix& m) {
  const int n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("inverse of a non-square matrix");
  std::vector<BitVector> a = m.row_list();
  Gf2Matrix id = Gf2Matrix::identity(n);
  std::vector<BitVector> b = id.row_list();
  for (int c = 1; c <= n; ++c) {
    const auto i0 = static_cast<std::size_t>(c - 1);
    std::size_t p = i0;
    while (p < a.size() && !a[p].get(c)) ++p;
    if (p == a.size()) return std::nullopt;
    std::swap(a[p], a[i0]);
    std::swap(b[p], b[i0]);
    for (std::size_t r = 0; r < a.size(); ++r)
      if (r != i0 && a[r].get(c)) {
        a[r] ^= a[i0];
        b[r] ^= b[i0];
      }
  }
  return Gf2Matrix(std::move(b));
}

/// A binary linear code held by its canonical generator: reduced row-echelon
/// form with zero rows removed. Equality is bit-for-bit on that generator.
class ClassicalCode {
public:
  ClassicalCode() = default;

  ClassicalCode(int length, const std::vector<BitVector>& generators) : n_(length) {
    for (const auto& g : generators)
      if (g.length() != length) throw std::invalid_argument("generator length does not match code length");
    if (generators.empty()) return;
    const Gf2Matrix r = rref(Gf2Matrix(generators, length));
    for (const auto& row : r.row_list())
      if (!row.is_zero()) gen_.push_back(row);
  }

  static ClassicalCode zero(int length) { return ClassicalCode(length, {}); }

  static ClassicalCode full(int length) {
    std::vector<BitVector> g;
    for (int i = 1; i <= length; ++i) g.push_back(BitVector::unit(length, i));
    return ClassicalCode(length, g);
  }

  static ClassicalCode repetition(int length) { return ClassicalCode(length, {BitVector::ones(length)}); }

  static ClassicalCode even_weight(int length) {
    std::vector<BitVector> g;
    for (int i = 1; i < length; ++i)
      g.push_back(BitVector::unit(length, i) ^ BitVector::unit(length, i + 1));
    return ClassicalCode(length, g);
  }

  int length() const { return n_; }
  int dim() const { return static_cast<int>(gen_.size()); }
  const std::vector<BitVector>& generators() const { return gen_; }

  Gf2Matrix generator_matrix() const { return Gf2Matrix(gen_, n_); }

  /// Reduces v against the canonical generator; zero iff v is a codeword.
  BitVector reduce(BitVector v) const {
    for (const auto& g : gen_) {
      const int piv = leading_position(g);
      if (v.get(piv)) v ^= g;
    }
    return v;
  }

  bool contains(const BitVector& v) const { return reduce(v).is_zero(); }

  bool contains(const ClassicalCode& sub) const {
    return std::all_of(sub.gen_.begin(), sub.gen_.end(), [this](const BitVector& g) { return contains(g); });
  }

  /// The codeword selected by the bits of `coeffs` (bit i picks generator i).
  BitVector codeword(std::uint64_t coeffs) const {
    BitVector v(n_);
    for (std::size_t i = 0; i < gen_.size(); ++i)
      if ((coeffs >> i) & 1U) v ^= gen_[i];
    return v;
  }

  friend bool operator==(const ClassicalCode&, const ClassicalCode&) = default;

  static int leading_position(const BitVector& v) {
    for (int i = 1; i <= v.length(); ++i)
      if (v.get(i)) return i;
    return 0;
  }

private:
  int n_ = 0;
  std::vector<BitVector> gen_;
};

/// Orthogonal complement under the standard dot product.
inline ClassicalCode dual_code(const ClassicalCode& c) {
  const int n = c.length();
  const auto& g = c.generators();
  std::vector<int> pivots;
  std::vector<bool> is_pivot(static_cast<std::size_t>(n + 1), false);
  for (const auto& row : g) {
    const int p = ClassicalCode::leading_position(row);
    pivots.push_back(p);
    is_pivot[static_cast<std::size_t>(p)] = true;
  }
  // For each free column f, the null vector sets f and every pivot whose row
  // has a 1 in column f.
  std::vector<BitVector> basis;
  for (int f = 1; f <= n; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    BitVector v = BitVector::unit(n, f);
    for (std::size_t r = 0; r < g.size(); ++r)
      if (g[r].get(f)) v.set(pivots[r]);
    basis.push_back(v);
  }
  return ClassicalCode(n, basis);
}

inline ClassicalCode code_sum(const ClassicalCode& a, const ClassicalCode& b) {
  if (a.length() != b.length()) throw std::invalid_argument("code length mismatch in code_sum");
  std::vector<BitVector> g = a.generators();
  g.insert(g.end(), b.generators().begin(), b.generators().end());
  return ClassicalCode(a.length(), g);
}

inline constexpr int kMaxEnumerationDim = 24;

/// Minimum Hamming weight over the nonzero codewords of c, or over c \ exclude
/// when an exclusion subcode is given. Exhaustive; dim c must not exceed 24.
inline int min_weight(const ClassicalCode& c, const ClassicalCode* exclude = nullptr) {
  if (c.dim() < 1) throw std::invalid_argument("min_weight of the zero code");
  if (c.dim() > kMaxEnumerationDim)
    throw std::length_error("min_weight: code dimension " + std::to_string(c.dim()) +
                            " exceeds the exhaustive bound of 24");
  if (exclude != nullptr) {
    if (exclude->length() != c.length() || !c.contains(*exclude))
      throw std::invalid_argument("min_weight: exclusion is not a subcode");
    if (exclude->dim() == c.dim()) throw std::domain_error("min_weight: code minus exclusion is empty");
  }
  // Gray-code walk over all 2^dim codewords.
  const auto& g = c.generators();
  BitVector v(c.length());
  int best = c.length() + 1;
  const std::uint64_t total = std::uint64_t{1} << c.dim();
  for (std::uint64_t i = 1; i < total; ++i) {
    v ^= g[static_cast<std::size_t>(std::countr_zero(i))];
    const int w = v.weight();
    if (w >= best) continue;
    if (exclude != nullptr && exclude->contains(v)) continue;
    best = w;
  }
  return best;
}

/// Smallest w <= max_weight such that some weight-w vector lies in c (and
/// outside `exclude`, if given), found by trying every support of size w in
/// turn; 0 if there is none. Complements min_weight() for high-dimension codes
/// of small distance.
inline int min_weight_by_support(const ClassicalCode& c, int max_weight, const ClassicalCode* exclude = nullptr) {
  const int n = c.length();
  for (int w = 1; w <= std::min(max_weight, n); ++w) {
    std::vector<int> pos(static_cast<std::size_t>(w));
    for (int i = 0; i < w; ++i) pos[static_cast<std::size_t>(i)] = i + 1;
    while (true) {
      BitVector v(n);
      for (int p : pos) v.set(p);
      if (c.contains(v) && (exclude == nullptr || !exclude->contains(v))) return w;
      int i = w - 1;
      while (i >= 0 && pos[static_cast<std::size_t>(i)] == n - w + i + 1) --i;
      if (i < 0) break;
      ++pos[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < w; ++j) pos[static_cast<std::size_t>(j)] = pos[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return 0;
}

}  // namespace phantom

#endif  // PHANTOM_GF2_HPP
