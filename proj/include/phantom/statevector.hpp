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

/// \file statevector.hpp
/// \brief Dense n-qubit states (n <= 12): permutations, Paulis, phases,
/// Knill-Laflamme sweeps, the collective-spin Casimir, and CSS codewords.
///
/// Basis state s is stored at index s.packed(), so qubit 1 is the most
/// significant bit of the index, as in gf2.hpp.

#ifndef PHANTOM_STATEVECTOR_HPP
#define PHANTOM_STATEVECTOR_HPP

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "css.hpp"
#include "gf2.hpp"
#include "perm.hpp"

namespace phantom::sv {

using Complex = std::complex<double>;

inline constexpr int kMaxQubits = 12;
inline constexpr double kTolerance = 1e-9;

/// Amplitudes over the 2^n computational basis states. T is
/// std::complex<double> for physical states or std::int64_t for exact
/// unnormalised integer combinations.
template <typename T>
class BasicState {
public:
  BasicState() = default;

  explicit BasicState(int n) : n_(n) {
    if (n < 1 || n > kMaxQubits) throw std::length_error("state vectors support 1 <= n <= 12 qubits");
    amp_.assign(std::size_t{1} << n, T{});
  }

  static BasicState basis(const BitVector& s) {
    BasicState psi(s.length());
    psi.amp_[s.packed()] = T{1};
    return psi;
  }

  int num_qubits() const { return n_; }
  std::size_t size() const { return amp_.size(); }
  const T& operator[](std::size_t i) const { return amp_[i]; }
  T& operator[](std::size_t i) { return amp_[i]; }
  const T& at(const BitVector& s) const { return amp_.at(s.packed()); }
  T& at(const BitVector& s) { return amp_.at(s.packed()); }
  const std::vector<T>& amplitudes() const { return amp_; }

  BasicState& operator+=(const BasicState& o) {
    check_same(o);
    for (std::size_t i = 0; i < amp_.size(); ++i) amp_[i] += o.amp_[i];
    return *this;
  }
  BasicState& operator-=(const BasicState& o) {
    check_same(o);
    for (std::size_t i = 0; i < amp_.size(); ++i) amp_[i] -= o.amp_[i];
    return *this;
  }
  BasicState& operator*=(const T& c) {
    for (auto& a : amp_) a *= c;
    return *this;
  }
  friend BasicState operator+(BasicState a, const BasicState& b) { return a += b; }
  friend BasicState operator-(BasicState a, const BasicState& b) { return a -= b; }
  friend BasicState operator*(const T& c, BasicState a) { return a *= c; }

  friend bool operator==(const BasicState&, const BasicState&) = default;

  void check_same(const BasicState& o) const {
    if (n_ != o.n_) throw std::invalid_argument("state vectors differ in qubit count");
  }

private:
  int n_ = 0;
  std::vector<T> amp_;
};

using StateVector = BasicState<Complex>;
using IntegerState = BasicState<std::int64_t>;

/// <a|b>.
inline Complex inner(const StateVector& a, const StateVector& b) {
  a.check_same(b);
  Complex s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

/// <a|b>, exact.
inline std::int64_t inner(const IntegerState& a, const IntegerState& b) {
  a.check_same(b);
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline double norm(const StateVector& a) { return std::sqrt(std::real(inner(a, a))); }

inline StateVector normalized(StateVector a) {
  const double r = norm(a);
  if (r == 0) throw std::domain_error("cannot normalise the zero vector");
  return (1.0 / r) * std::move(a);
}

inline StateVector to_complex(const IntegerState& a, double scale = 1.0) {
  StateVector out(a.num_qubits());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = scale * static_cast<double>(a[i]);
  return out;
}

/// max_i |a_i - b_i|.
inline double max_abs_diff(const StateVector& a, const StateVector& b) {
  a.check_same(b);
  double m = 0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

/// Output amplitude at sigma.s equals input amplitude at s.
template <typename T>
BasicState<T> apply_permutation(const BasicState<T>& psi, const Permutation& sigma) {
  const int n = psi.num_qubits();
  if (sigma.degree() != n) throw std::invalid_argument("apply_permutation: degree mismatch");
  BasicState<T> out(n);
  for (std::size_t s = 0; s < psi.size(); ++s)
    out[act_on_bitvector(sigma, BitVector(n, s)).packed()] = psi[s];
  return out;
}

/// X^x Z^z on each qubit (Z first), no factors of i.
template <typename T>
BasicState<T> apply_pauli(const BasicState<T>& psi, const css::PauliLabel& p) {
  const int n = psi.num_qubits();
  if (p.length() != n) throw std::invalid_argument("apply_pauli: label length mismatch");
  BasicState<T> out(n);
  const std::uint64_t a = p.x.packed();
  for (std::size_t s = 0; s < psi.size(); ++s) {
    const bool minus = (BitVector(n, s) & p.z).weight() % 2 == 1;
    out[s ^ a] = minus ? T{} - psi[s] : psi[s];
  }
  return out;
}

/// diag(1, e^{i theta}) on every qubit.
inline StateVector apply_transversal_phase(const StateVector& psi, double theta) {
  StateVector out = psi;
  for (std::size_t s = 0; s < psi.size(); ++s)
    out[s] *= std::polar(1.0, theta * std::popcount(static_cast<std::uint64_t>(s)));
  return out;
}

/// J^2 = J_z^2 + (J+ J- + J- J+)/2 with J_z|s> = (n - 2|s|)/2 |s>; J+ turns
/// a 1 into a 0 and J- a 0 into a 1.
inline StateVector collective_casimir_apply(const StateVector& psi) {
  const int n = psi.num_qubits();
  auto jz = [n](std::size_t s) { return 0.5 * (n - 2 * std::popcount(static_cast<std::uint64_t>(s))); };
  auto ladder = [n](const StateVector& in, bool raise) {
    StateVector out(n);
    for (std::size_t s = 0; s < in.size(); ++s) {
      if (in[s] == Complex{}) continue;
      for (int q = 0; q < n; ++q) {
        const std::size_t bit = std::size_t{1} << q;
        if (raise == static_cast<bool>(s & bit)) out[s ^ bit] += in[s];
      }
    }
    return out;
  };
  StateVector out(n);
  for (std::size_t s = 0; s < psi.size(); ++s) out[s] = jz(s) * jz(s) * psi[s];
  const StateVector pm = ladder(ladder(psi, false), true);
  const StateVector mp = ladder(ladder(psi, true), false);
  for (std::size_t s = 0; s < psi.size(); ++s) out[s] += 0.5 * (pm[s] + mp[s]);
  return out;
}

/// An orthonormal list of states spanning a code space.
class CodeSpace {
public:
  CodeSpace() = default;
  explicit CodeSpace(std::vector<StateVector> basis) : basis_(std::move(basis)) {
    if (basis_.empty()) throw std::invalid_argument("code space needs at least one state");
    for (const auto& b : basis_) basis_.front().check_same(b);
  }

  int num_qubits() const { return basis_.front().num_qubits(); }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<StateVector>& basis() const { return basis_; }
  const StateVector& operator[](std::size_t i) const { return basis_.at(i); }

  Eigen::MatrixXcd gram() const {
    return logical_matrix([](const StateVector& s) { return s; });
  }

  /// M_ij = <b_i| op |b_j>.
  Eigen::MatrixXcd logical_matrix(const std::function<StateVector(const StateVector&)>& op) const {
    const int k = dim();
    Eigen::MatrixXcd m(k, k);
    for (int j = 0; j < k; ++j) {
      const StateVector img = op(basis_[static_cast<std::size_t>(j)]);
      for (int i = 0; i < k; ++i) m(i, j) = inner(basis_[static_cast<std::size_t>(i)], img);
    }
    return m;
  }

  /// || psi - P psi || for the projector P onto the span.
  double residual(const StateVector& psi) const {
    StateVector r = psi;
    for (const auto& b : basis_) r -= inner(b, psi) * b;
    return norm(r);
  }

  /// Largest residual of op applied to each basis state.
  double invariance_residual(const std::function<StateVector(const StateVector&)>& op) const {
    double worst = 0;
    for (const auto& b : basis_) worst = std::max(worst, residual(op(b)));
    return worst;
  }

private:
  std::vector<StateVector> basis_;
};

/// All labels of weight exactly w on n qubits, in a fixed order.
inline std::vector<css::PauliLabel> paulis_of_weight(int n, int w) {
  std::vector<css::PauliLabel> out;
  if (w == 0) return {css::PauliLabel::identity(n)};
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    if (std::popcount(mask) != w) continue;
    const BitVector supp(n, mask);
    const auto pos = supp.support();
    std::uint64_t count = 1;
    for (int i = 0; i < w; ++i) count *= 3;
    for (std::uint64_t c = 0; c < count; ++c) {
      css::PauliLabel p = css::PauliLabel::identity(n);
      std::uint64_t t = c;
      for (int q : pos) {
        const int kind = static_cast<int>(t % 3);
        t /= 3;
        if (kind != 1) p.x.set(q);
        if (kind != 0) p.z.set(q);
      }
      out.push_back(p);
    }
  }
  return out;
}

struct KlEntry {
  css::PauliLabel error;
  Complex scalar;
  double deviation = 0;
  bool is_scalar = false;
};

struct KlReport {
  std::vector<KlEntry> entries;
  std::vector<KlEntry> violations;
  /// Smallest weight of a violating label, or 0 when none was found.
  int distance = 0;
  bool all_scalar() const { return violations.empty(); }
};

/// Checks Knill-Laflamme for every Pauli label of weight 0..max_weight.
inline KlReport knill_laflamme_check(const CodeSpace& q, int max_weight, double tol = kTolerance) {
  const int n = q.num_qubits();
  if (max_weight < 0 || max_weight > n) throw std::out_of_range("max_weight must be in [0, n]");
  KlReport rep;
  for (int w = 0; w <= max_weight; ++w) {
    for (const auto& e : paulis_of_weight(n, w)) {
      const Eigen::MatrixXcd m = q.logical_matrix([&e](const StateVector& s) { return apply_pauli(s, e); });
      const Complex c = m.trace() / static_cast<double>(q.dim());
      const double dev = (m - c * Eigen::MatrixXcd::Identity(q.dim(), q.dim())).norm();
      KlEntry entry{e, c, dev, dev <= tol};
      if (!entry.is_scalar) {
        if (rep.distance == 0) rep.distance = w;
        rep.violations.push_back(entry);
      }
      rep.entries.push_back(std::move(entry));
    }
  }
  return rep;
}

/// One codeword per logical Z pattern x in F2^k, indexed by the numeral of x
/// (x_1 most significant): uniform superposition of v_x + C_X^perp with
/// v_x = sum_i x_i X_i.
inline CodeSpace css_codewords(const css::CssCode& code) {
  const int n = code.n();
  const int k = code.k();
  if (n > kMaxQubits) throw std::length_error("css_codewords supports n <= 12");
  const ClassicalCode& stab = code.x_stabilizers();
  const double amp = 1.0 / std::sqrt(static_cast<double>(std::uint64_t{1} << stab.dim()));
  std::vector<StateVector> basis;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << k); ++x) {
    BitVector v(n);
    for (int i = 1; i <= k; ++i)
      if ((x >> (k - i)) & 1U) v ^= code.logical_x()[static_cast<std::size_t>(i - 1)];
    StateVector psi(n);
    for (std::uint64_t c = 0; c < (std::uint64_t{1} << stab.dim()); ++c) psi.at(v ^ stab.codeword(c)) += amp;
    basis.push_back(std::move(psi));
  }
  return CodeSpace(std::move(basis));
}

/// The 2^k x 2^k permutation matrix with |x> -> |image[x]>.
inline Eigen::MatrixXcd permutation_matrix(const std::vector<std::size_t>& image) {
  const auto d = static_cast<Eigen::Index>(image.size());
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
  for (Eigen::Index x = 0; x < d; ++x) m(static_cast<Eigen::Index>(image[static_cast<std::size_t>(x)]), x) = 1.0;
  return m;
}

/// Matrix of a linear map on n qubits, built column by column.
inline Eigen::MatrixXcd dense_operator(int n, const std::function<StateVector(const StateVector&)>& op) {
  const auto d = static_cast<Eigen::Index>(std::size_t{1} << n);
  Eigen::MatrixXcd m(d, d);
  for (Eigen::Index j = 0; j < d; ++j) {
    const StateVector col = op(StateVector::basis(BitVector(n, static_cast<std::uint64_t>(j))));
    for (Eigen::Index i = 0; i < d; ++i) m(i, j) = col[static_cast<std::size_t>(i)];
  }
  return m;
}

}  // namespace phantom::sv

#endif  // PHANTOM_STATEVECTOR_HPP
