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

/// \file pg_code.hpp
/// \brief The ((8, 16, 2)) code built from the lines of PG(3,2), and checks
/// of its phantom property, transversal gates and symmetry.
///
/// Integer states are stored in units of 1/sqrt(2): the line state |l> is the
/// integer state with 1 at b(l) and at its complement, so every exact inner
/// product below is half the integer one.

#ifndef PHANTOM_PG_CODE_HPP
#define PHANTOM_PG_CODE_HPP

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "gl.hpp"
#include "perm.hpp"
#include "pg32.hpp"
#include "statevector.hpp"

namespace phantom::pg {

inline constexpr int kQubits = 8;
inline constexpr int kLogicalDim = 16;

inline const double kAlpha = 1.0 / std::sqrt(6.0);
inline const double kBeta = -(1.0 / 5.0) * (1.0 / std::sqrt(6.0) - 1.0 / std::sqrt(21.0));

struct PgCode {
  /// Indexed by line id - 1.
  std::vector<sv::IntegerState> lines;
  /// Indexed by point numeral 1..15; entry 0 is unused.
  std::vector<sv::IntegerState> point_stars;
  sv::IntegerState uniform;
  /// |0> first, then |x> for x = 1..15 by numeral.
  sv::CodeSpace logical;

  sv::StateVector line_state(int id) const { return sv::to_complex(lines.at(static_cast<std::size_t>(id - 1)), std::numbers::sqrt2 / 2); }
};

/// Half of the integer inner product, i.e. the inner product of the states.
inline std::int64_t exact_inner(const sv::IntegerState& a, const sv::IntegerState& b) {
  const std::int64_t twice = sv::inner(a, b);
  if (twice % 2 != 0) throw std::logic_error("integer inner product is odd");
  return twice / 2;
}

inline PgCode build_pg_code() {
  if (!pg32::verify_tables().ok()) throw std::runtime_error("PG(3,2) table verification failed");
  PgCode code;
  const auto& table = pg32::line_table();
  code.uniform = sv::IntegerState(kQubits);
  code.point_stars.assign(pg32::kNumPoints + 1, sv::IntegerState(kQubits));
  for (const auto& e : table.entries()) {
    const BitVector b = pg32::line_representative(e.word);
    sv::IntegerState l(kQubits);
    l.at(b) = 1;
    l.at(b.complement()) = 1;
    code.uniform += l;
    for (const auto& p : e.points) code.point_stars[p.packed()] += l;
    code.lines.push_back(std::move(l));
  }
  std::vector<sv::StateVector> basis;
  sv::StateVector zero(kQubits);
  zero.at(BitVector(kQubits)) = std::numbers::sqrt2 / 2;
  zero.at(BitVector::ones(kQubits)) = std::numbers::sqrt2 / 2;
  basis.push_back(zero);
  const double unit = std::numbers::sqrt2 / 2;
  for (int x = 1; x <= pg32::kNumPoints; ++x)
    basis.push_back(kAlpha * sv::to_complex(code.point_stars[static_cast<std::size_t>(x)], unit) +
                    kBeta * sv::to_complex(code.uniform, unit));
  code.logical = sv::CodeSpace(std::move(basis));
  return code;
}

/// Plane state sum over lines inside the plane, as an integer state.
inline sv::IntegerState plane_state(const PgCode& code, const pg32::Subspace& plane) {
  sv::IntegerState p(kQubits);
  for (const auto& e : pg32::line_table().entries())
    if (pg32::contains_all(plane, e.points)) p += code.lines[static_cast<std::size_t>(e.id - 1)];
  return p;
}

inline std::string format_double(double v) {
  std::ostringstream s;
  s << v;
  return s.str();
}

struct Check {
  std::string id;
  bool pass = false;
  std::string detail;
};

struct PhantomReport {
  std::vector<Check> checks;
  /// Logical matrix of sigma_g per generator, in adjacent_letters(4) order.
  std::vector<Eigen::MatrixXcd> logical_matrices;
  bool ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
  }
};

/// For each adjacent transvection g: phi(g) maps every line state and every
/// logical state to its image under g, and the induced logical matrix is
/// the CNOT-circuit unitary of g.
inline PhantomReport verify_phantom(const PgCode& code, double tol = 1e-12) {
  PhantomReport rep;
  const auto& table = pg32::line_table();
  for (const auto& letter : gl::adjacent_letters(4)) {
    const gl::GlElement g = gl::transvection(letter, 4);
    const Permutation sigma = gl::phi(g);
    const std::string name = "g" + std::to_string(letter.i) + std::to_string(letter.j);

    std::string bad_line;
    for (const auto& e : table.entries()) {
      const int target = table.id_of(pg32::image(g, e.points));
      if (sv::apply_permutation(code.lines[static_cast<std::size_t>(e.id - 1)], sigma) !=
          code.lines[static_cast<std::size_t>(target - 1)]) {
        bad_line = "line " + std::to_string(e.id);
        break;
      }
    }
    rep.checks.push_back({name + " lines", bad_line.empty(), bad_line});

    double worst = 0;
    double worst_phase = 0;
    for (std::uint64_t x = 0; x < kLogicalDim; ++x) {
      const std::uint64_t gx = g.apply(BitVector(4, x)).packed();
      const sv::StateVector img = sv::apply_permutation(code.logical[x], sigma);
      worst = std::max(worst, sv::max_abs_diff(img, code.logical[gx]));
      worst_phase = std::max(worst_phase, std::abs(sv::inner(code.logical[gx], img) - 1.0));
    }
    rep.checks.push_back({name + " logical states", worst <= tol && worst_phase <= tol,
                          "max amplitude error " + format_double(worst) + ", phase error " + format_double(worst_phase)});

    const Eigen::MatrixXcd m =
        code.logical.logical_matrix([&sigma](const sv::StateVector& s) { return sv::apply_permutation(s, sigma); });
    const double dev = (m - sv::permutation_matrix(gl::cnot_circuit_unitary(g))).norm();
    rep.checks.push_back({name + " logical matrix", dev <= 1e-9, "deviation " + format_double(dev)});
    rep.logical_matrices.push_back(m);
  }
  return rep;
}

/// (U_c)_{xy} for nonzero x, y: 1/3 if y in x^perp, -1/6 otherwise; U_c
/// fixes |0>.
inline Eigen::MatrixXd reference_uc() {
  Eigen::MatrixXd u = Eigen::MatrixXd::Zero(kLogicalDim, kLogicalDim);
  u(0, 0) = 1;
  for (std::uint64_t x = 1; x < kLogicalDim; ++x)
    for (std::uint64_t y = 1; y < kLogicalDim; ++y)
      u(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(y)) = BitVector(4, x).dot(BitVector(4, y)) ? -1.0 / 6 : 1.0 / 3;
  return u;
}

struct UcReport {
  Eigen::MatrixXcd uc;
  double residual = 0;
  double formula_deviation = 0;
  double square_deviation = 0;
  int plus_multiplicity = 0;
  int minus_multiplicity = 0;
  double nonzero_trace = 0;
  bool ok() const {
    return residual <= sv::kTolerance && formula_deviation <= sv::kTolerance && square_deviation <= sv::kTolerance &&
           plus_multiplicity == 9 && minus_multiplicity == 7 && std::abs(nonzero_trace - 1.0) <= sv::kTolerance;
  }
};

inline UcReport verify_s8_and_uc(const PgCode& code) {
  UcReport rep;
  const Permutation& tau = gl::duality_permutation();
  auto op = [&tau](const sv::StateVector& s) { return sv::apply_permutation(s, tau); };
  rep.residual = code.logical.invariance_residual(op);
  rep.uc = code.logical.logical_matrix(op);
  rep.formula_deviation = (rep.uc - reference_uc().cast<sv::Complex>()).cwiseAbs().maxCoeff();
  rep.square_deviation =
      (rep.uc * rep.uc - Eigen::MatrixXcd::Identity(kLogicalDim, kLogicalDim)).cwiseAbs().maxCoeff();
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(rep.uc);
  for (Eigen::Index i = 0; i < kLogicalDim; ++i) {
    const double v = eig.eigenvalues()(i);
    if (std::abs(v - 1) <= 1e-9) ++rep.plus_multiplicity;
    if (std::abs(v + 1) <= 1e-9) ++rep.minus_multiplicity;
  }
  rep.nonzero_trace = std::real(rep.uc.trace() - rep.uc(0, 0));
  return rep;
}

struct PhaseGateReport {
  Eigen::MatrixXcd logical;
  double residual = 0;
};

/// diag(1, e^{i theta}) on all eight qubits, restricted to the code.
inline PhaseGateReport transversal_phase_action(const PgCode& code, double theta) {
  auto op = [theta](const sv::StateVector& s) { return sv::apply_transversal_phase(s, theta); };
  return {code.logical.logical_matrix(op), code.logical.invariance_residual(op)};
}

/// diag(1, -1, ..., -1).
inline Eigen::MatrixXcd reference_t8() {
  Eigen::MatrixXcd m = -Eigen::MatrixXcd::Identity(kLogicalDim, kLogicalDim);
  m(0, 0) = 1;
  return m;
}

inline PhaseGateReport verify_t8(const PgCode& code) { return transversal_phase_action(code, std::numbers::pi / 4); }

/// J^2 (J^2 - 20) on 8 qubits as a dense matrix.
inline Eigen::MatrixXcd casimir_constraint_matrix() {
  const Eigen::MatrixXcd j2 = sv::dense_operator(kQubits, sv::collective_casimir_apply);
  return j2 * (j2 - 20.0 * Eigen::MatrixXcd::Identity(j2.rows(), j2.cols()));
}

struct CharacterizationReport {
  int intersection_dim = 0;
  double code_residual = 0;
  double projector_deviation = 0;
  bool ok() const {
    return intersection_dim == kLogicalDim && code_residual <= sv::kTolerance && projector_deviation <= sv::kTolerance;
  }
};

/// Common kernel of J^2(J^2 - 20), S^8 - 1 and X^8 - 1 on 256 dimensions,
/// found as the null space of the sum of A^dagger A over the three
/// constraints, compared with the code space.
inline CharacterizationReport stabilizer_characterization(const PgCode& code) {
  const Eigen::Index d = Eigen::Index{1} << kQubits;
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(d, d);
  const Eigen::MatrixXcd a = casimir_constraint_matrix();
  const Eigen::MatrixXcd s8 =
      sv::dense_operator(kQubits, [](const sv::StateVector& s) { return sv::apply_transversal_phase(s, std::numbers::pi / 2); }) - id;
  css::PauliLabel xall = css::PauliLabel::identity(kQubits);
  xall.x = BitVector::ones(kQubits);
  const Eigen::MatrixXcd x8 = sv::dense_operator(kQubits, [&xall](const sv::StateVector& s) { return sv::apply_pauli(s, xall); }) - id;
  const Eigen::MatrixXcd h = a.adjoint() * a + s8.adjoint() * s8 + x8.adjoint() * x8;
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(h);

  CharacterizationReport rep;
  const double scale = std::max(1.0, eig.eigenvalues().cwiseAbs().maxCoeff());
  Eigen::MatrixXcd kernel(d, 0);
  for (Eigen::Index i = 0; i < d; ++i) {
    if (std::abs(eig.eigenvalues()(i)) <= 1e-9 * scale) {
      kernel.conservativeResize(Eigen::NoChange, kernel.cols() + 1);
      kernel.col(kernel.cols() - 1) = eig.eigenvectors().col(i);
    }
  }
  rep.intersection_dim = static_cast<int>(kernel.cols());

  Eigen::MatrixXcd code_basis(d, kLogicalDim);
  for (int j = 0; j < kLogicalDim; ++j)
    for (Eigen::Index i = 0; i < d; ++i) code_basis(i, j) = code.logical[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
  rep.code_residual = (h * code_basis).cwiseAbs().maxCoeff();
  const Eigen::MatrixXcd pk = kernel * kernel.adjoint();
  const Eigen::MatrixXcd pc = code_basis * code_basis.adjoint();
  rep.projector_deviation = (pk - pc).cwiseAbs().maxCoeff();
  return rep;
}

/// Dimension of the S_n irrep of a partition, by the hook length formula.
inline std::uint64_t hook_length_dimension(const std::vector<int>& partition) {
  int n = 0;
  for (int p : partition) n += p;
  double dim = std::tgamma(n + 1.0);
  for (std::size_t r = 0; r < partition.size(); ++r)
    for (int c = 0; c < partition[r]; ++c) {
      int below = 0;
      for (std::size_t r2 = r + 1; r2 < partition.size() && partition[r2] > c; ++r2) ++below;
      dim /= partition[r] - c - 1 + below + 1;
    }
  return static_cast<std::uint64_t>(std::llround(dim));
}

/// Irreps (n - j, j) for j = 0..n/2 in the qubit permutation module.
inline std::vector<std::uint64_t> two_row_irrep_dimensions(int n) {
  std::vector<std::uint64_t> dims;
  for (int j = 0; 2 * j <= n; ++j) dims.push_back(hook_length_dimension(j == 0 ? std::vector<int>{n} : std::vector<int>{n - j, j}));
  return dims;
}

/// Residual of each adjacent transposition (i i+1) on the code space.
inline std::vector<double> s8_residuals(const PgCode& code) {
  std::vector<double> out;
  for (int i = 1; i < kQubits; ++i) {
    const Permutation t = Permutation::from_cycles("(" + std::to_string(i) + " " + std::to_string(i + 1) + ")", kQubits);
    out.push_back(code.logical.invariance_residual([&t](const sv::StateVector& s) { return sv::apply_permutation(s, t); }));
  }
  return out;
}

}  // namespace phantom::pg

#endif  // PHANTOM_PG_CODE_HPP
