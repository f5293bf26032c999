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

/// \file suites.hpp
/// \brief Verification suites run by the command-line tool.

#ifndef PHANTOM_SUITES_HPP
#define PHANTOM_SUITES_HPP

#include <cmath>
#include <random>
#include <string>
#include <utility>

#include "css.hpp"
#include "gl.hpp"
#include "perm.hpp"
#include "pg32.hpp"
#include "pg_code.hpp"
#include "reed_muller.hpp"
#include "report.hpp"
#include "statevector.hpp"

namespace phantom::suites {

using Outcome = std::pair<bool, std::optional<std::string>>;

inline Outcome outcome(bool pass, std::string witness = {}) {
  return {pass, witness.empty() ? std::nullopt : std::optional<std::string>(std::move(witness))};
}

inline std::string fmt(double v) {
  std::ostringstream s;
  s << v;
  return s.str();
}

/// Lines as sorted point numerals, acted on by a permutation of the 15 points.
inline std::vector<int> line_numerals(const pg32::Subspace& l) {
  std::vector<int> out;
  for (const auto& p : l) out.push_back(static_cast<int>(p.packed()));
  return out;
}

inline std::vector<int> act_on_line(const Permutation& g, const std::vector<int>& l) {
  std::vector<int> out;
  for (int p : l) out.push_back(g(p));
  std::sort(out.begin(), out.end());
  return out;
}

inline BitVector act_on_bipartition(const Permutation& g, const BitVector& w) {
  return pg32::canonical_bipartition(act_on_bitvector(g, w));
}

inline VerificationReport verify_tables(std::uint64_t seed) {
  VerificationReport rep("tables");
  rep.run("phi.closure", "phi generator images close to a group of order |GL_4(F2)| = 20160", [] {
    std::vector<Permutation> gens;
    for (const auto& l : gl::adjacent_letters(4)) gens.push_back(gl::phi_generator_images().at(l));
    const auto order = PermGroup::closure(gens).order();
    return outcome(order == gl::gl_order(4), "order " + std::to_string(order));
  });
  rep.run("phi.relations", "phi images satisfy the Steinberg relations", [] {
    const auto bad = gl::presentation_violations(4, gl::phi_transvection_images(), Permutation::identity(8));
    return outcome(bad.empty(), bad.empty() ? "" : bad.front());
  });
  rep.run("phi.even", "every phi generator image is even", [] {
    for (const auto& [l, p] : gl::phi_generator_images())
      if (!p.is_even()) return outcome(false, p.to_cycle_string());
    return outcome(true);
  });
  rep.run("phi.homomorphism", "phi(gh) = phi(g) phi(h) on 500 random pairs", [seed] {
    const auto& group = gl::Phi::instance().gl4();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, group.order() - 1);
    for (int t = 0; t < 500; ++t) {
      const auto g = gl::from_point_permutation(group.element(pick(rng)), 4);
      const auto h = gl::from_point_permutation(group.element(pick(rng)), 4);
      if (gl::phi(g * h) != gl::phi(g) * gl::phi(h)) return outcome(false, "trial " + std::to_string(t));
    }
    return outcome(true);
  });
  rep.run("phi.duality", "tau_c phi(g) tau_c^-1 = phi(g^-T) on the six generators", [] {
    const Permutation& tau = gl::duality_permutation();
    for (const auto& l : gl::adjacent_letters(4)) {
      const auto g = gl::transvection(l, 4);
      if (tau * gl::phi(g) * tau.inverse() != gl::phi(gl::dual_element(g)))
        return outcome(false, "g" + std::to_string(l.i) + std::to_string(l.j));
    }
    return outcome(true);
  });
  rep.run("stab.line", "Stab(l0) in GL_4(F2) has order 576", [] {
    const auto& group = gl::Phi::instance().gl4();
    const auto l0 = line_numerals(pg32::reference_line());
    const auto r = orbit_and_stabilizer(group, l0, act_on_line);
    const auto direct = count_stabilizer(group, l0, act_on_line);
    return outcome(r.orbit.size() == 35 && r.stabilizer_order == 576 && direct == 576,
                   "orbit " + std::to_string(r.orbit.size()) + ", stabiliser " + std::to_string(r.stabilizer_order));
  });
  rep.run("stab.bipartition", "Stab(w0) in A_8 has order 576", [] {
    std::vector<Permutation> gens;
    for (const auto& l : gl::adjacent_letters(4)) gens.push_back(gl::phi_generator_images().at(l));
    const auto a8 = PermGroup::closure(gens);
    const BitVector w0 = pg32::reference_string();
    const auto r = orbit_and_stabilizer(a8, w0, act_on_bipartition);
    const auto direct = count_stabilizer(a8, w0, act_on_bipartition);
    return outcome(r.orbit.size() == 35 && r.stabilizer_order == 576 && direct == 576,
                   "orbit " + std::to_string(r.orbit.size()) + ", stabiliser " + std::to_string(r.stabilizer_order));
  });
  rep.run("tables.fixture", "line and point tables agree with the recomputed geometry", [] {
    const auto r = pg32::verify_tables();
    if (r.ok()) return outcome(true);
    const auto& m = r.mismatches.front();
    return outcome(false, std::to_string(r.mismatches.size()) + " mismatches, first " + m.table + " row " +
                              std::to_string(m.row) + " " + m.field);
  });
  rep.run("tables.duality", "b(l^perp) = tau_c b(l) for all 35 lines", [] {
    const auto bad = pg32::duality_violations();
    return outcome(bad.empty(), bad.empty() ? "" : "line " + std::to_string(bad.front()));
  });
  rep.run("geometry.counts", "35 lines, 7 lines per point, 15 planes of 7 points", [] {
    const auto lines = pg32::all_lines();
    bool ok = lines.size() == 35;
    for (const auto& p : pg32::all_points())
      ok &= std::count_if(lines.begin(), lines.end(), [&p](const auto& l) { return std::binary_search(l.begin(), l.end(), p); }) == 7;
    for (const auto& pl : pg32::all_planes()) ok &= pl.size() == 7;
    return outcome(ok);
  });
  rep.run("geometry.isotropic", "exactly 7 isotropic points, all of even weight", [] {
    int count = 0;
    bool ok = true;
    for (const auto& p : pg32::all_points()) {
      count += pg32::is_isotropic(p);
      ok &= pg32::is_isotropic(p) == (p.weight() % 2 == 0);
    }
    return outcome(ok && count == 7, std::to_string(count) + " isotropic");
  });
  rep.run("bipartition.equivariance", "w(g l) = phi(g) w(l) for 6 generators and 35 lines", [] {
    for (const auto& l : gl::adjacent_letters(4)) {
      const auto g = gl::transvection(l, 4);
      for (const auto& e : pg32::line_table().entries())
        if (pg32::bipartition_of_line(pg32::image(g, e.points)) != act_on_bipartition(gl::phi(g), pg32::bipartition_of_line(e.id)))
          return outcome(false, "line " + std::to_string(e.id));
    }
    return outcome(true);
  });
  rep.finish();
  return rep;
}

inline VerificationReport verify_pg832() {
  VerificationReport rep("pg832");
  const pg::PgCode code = pg::build_pg_code();
  rep.run("gram", "logical basis is orthonormal", [&] {
    const double dev = (code.logical.gram() - Eigen::MatrixXcd::Identity(16, 16)).cwiseAbs().maxCoeff();
    return outcome(dev <= sv::kTolerance, "max deviation " + fmt(dev));
  });
  rep.run("gram.exact", "<a_x|a_y> = 7 or 1, <a_x|t> = 7, <t|t> = 35", [&] {
    for (int x = 1; x <= 15; ++x) {
      if (pg::exact_inner(code.point_stars[static_cast<std::size_t>(x)], code.uniform) != 7) return outcome(false, "<a_x|t>");
      for (int y = 1; y <= 15; ++y)
        if (pg::exact_inner(code.point_stars[static_cast<std::size_t>(x)], code.point_stars[static_cast<std::size_t>(y)]) != (x == y ? 7 : 1))
          return outcome(false, "<a_" + std::to_string(x) + "|a_" + std::to_string(y) + ">");
    }
    const auto tt = pg::exact_inner(code.uniform, code.uniform);
    return outcome(tt == 35, tt == 35 ? "" : "<t|t> = " + std::to_string(tt));
  });
  rep.run("stars.sum", "sum of the point stars is 3|t>", [&] {
    sv::IntegerState s(8);
    for (int x = 1; x <= 15; ++x) s += code.point_stars[static_cast<std::size_t>(x)];
    return outcome(s == std::int64_t{3} * code.uniform);
  });
  rep.run("planes", "|p_Pi> = (sum_{x in Pi} |a_x> - |t>)/2 for all 15 planes", [&] {
    for (const auto& plane : pg32::all_planes()) {
      sv::IntegerState rhs(8);
      for (const auto& x : plane) rhs += code.point_stars[x.packed()];
      rhs -= code.uniform;
      if (std::int64_t{2} * pg::plane_state(code, plane) != rhs) return outcome(false, pg32::join(plane));
    }
    return outcome(true);
  });
  rep.run("kl.weight1", "every weight-1 Pauli is the zero scalar on the code", [&] {
    const auto kl = sv::knill_laflamme_check(code.logical, 1);
    for (const auto& e : kl.entries)
      if (e.error.weight() == 1 && (!e.is_scalar || std::abs(e.scalar) > sv::kTolerance)) return outcome(false, e.error.to_string());
    return outcome(true);
  });
  rep.run("kl.z1z2", "<0|Z1Z2|0> = 1 and <t|Z1Z2|t>/35 = -1/7", [&] {
    const auto z12 = css::PauliLabel::from_string("ZZIIIIII");
    const double zero = std::real(sv::inner(code.logical[0], sv::apply_pauli(code.logical[0], z12)));
    const double t = static_cast<double>(pg::exact_inner(code.uniform, sv::apply_pauli(code.uniform, z12))) / 35.0;
    return outcome(std::abs(zero - 1) <= 1e-12 && std::abs(t + 1.0 / 7) <= 1e-12, fmt(zero) + ", " + fmt(t));
  });
  rep.run("kl.distance", "Knill-Laflamme distance is exactly 2", [&] {
    const auto kl = sv::knill_laflamme_check(code.logical, 2);
    return outcome(kl.distance == 2, "distance " + std::to_string(kl.distance));
  });
  const auto ph = pg::verify_phantom(code);
  for (const auto& c : ph.checks)
    rep.add("phantom." + c.id, "phi(g) realises g on the code", c.pass,
            c.detail.empty() ? std::nullopt : std::optional<std::string>(c.detail));
  const auto uc = pg::verify_s8_and_uc(code);
  rep.add("uc.invariant", "tau_c preserves the code space", uc.residual <= sv::kTolerance, "residual " + fmt(uc.residual));
  rep.add("uc.entries", "U_c entries are 1/3 on x^perp and -1/6 off it", uc.formula_deviation <= sv::kTolerance,
          "deviation " + fmt(uc.formula_deviation));
  rep.add("uc.square", "U_c^2 = 1", uc.square_deviation <= sv::kTolerance, "deviation " + fmt(uc.square_deviation));
  rep.add("uc.spectrum", "eigenvalue multiplicities (+1: 9, -1: 7)", uc.plus_multiplicity == 9 && uc.minus_multiplicity == 7,
          std::to_string(uc.plus_multiplicity) + ", " + std::to_string(uc.minus_multiplicity));
  rep.add("uc.trace", "trace over nonzero logicals is 1", std::abs(uc.nonzero_trace - 1) <= sv::kTolerance, fmt(uc.nonzero_trace));
  rep.run("t8", "T^8 acts as diag(1, -1, ..., -1)", [&] {
    const auto t = pg::verify_t8(code);
    const double dev = (t.logical - pg::reference_t8()).cwiseAbs().maxCoeff();
    return outcome(dev <= sv::kTolerance && t.residual <= sv::kTolerance, "deviation " + fmt(dev) + ", residual " + fmt(t.residual));
  });
  rep.run("s8", "S^8 acts as the logical identity", [&] {
    const auto s = pg::transversal_phase_action(code, std::numbers::pi / 2);
    const double dev = (s.logical - Eigen::MatrixXcd::Identity(16, 16)).cwiseAbs().maxCoeff();
    return outcome(dev <= sv::kTolerance && s.residual <= sv::kTolerance, "deviation " + fmt(dev));
  });
  rep.run("stabilisers", "J^2(J^2-20), S^8, X^8 cut out exactly the code space", [&] {
    const auto c = pg::stabilizer_characterization(code);
    return outcome(c.ok(), "dim " + std::to_string(c.intersection_dim) + ", projector deviation " + fmt(c.projector_deviation));
  });
  rep.run("hooks", "S_8 irreps (8-j, j) have dimensions 1, 7, 20, 28, 14", [] {
    return outcome(pg::two_row_irrep_dimensions(8) == std::vector<std::uint64_t>{1, 7, 20, 28, 14});
  });
  rep.run("s8.invariance", "all adjacent transpositions preserve the code space", [&] {
    double worst = 0;
    for (double r : pg::s8_residuals(code)) worst = std::max(worst, r);
    return outcome(worst <= sv::kTolerance, "worst residual " + fmt(worst));
  });
  rep.finish();
  return rep;
}

inline VerificationReport verify_hypercube(int k) {
  VerificationReport rep("hypercube" + std::to_string(k));
  const css::CssCode code = css::hypercube_code(k);
  const int n = (1 << k) - 1;
  rep.run("parameters", "[[2^k-1, k]] with one X stabiliser and Z stabilisers RM_*(k-2,k)", [&] {
    return outcome(code.n() == n && code.k() == k && code.x_stabilizers() == ClassicalCode::repetition(n) &&
                       code.z_stabilizers() == rm::rm_code(k - 2, k, rm::Variant::kShortened),
                   "n=" + std::to_string(code.n()) + " k=" + std::to_string(code.k()));
  });
  rep.run("pairing", "logical X and Z representatives pair to the identity", [&] {
    return outcome(code.pairing_matrix() == Gf2Matrix::identity(k));
  });
  rep.run("distance", "css_distance gives d = 2", [&] {
    const auto d = css::css_distance(code);
    return outcome(d.d == 2, "d_x=" + std::to_string(d.d_x) + " d_z=" + std::to_string(d.d_z));
  });
  rep.run("certificate", "every transvection is realised by a qubit permutation", [&] {
    const auto cert = css::phantom_certificate(code, k);
    const bool order_ok = cert.image_order == gl::gl_order(k);
    return outcome(cert.ok() && order_ok, std::to_string(cert.entries.size()) + " generators, image order " +
                                              std::to_string(cert.image_order) + (cert.image_order_by_formula ? " (formula)" : ""));
  });
  if (k == 3) {
    rep.run("faces", "Z stabilisers are the faces x_i = 1 and logical Z the edges at 111", [&] {
      const ClassicalCode faces(7, {BitVector::from_string("0001111"), BitVector::from_string("0110011"),
                                    BitVector::from_string("1010101")});
      const std::vector<BitVector> edges{BitVector::from_string("0010001"), BitVector::from_string("0000101"),
                                         BitVector::from_string("0000011")};
      return outcome(code.z_stabilizers() == faces && code.logical_z() == edges);
    });
    rep.run("cnot21", "swapping 101<->111 and 100<->110 is logical CNOT_21", [&] {
      const Permutation s = Permutation::from_cycles("(5 7)(4 6)", 7);
      const auto act = css::permutation_logical_action(code, s);
      const auto& lx = code.logical_x();
      const auto& lz = code.logical_z();
      const bool reps = act_on_bitvector(s, lx[1]) == (lx[0] ^ lx[1]) && act_on_bitvector(s, lz[0]) == (lz[0] ^ lz[1]);
      return outcome(act.ok() && *act.matrix == gl::transvection(1, 2, 3) && reps);
    });
    rep.run("states", "sigma_g acts on codewords as U_g with phase +1", [&] {
      const auto space = sv::css_codewords(code);
      for (const auto& l : gl::all_letters(3)) {
        const auto g = gl::transvection(l, 3);
        const Permutation s = css::sigma_for(g);
        const auto m = space.logical_matrix([&s](const sv::StateVector& v) { return sv::apply_permutation(v, s); });
        if ((m - sv::permutation_matrix(gl::cnot_circuit_unitary(g))).cwiseAbs().maxCoeff() > sv::kTolerance)
          return outcome(false, "g" + std::to_string(l.i) + std::to_string(l.j));
      }
      return outcome(true);
    });
    rep.run("kl", "state-level Knill-Laflamme distance is 2", [&] {
      return outcome(sv::knill_laflamme_check(sv::css_codewords(code), 2).distance == 2);
    });
  }
  rep.finish();
  return rep;
}

inline VerificationReport verify_classify() {
  VerificationReport rep("classify");
  rep.run("gl3", "GL_3(F2)-invariant codes of length 7 are the 6 RM*(r,3), RM_*(r,3)", [] {
    const auto codes = rm::invariant_codes(rm::projective_action_generators(3), 7);
    std::vector<ClassicalCode> expected;
    for (int r = 0; r <= 2; ++r) {
      expected.push_back(rm::rm_code(r, 3, rm::Variant::kPunctured));
      expected.push_back(rm::rm_code(r, 3, rm::Variant::kShortened));
    }
    bool all = codes.size() == 6;
    for (const auto& e : expected) all &= std::find(codes.begin(), codes.end(), e) != codes.end();
    return outcome(all, std::to_string(codes.size()) + " codes");
  });
  rep.run("gl4", "GL_4(F2)-invariant codes of length 15 are the 8 RM*(r,4), RM_*(r,4)", [] {
    const auto codes = rm::invariant_codes(rm::projective_action_generators(4), 15);
    bool all = codes.size() == 8;
    for (int r = 0; r <= 3; ++r)
      for (auto v : {rm::Variant::kPunctured, rm::Variant::kShortened})
        all &= std::find(codes.begin(), codes.end(), rm::rm_code(r, 4, v)) != codes.end();
    return outcome(all, std::to_string(codes.size()) + " codes");
  });
  rep.run("a8", "A_8-invariant codes of length 8 are {0}, repetition, even weight, F2^8", [] {
    const auto codes = rm::invariant_codes(rm::alternating_generators(8), 8);
    const std::vector<ClassicalCode> expected{ClassicalCode::zero(8), ClassicalCode::repetition(8),
                                              ClassicalCode::even_weight(8), ClassicalCode::full(8)};
    return outcome(codes == expected, std::to_string(codes.size()) + " codes");
  });
  rep.run("uniqueness", "hypercube_code(3) is the only [[7,3,d>1]] CSS code from invariant codes", [] {
    const auto found = css::scan_css_pairs(rm::invariant_codes(rm::projective_action_generators(3), 7), 3);
    const auto classes = css::up_to_swap(found);
    const auto hc = css::hypercube_code(3);
    const bool in_class = std::all_of(found.begin(), found.end(), [&hc](const css::CssCode& c) {
      return c == hc || (c.c_x() == hc.c_z() && c.c_z() == hc.c_x());
    });
    const bool has_hc = std::find(found.begin(), found.end(), hc) != found.end();
    return outcome(classes.size() == 1 && in_class && has_hc,
                   std::to_string(found.size()) + " ordered pairs, " + std::to_string(classes.size()) + " up to X/Z swap");
  });
  rep.run("rm.duality", "RM*(r,m)^perp = RM_*(m-1-r,m) for m <= 5", [] {
    for (int m = 1; m <= 5; ++m)
      for (int r = 0; r < m; ++r)
        if (!rm::verify_rm_duality(r, m)) return outcome(false, "r=" + std::to_string(r) + " m=" + std::to_string(m));
    return outcome(true);
  });
  rep.finish();
  return rep;
}

inline VerificationReport verify_nogo() {
  VerificationReport rep("nogo");
  const auto nogo = css::stabilizer_nogo_8_4();
  for (const auto& c : nogo.cases)
    rep.add("r" + std::to_string(c.r), c.kind == "singleton" ? "subsystem Singleton bound violated" : "invariant dimensions too small",
            c.contradiction, c.text);
  rep.add("mu.gl3", "168 does not divide 6!, so GL_3(F2) has no action on 6 points",
          !lagrange_embedding_obstruction(168, 6));
  rep.add("mu.a8", "20160 does not divide 7!, so A_8 has no action on 7 points",
          !lagrange_embedding_obstruction(20160, 7));
  rep.finish();
  return rep;
}

inline VerificationReport verify_all(std::uint64_t seed) {
  VerificationReport all("all");
  for (const auto& r : {verify_tables(seed), verify_pg832(), verify_hypercube(3), verify_hypercube(4), verify_hypercube(5),
                        verify_classify(), verify_nogo()})
    all.merge(r);
  all.finish();
  return all;
}

}  // namespace phantom::suites

#endif  // PHANTOM_SUITES_HPP
