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

/// \file serialize.hpp
/// \brief JSON and CSV forms of codes, the PG(3,2) tables and reports.
/// Bit strings are written with position 1 leftmost.

#ifndef PHANTOM_SERIALIZE_HPP
#define PHANTOM_SERIALIZE_HPP

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "css.hpp"
#include "pg32.hpp"
#include "pg_code.hpp"
#include "report.hpp"

namespace phantom::io {

using nlohmann::json;

inline json bitstrings(const std::vector<BitVector>& rows) {
  json out = json::array();
  for (const auto& r : rows) out.push_back(r.to_string());
  return out;
}

inline std::vector<BitVector> parse_bitstrings(const json& j) {
  std::vector<BitVector> out;
  for (const auto& s : j) out.push_back(BitVector::from_string(s.get<std::string>()));
  return out;
}

inline json certificate_json(const css::PhantomCertificate& cert) {
  json entries = json::array();
  for (const auto& e : cert.entries)
    entries.push_back({{"transvection", "g" + std::to_string(e.letter.i) + std::to_string(e.letter.j)},
                       {"matrix", e.g.matrix().to_strings()},
                       {"permutation", e.sigma.to_cycle_string()},
                       {"verified", e.verified}});
  return entries;
}

/// {n, k, stabilizer_x, stabilizer_z, logical_x, logical_z, certificate}.
inline json code_to_json(const css::CssCode& code, const css::PhantomCertificate* cert = nullptr) {
  json j{{"n", code.n()},
         {"k", code.k()},
         {"stabilizer_x", bitstrings(code.x_stabilizers().generators())},
         {"stabilizer_z", bitstrings(code.z_stabilizers().generators())},
         {"logical_x", bitstrings(code.logical_x())},
         {"logical_z", bitstrings(code.logical_z())},
         {"certificate", cert ? certificate_json(*cert) : json::array()}};
  if (cert) {
    j["certificate_convention"] = cert->convention;
    j["certificate_image_order"] = cert->image_order;
  }
  return j;
}

/// Inverse of code_to_json: C_X and C_Z are the duals of the stabiliser
/// spans, and the logical representatives are kept as written.
inline css::CssCode code_from_json(const json& j) {
  const int n = j.at("n").get<int>();
  const ClassicalCode sx(n, parse_bitstrings(j.at("stabilizer_x")));
  const ClassicalCode sz(n, parse_bitstrings(j.at("stabilizer_z")));
  css::CssCode code(dual_code(sx), dual_code(sz), parse_bitstrings(j.at("logical_x")), parse_bitstrings(j.at("logical_z")));
  if (code.k() != j.at("k").get<int>()) throw std::invalid_argument("k does not match the stabilisers");
  return code;
}

/// One row per operator: kind,index,bitstring.
inline std::string code_to_csv(const css::CssCode& code) {
  std::ostringstream out;
  out << "kind,index,bits\n";
  auto rows = [&out](const char* kind, const std::vector<BitVector>& v) {
    for (std::size_t i = 0; i < v.size(); ++i) out << kind << ',' << i + 1 << ',' << v[i].to_string() << '\n';
  };
  rows("stabilizer_x", code.x_stabilizers().generators());
  rows("stabilizer_z", code.z_stabilizers().generators());
  rows("logical_x", code.logical_x());
  rows("logical_z", code.logical_z());
  return out.str();
}

inline json complex_matrix(const Eigen::MatrixXcd& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back({m(i, c).real(), m(i, c).imag()});
    rows.push_back(row);
  }
  return rows;
}

inline std::string logical_label(std::size_t x) { return BitVector(4, x).to_string(); }

/// Codewords as sparse amplitude maps plus the U_c and T^8 logical matrices.
inline json pg_code_to_json(const pg::PgCode& code) {
  json words = json::array();
  for (std::size_t x = 0; x < pg::kLogicalDim; ++x) {
    json amps = json::object();
    const auto& psi = code.logical[x];
    for (std::size_t s = 0; s < psi.size(); ++s)
      if (std::abs(psi[s]) > 1e-15) amps[BitVector(pg::kQubits, s).to_string()] = {psi[s].real(), psi[s].imag()};
    words.push_back({{"logical", logical_label(x)}, {"amplitudes", amps}});
  }
  return {{"n", pg::kQubits},
          {"dimension", pg::kLogicalDim},
          {"codewords", words},
          {"U_c", complex_matrix(pg::verify_s8_and_uc(code).uc)},
          {"T8", complex_matrix(pg::verify_t8(code).logical)}};
}

/// logical,basis,re,im for every nonzero amplitude.
inline std::string pg_code_to_csv(const pg::PgCode& code) {
  std::ostringstream out;
  out.precision(17);
  out << "logical,basis,re,im\n";
  for (std::size_t x = 0; x < pg::kLogicalDim; ++x) {
    const auto& psi = code.logical[x];
    for (std::size_t s = 0; s < psi.size(); ++s)
      if (std::abs(psi[s]) > 1e-15)
        out << logical_label(x) << ',' << BitVector(pg::kQubits, s).to_string() << ',' << psi[s].real() << ','
            << psi[s].imag() << '\n';
  }
  return out.str();
}

/// The line table then the point table, recomputed from the geometry and
/// phi but laid out in the transcribed row order so the two can be diffed.
inline std::string tables_to_csv() {
  const auto& table = pg32::line_table();
  std::ostringstream out;
  out << "line,points,b,generators,dual\n";
  for (const auto& r : pg32::kLineTable) {
    const auto& e = table.entry(r.id);
    out << r.id << ',' << r.points[0] << ' ' << r.points[1] << ' ' << r.points[2] << ','
        << pg32::line_representative(e.word).to_string() << ',' << r.word << ','
        << table.id_of(pg32::dual_subspace(e.points)) << '\n';
  }
  out << "\npoint,lines,plane_points,plane_lines\n";
  for (const auto& r : pg32::kPointTable) {
    const pg32::Point x = pg32::point(r.point);
    std::vector<int> through, in_plane;
    const pg32::Subspace plane = pg32::dual_subspace({x});
    for (const auto& e : table.entries()) {
      if (std::binary_search(e.points.begin(), e.points.end(), x)) through.push_back(e.id);
      if (pg32::contains_all(plane, e.points)) in_plane.push_back(e.id);
    }
    // Plane points follow the transcribed listing where it agrees.
    std::vector<pg32::Point> ordered;
    for (auto p : r.plane_points)
      if (std::binary_search(plane.begin(), plane.end(), pg32::point(p))) ordered.push_back(pg32::point(p));
    for (const auto& p : plane)
      if (std::find(ordered.begin(), ordered.end(), p) == ordered.end()) ordered.push_back(p);
    out << r.point << ',' << pg32::join(through) << ',' << pg32::join(ordered) << ',' << pg32::join(in_plane) << '\n';
  }
  return out.str();
}

inline json report_to_json(const VerificationReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks()) {
    json e{{"id", c.id}, {"description", c.description}, {"status", c.pass ? "pass" : "fail"}};
    if (c.witness) e["witness"] = *c.witness;
    checks.push_back(e);
  }
  return {{"suite", r.suite()}, {"status", r.passed() ? "pass" : "fail"}, {"elapsed_ms", r.elapsed_ms()}, {"checks", checks}};
}

}  // namespace phantom::io

#endif  // PHANTOM_SERIALIZE_HPP
