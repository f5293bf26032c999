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

/// \file cli.hpp
/// \brief The `phantom` command line. Exit codes: 0 pass, 1 fail, 2 usage.

#ifndef PHANTOM_CLI_HPP
#define PHANTOM_CLI_HPP

#include <CLI11.hpp>

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "serialize.hpp"
#include "suites.hpp"

namespace phantom::cli {

inline constexpr int kPass = 0;
inline constexpr int kFail = 1;
inline constexpr int kUsage = 2;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline int hypercube_k(const std::optional<int>& k) {
  if (!k) throw UsageError("hypercube needs k");
  if (*k < 2 || *k > 6) throw UsageError("k must be in 2..6");
  return *k;
}

inline void reject_k(const std::string& target, const std::optional<int>& k) {
  if (k) throw UsageError(target + " takes no k");
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Phantom code construction and verification", "phantom"};
  app.require_subcommand(1);
  std::uint64_t seed = 0x5eed;
  app.add_option("--seed", seed, "seed for randomised property sampling");

  std::string target;
  std::optional<int> k;
  std::string format = "json";
  bool as_json = false;

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", target)->required()->check(CLI::IsMember({"all", "pg832", "hypercube", "tables", "classify", "nogo"}));
  verify->add_option("k", k, "hypercube dimension");
  verify->add_flag("--json", as_json, "print the report as JSON");

  auto* emit = app.add_subcommand("emit-code", "print a code");
  emit->add_option("code", target)->required()->check(CLI::IsMember({"pg832", "hypercube"}));
  emit->add_option("k", k, "hypercube dimension");
  emit->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

  auto* tables = app.add_subcommand("tables", "print the PG(3,2) line and point tables");
  std::string table_format = "csv";
  tables->add_option("--format", table_format)->check(CLI::IsMember({"csv"}));

  auto* distance = app.add_subcommand("distance", "CSS distance of a code");
  distance->add_option("code", target)->required()->check(CLI::IsMember({"hypercube"}));
  distance->add_option("k", k, "hypercube dimension")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  try {
    if (*verify) {
      VerificationReport rep("none");
      if (target == "hypercube") {
        rep = suites::verify_hypercube(hypercube_k(k));
      } else {
        reject_k(target, k);
        if (target == "all") rep = suites::verify_all(seed);
        else if (target == "pg832") rep = suites::verify_pg832();
        else if (target == "tables") rep = suites::verify_tables(seed);
        else if (target == "classify") rep = suites::verify_classify();
        else rep = suites::verify_nogo();
      }
      if (as_json) out << io::report_to_json(rep).dump(2) << '\n';
      else out << rep.to_text();
      return rep.passed() ? kPass : kFail;
    }
    if (*emit) {
      if (target == "pg832") {
        reject_k(target, k);
        const auto code = pg::build_pg_code();
        out << (format == "csv" ? io::pg_code_to_csv(code) : io::pg_code_to_json(code).dump(2) + "\n");
        return kPass;
      }
      const int m = hypercube_k(k);
      const auto code = css::hypercube_code(m);
      if (format == "csv") {
        out << io::code_to_csv(code);
        return kPass;
      }
      const auto cert = css::phantom_certificate(code, m);
      out << io::code_to_json(code, &cert).dump(2) << '\n';
      return cert.ok() ? kPass : kFail;
    }
    if (*tables) {
      out << io::tables_to_csv();
      return kPass;
    }
    const auto d = css::css_distance(css::hypercube_code(hypercube_k(k)));
    out << "d_x=" << d.d_x << " d_z=" << d.d_z << " d=" << d.d << '\n';
    return kPass;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  }
}

}  // namespace phantom::cli

#endif  // PHANTOM_CLI_HPP
