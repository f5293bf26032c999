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

#include <sstream>

#include <gtest/gtest.h>

#include "phantom/cli.hpp"

namespace phantom::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines_of(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

TEST(CliTest, VerifyPg832) {
  const auto r = invoke({"verify", "pg832"});
  EXPECT_EQ(r.code, kPass);
  int passing = 0;
  for (const auto& l : lines_of(r.out)) passing += l.rfind("PASS ", 0) == 0;
  EXPECT_GE(passing, 12);
}

TEST(CliTest, VerifyNogoTrace) {
  const auto r = invoke({"verify", "nogo"});
  EXPECT_EQ(r.code, kPass);
  for (int k = 0; k <= 4; ++k) EXPECT_NE(r.out.find("PASS r" + std::to_string(k)), std::string::npos);
}

TEST(CliTest, VerifyHypercubeAndTables) {
  EXPECT_EQ(invoke({"verify", "hypercube", "3"}).code, kPass);
  EXPECT_EQ(invoke({"verify", "tables"}).code, kPass);
}

TEST(CliTest, EmitHypercubeJson) {
  const auto r = invoke({"emit-code", "hypercube", "3", "--format", "json"});
  ASSERT_EQ(r.code, kPass);
  const auto j = io::json::parse(r.out);
  EXPECT_EQ(j["n"], 7);
  EXPECT_EQ(j["k"], 3);
  EXPECT_EQ(j["stabilizer_x"].size(), 1U);
  EXPECT_EQ(j["stabilizer_z"].size(), 3U);
  EXPECT_EQ(j["certificate"].size(), 6U);
}

TEST(CliTest, EmittedCodesRoundTrip) {
  for (int k = 2; k <= 5; ++k) {
    const auto r = invoke({"emit-code", "hypercube", std::to_string(k)});
    ASSERT_EQ(r.code, kPass);
    const auto parsed = io::code_from_json(io::json::parse(r.out));
    const auto original = css::hypercube_code(k);
    EXPECT_EQ(parsed, original);
    EXPECT_EQ(parsed.logical_x(), original.logical_x());
    EXPECT_EQ(parsed.logical_z(), original.logical_z());
  }
}

TEST(CliTest, EmitPg832) {
  const auto r = invoke({"emit-code", "pg832"});
  ASSERT_EQ(r.code, kPass);
  const auto j = io::json::parse(r.out);
  ASSERT_EQ(j["codewords"].size(), 16U);
  EXPECT_EQ(j["codewords"][0]["amplitudes"].size(), 2U);
  EXPECT_EQ(j["codewords"][1]["amplitudes"].size(), 70U);
  EXPECT_EQ(j["U_c"].size(), 16U);
  EXPECT_NEAR(j["T8"][3][3][0].get<double>(), -1.0, 1e-9);
  const auto csv = invoke({"emit-code", "pg832", "--format", "csv"});
  EXPECT_EQ(csv.code, kPass);
  EXPECT_EQ(lines_of(csv.out).size(), 1U + 2U + 15U * 70U);
}

TEST(CliTest, TablesFollowFixtureOrder) {
  const auto r = invoke({"tables", "--format", "csv"});
  ASSERT_EQ(r.code, kPass);
  const auto rows = lines_of(r.out);
  ASSERT_EQ(rows.size(), 1U + 35U + 1U + 1U + 15U);
  for (std::size_t i = 0; i < 35; ++i) {
    const auto& f = pg32::kLineTable[i];
    const std::string expected = std::to_string(f.id) + "," + std::string(f.points[0]) + " " + std::string(f.points[1]) +
                                 " " + std::string(f.points[2]) + "," + std::string(f.representative) + "," +
                                 std::string(f.word) + "," + std::to_string(f.dual);
    EXPECT_EQ(rows[i + 1], expected);
  }
  for (std::size_t i = 0; i < 15; ++i) EXPECT_EQ(rows[38 + i].substr(0, 4), pg32::kPointTable[i].point);
}

TEST(CliTest, Distance) {
  const auto r = invoke({"distance", "hypercube", "3"});
  EXPECT_EQ(r.code, kPass);
  EXPECT_EQ(r.out, "d_x=2 d_z=3 d=2\n");
}

TEST(CliTest, UsageErrors) {
  EXPECT_EQ(invoke({}).code, kUsage);
  EXPECT_EQ(invoke({"frobnicate"}).code, kUsage);
  EXPECT_EQ(invoke({"verify", "bogus"}).code, kUsage);
  EXPECT_EQ(invoke({"verify", "hypercube"}).code, kUsage);
  EXPECT_EQ(invoke({"verify", "hypercube", "9"}).code, kUsage);
  EXPECT_EQ(invoke({"verify", "nogo", "3"}).code, kUsage);
  EXPECT_EQ(invoke({"emit-code", "hypercube", "3", "--format", "xml"}).code, kUsage);
  EXPECT_EQ(invoke({"distance", "pg832", "3"}).code, kUsage);
  const auto r = invoke({"verify"});
  EXPECT_EQ(r.code, kUsage);
  EXPECT_NE(r.err.find("Usage"), std::string::npos);
}

TEST(CliTest, Help) { EXPECT_EQ(invoke({"--help"}).code, kPass); }

TEST(CliTest, ReportsAreDeterministicForASeed) {
  auto strip = [](io::json j) {
    j.erase("elapsed_ms");
    return j;
  };
  const auto a = invoke({"--seed", "42", "verify", "tables", "--json"});
  const auto b = invoke({"--seed", "42", "verify", "tables", "--json"});
  ASSERT_EQ(a.code, kPass);
  EXPECT_EQ(strip(io::json::parse(a.out)), strip(io::json::parse(b.out)));
}

}  // namespace
}  // namespace phantom::cli
