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

#ifndef PHANTOM_REPORT_HPP
#define PHANTOM_REPORT_HPP

#include <algorithm>
#include <chrono>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace phantom {

struct CheckResult {
  std::string id;
  std::string description;
  bool pass = false;
  std::optional<std::string> witness;
};

/// Named list of checks; passes iff every check passes.
class VerificationReport {
public:
  explicit VerificationReport(std::string suite) : suite_(std::move(suite)), start_(std::chrono::steady_clock::now()) {}

  void add(std::string id, std::string description, bool pass, std::optional<std::string> witness = std::nullopt) {
    checks_.push_back({std::move(id), std::move(description), pass, std::move(witness)});
  }

  /// Records a check whose computation threw as a failure.
  template <typename F>
  void run(std::string id, std::string description, F&& body) {
    try {
      auto [pass, witness] = body();
      add(std::move(id), std::move(description), pass, std::move(witness));
    } catch (const std::exception& e) {
      add(std::move(id), std::move(description), false, std::string("exception: ") + e.what());
    }
  }

  void merge(const VerificationReport& other) {
    for (const auto& c : other.checks_) checks_.push_back({other.suite_ + "." + c.id, c.description, c.pass, c.witness});
  }

  void finish() {
    elapsed_ms_ = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

  const std::string& suite() const { return suite_; }
  const std::vector<CheckResult>& checks() const { return checks_; }
  double elapsed_ms() const { return elapsed_ms_; }
  bool passed() const {
    return std::all_of(checks_.begin(), checks_.end(), [](const CheckResult& c) { return c.pass; });
  }

  std::string to_text() const {
    std::ostringstream out;
    std::size_t failed = 0;
    for (const auto& c : checks_) {
      out << (c.pass ? "PASS " : "FAIL ") << c.id << "  " << c.description;
      if (c.witness) out << "  [" << *c.witness << "]";
      out << '\n';
      failed += c.pass ? 0 : 1;
    }
    out << suite_ << ": " << (checks_.size() - failed) << "/" << checks_.size() << " checks passed";
    out << " in " << static_cast<long long>(elapsed_ms_) << " ms\n";
    return out.str();
  }

private:
  std::string suite_;
  std::vector<CheckResult> checks_;
  std::chrono::steady_clock::time_point start_;
  double elapsed_ms_ = 0;
};

}  // namespace phantom

#endif  // PHANTOM_REPORT_HPP
