// Copyright 2026 The Triality Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace triality::cli {

struct VerifyOptions {
  std::uint64_t seed = 42;
  std::size_t cases = 10000;
  /// Adds a deliberately non-trace-preserving channel to every channel
  /// suite. Used to prove the suite can fail.
  bool inject_fault = false;
};

/// Outcome of one randomized property suite.
struct SuiteResult {
  std::string name;
  double tolerance = 0.0;
  std::size_t checks = 0;
  std::size_t failures = 0;
  double worst_deviation = 0.0;
  std::string first_failure;

  bool passed() const noexcept { return failures == 0 && checks > 0; }
};

struct VerifyReport {
  std::uint64_t seed = 0;
  std::size_t cases = 0;
  std::vector<SuiteResult> suites;
  double seconds = 0.0;

  bool passed() const noexcept;
  std::string to_text() const;
};

/// Runs every property suite with a generator seeded by `options.seed`.
/// Boundary states and gamma in {0, 1} are always evaluated before any
/// random sample. Failures are recorded, never thrown.
VerifyReport run_verify(const VerifyOptions& options);

}  // namespace triality::cli
