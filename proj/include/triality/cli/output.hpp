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

#include <filesystem>
#include <string>
#include <vector>

#include "triality/cli/config.hpp"
#include "triality/cli/sweep.hpp"

namespace triality::cli {

/// Exact CSV header line (without newline).
inline constexpr const char* kCsvHeader = "gamma,gamma1,gamma2,v2,p2,e2,sum,v2_cf,p2_cf,e2_cf";

/// Decimal with 15 significant digits, '.' separator, exponent only below
/// 1e-4 (or at 1e15 and above). Round-off negatives in [-1e-12, 0) print as 0.
std::string format_number(double x);

std::string to_csv(const std::vector<SweepRecord>& records);
std::string to_json(const std::vector<SweepRecord>& records);
/// Line chart of V^2, P^2, E^2 and their sum against the swept rate.
std::string to_svg(const std::vector<SweepRecord>& records, const std::string& title);

/// Writes `<out_dir>/<stem>.<ext>` for each requested format, in the order
/// given. Throws IoError naming the path on failure. Returns written paths.
std::vector<std::filesystem::path> emit_outputs(const std::vector<SweepRecord>& records,
                                                const std::vector<OutputFormat>& outputs,
                                                const std::filesystem::path& out_dir,
                                                const std::string& stem);

/// Writes `content` to `path`, throwing IoError on failure.
void write_file(const std::filesystem::path& path, const std::string& content);

}  // namespace triality::cli
