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

#include <string>
#include <vector>

#include "json.hpp"
#include "triality/channels.hpp"

namespace triality::cli {

struct NamedReport {
  std::string state_name;
  DiscrepancyReport report;
};

/// compare_claims_vs_oracle on the preset test states: the maximally
/// coherent qutrit, the top level |2><2| ("basis_2") and I/3.
/// Throws InvalidParameterError if a rate is outside [0, 1].
std::vector<NamedReport> run_discrepancy_report(double gamma1, double gamma2);

/// Fixed-width table, one line per compared quantity.
std::string discrepancy_text(const std::vector<NamedReport>& reports);

nlohmann::json discrepancy_json(const std::vector<NamedReport>& reports);

}  // namespace triality::cli
