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

#include "triality/cli/discrepancy.hpp"

#include <cstdio>
#include <sstream>

#include "triality/cli/config.hpp"
#include "triality/cli/output.hpp"

namespace triality::cli {

std::vector<NamedReport> run_discrepancy_report(double gamma1, double gamma2) {
  std::vector<NamedReport> out;
  for (const char* name : {"max_coherent_qutrit", "basis_2"}) {
    out.push_back({name, compare_claims_vs_oracle(preset_state(name, 3), gamma1, gamma2)});
  }
  out.push_back({"maximally_mixed", compare_claims_vs_oracle(DensityMatrix::maximally_mixed(3),
                                                             gamma1, gamma2)});
  return out;
}

std::string discrepancy_text(const std::vector<NamedReport>& reports) {
  std::ostringstream out;
  for (const NamedReport& r : reports) {
    out << "state " << r.state_name << "  channel " << r.report.channel_label
        << "  gamma1=" << format_number(r.report.gamma1)
        << "  gamma2=" << format_number(r.report.gamma2) << "\n";
    char line[256];
    std::snprintf(line, sizeof line, "  %-36s %20s %20s %12s  %s\n", "quantity", "claimed",
                  "oracle", "deviation", "verdict");
    out << line;
    for (const DiscrepancyEntry& e : r.report.entries) {
      std::snprintf(line, sizeof line, "  %-36s %20s %20s %12.3e  %s\n", e.quantity.c_str(),
                    format_number(e.claimed_value).c_str(), format_number(e.oracle_value).c_str(),
                    e.deviation, e.agree ? "agree" : "DISAGREE");
      out << line;
    }
    std::size_t disagreements = 0;
    for (const DiscrepancyEntry& e : r.report.entries) disagreements += e.agree ? 0 : 1;
    out << "  " << disagreements << " of " << r.report.entries.size()
        << " quantities disagree (max deviation " << format_number(r.report.max_abs_deviation())
        << ")\n\n";
  }
  return out.str();
}

nlohmann::json discrepancy_json(const std::vector<NamedReport>& reports) {
  nlohmann::json arr = nlohmann::json::array();
  for (const NamedReport& r : reports) {
    nlohmann::json entries = nlohmann::json::array();
    for (const DiscrepancyEntry& e : r.report.entries) {
      entries.push_back({{"quantity", e.quantity},
                         {"description", e.description},
                         {"claimed_value", e.claimed_value},
                         {"oracle_value", e.oracle_value},
                         {"deviation", e.deviation},
                         {"verdict", e.agree ? "agree" : "disagree"}});
    }
    arr.push_back({{"state", r.state_name},
                   {"test_state", density_matrix_to_json(r.report.test_state)},
                   {"channel", r.report.channel_label},
                   {"gamma1", r.report.gamma1},
                   {"gamma2", r.report.gamma2},
                   {"tolerance", kDiscrepancyTolerance},
                   {"max_abs_deviation", r.report.max_abs_deviation()},
                   {"entries", std::move(entries)}});
  }
  return arr;
}

}  // namespace triality::cli
