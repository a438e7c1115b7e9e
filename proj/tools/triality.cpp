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

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "triality/cli/config.hpp"
#include "triality/cli/discrepancy.hpp"
#include "triality/cli/output.hpp"
#include "triality/cli/sweep.hpp"
#include "triality/cli/verify.hpp"
#include "triality/error.hpp"

namespace {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kConfigError = 2, kIoError = 3 };

int run_sweep_command(const std::filesystem::path& config_path, const std::filesystem::path& out_dir) {
  using namespace triality::cli;
  const SweepConfig cfg = load_sweep_config(config_path);
  const std::vector<SweepRecord> records = run_sweep(cfg);
  const auto written = emit_outputs(records, cfg.outputs, out_dir, cfg.name);
  std::cout << "sweep " << cfg.name << ": " << to_string(cfg.channel.kind) << " on "
            << cfg.initial_state_label << ", " << records.size() << " grid points\n";
  if (cfg.compare_closed_form) {
    const ClosedFormDeviation d = closed_form_deviation(records);
    std::cout << "max |numeric - closed form|: v2 " << format_number(d.v2) << ", p2 "
              << format_number(d.p2) << ", e2 " << format_number(d.e2) << "\n";
  }
  for (const auto& p : written) std::cout << "wrote " << p.string() << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Visibility, predictability and entanglement of qubit/qutrit path states under "
               "damping channels"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir = ".";
  auto* sweep = app.add_subcommand("sweep", "Sweep a damping channel over a gamma grid");
  sweep->add_option("--config", config_path, "JSON sweep configuration")->required();
  sweep->add_option("--out-dir", out_dir, "Directory for CSV/JSON/SVG output");

  triality::cli::VerifyOptions verify_opts;
  auto* verify = app.add_subcommand("verify", "Run the randomized property suites");
  verify->add_option("--seed", verify_opts.seed, "Random seed");
  verify->add_option("--cases", verify_opts.cases, "Random instances per property")
      ->check(CLI::PositiveNumber);
  verify->add_flag("--inject-fault", verify_opts.inject_fault,
                   "Add a non-trace-preserving channel (suite sensitivity check)")
      ->group("");

  double gamma1 = 0.0;
  double gamma2 = 0.0;
  std::string json_path;
  auto* discrepancy =
      app.add_subcommand("discrepancy", "Compare claimed qutrit decay formulas with the cascade channel");
  discrepancy->add_option("--gamma1", gamma1, "Decay rate |1> -> |0>")->required();
  discrepancy->add_option("--gamma2", gamma2, "Decay rate |2> -> |1>")->required();
  discrepancy->add_option("--json", json_path, "Also write the report as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfigError;
  }

  try {
    if (*sweep) return run_sweep_command(config_path, out_dir);
    if (*verify) {
      const auto report = triality::cli::run_verify(verify_opts);
      std::cout << report.to_text();
      return report.passed() ? kOk : kVerifyFailed;
    }
    if (*discrepancy) {
      const auto reports = triality::cli::run_discrepancy_report(gamma1, gamma2);
      std::cout << triality::cli::discrepancy_text(reports);
      if (!json_path.empty()) {
        triality::cli::write_file(json_path, triality::cli::discrepancy_json(reports).dump(2) + "\n");
        std::cout << "wrote " << json_path << "\n";
      }
      return kOk;
    }
  } catch (const triality::cli::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIoError;
  } catch (const triality::cli::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const triality::InvalidParameterError& e) {
    std::cerr << "invalid parameter: " << e.what() << "\n";
    return kConfigError;
  } catch (const triality::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kVerifyFailed;
  }
  return kOk;
}
