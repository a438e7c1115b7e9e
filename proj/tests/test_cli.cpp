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

#include <catch_amalgamated.hpp>

#include <sys/wait.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "triality/cli/config.hpp"
#include "triality/cli/output.hpp"
#include "triality/cli/sampling.hpp"
#include "triality/cli/sweep.hpp"
#include "triality/cli/verify.hpp"
#include "triality/error.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;
using triality::cli::ConfigError;
using triality::cli::SweepConfig;
using triality::cli::SweepRecord;
using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::WithinAbs;

namespace {

std::string field_of(const json& doc) {
  try {
    triality::cli::parse_sweep_config(doc);
  } catch (const ConfigError& e) {
    return e.field();
  }
  return "<accepted>";
}

json base_config() {
  return json::parse(R"({
    "name": "pd",
    "channel": {"kind": "pd_qubit"},
    "initial_state": "max_coherent_qubit",
    "gamma_grid": {"start": 0, "stop": 1, "steps": 11},
    "outputs": ["csv"],
    "compare_closed_form": true
  })");
}

fs::path scratch_dir(const std::string& tag) {
  const fs::path p = fs::temp_directory_path() / ("triality_test_" + tag);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

int run_tool(const std::string& args) {
  const std::string cmd = std::string(TRIALITY_TOOL_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("config parsing accepts the documented shapes", "[cli][config]") {
  const SweepConfig cfg = triality::cli::parse_sweep_config(base_config());
  CHECK(cfg.name == "pd");
  CHECK(cfg.channel.kind == triality::cli::ChannelKind::kPdQubit);
  CHECK(cfg.grid.steps == 11);
  CHECK(cfg.compare_closed_form);

  json explicit_dm = base_config();
  explicit_dm["initial_state"] = json::parse(R"({"density_matrix": [[[0.5,0],[0,0.5]],[[0,-0.5],[0.5,0]]]})");
  const SweepConfig dm = triality::cli::parse_sweep_config(explicit_dm);
  CHECK(dm.initial_state(0, 1) == triality::Complex(0.0, 0.5));

  json pure = base_config();
  pure["initial_state"] = json::parse(R"({"pure_state": [[0.6,0],[0,0.8]]})");
  CHECK_THAT(triality::cli::parse_sweep_config(pure).initial_state.population(1),
             WithinAbs(0.64, 1e-15));

  json fixed = base_config();
  fixed["channel"] = json::parse(R"({"kind": "ad_qutrit_cascade", "params": {"gamma2": 0.3}})");
  fixed["initial_state"] = "basis_2";
  const SweepConfig f = triality::cli::parse_sweep_config(fixed);
  CHECK(f.channel.two_rate());
  CHECK(f.channel.rates(0.7) == std::pair<double, double>{0.7, 0.3});

  json minimal = json::parse(R"({"channel": {"kind": "ad_qubit"}, "initial_state": "basis_1"})");
  const SweepConfig m = triality::cli::parse_sweep_config(minimal);
  CHECK(m.grid.points().size() == 101);
  CHECK(m.outputs.size() == 1);
}

TEST_CASE("config errors name the offending field", "[cli][config]") {
  json doc = base_config();
  doc["colour"] = 1;
  CHECK(field_of(doc) == "colour");

  doc = base_config();
  doc["channel"]["kind"] = "amplitude";
  CHECK(field_of(doc) == "channel.kind");

  doc = base_config();
  doc["channel"]["extra"] = true;
  CHECK(field_of(doc) == "channel.extra");

  doc = base_config();
  doc["channel"]["params"] = {{"gamma_p", 0.2}};
  CHECK(field_of(doc) == "channel.params.gamma_p");

  doc = base_config();
  doc["channel"] = json::parse(R"({"kind": "ad_qutrit_cascade", "params": {"gamma1": 1.5}})");
  doc["initial_state"] = "max_coherent_qutrit";
  CHECK(field_of(doc) == "channel.params.gamma1");

  doc = base_config();
  doc["gamma_grid"]["steps"] = 1;
  CHECK(field_of(doc) == "gamma_grid.steps");

  doc = base_config();
  doc["gamma_grid"]["start"] = 0.8;
  doc["gamma_grid"]["stop"] = 0.2;
  CHECK(field_of(doc) == "gamma_grid");

  doc = base_config();
  doc["gamma_grid"]["stop"] = 1.2;
  CHECK(field_of(doc) == "gamma_grid.stop");

  doc = base_config();
  doc["outputs"] = {"csv", "pdf"};
  CHECK(field_of(doc) == "outputs[1]");

  doc = base_config();
  doc["initial_state"] = "max_coherent_qutrit";
  CHECK(field_of(doc) == "initial_state");

  doc = base_config();
  doc["initial_state"] = json::parse(R"({"density_matrix": [[[1,0],[0,0]],[[0,0],[1,0]]]})");
  CHECK(field_of(doc) == "initial_state.density_matrix");

  doc = base_config();
  doc["initial_state"] = json::parse(R"({"density_matrix": [[[1,0],[0,0]],[[0,0],["x",0]]]})");
  CHECK(field_of(doc) == "initial_state.density_matrix[1][1][0]");

  doc = base_config();
  doc["initial_state"] = json::parse(
      R"({"density_matrix": [[[1,0],[0,0],[0,0]],[[0,0],[0,0],[0,0]],[[0,0],[0,0],[0,0]]]})");
  CHECK(field_of(doc) == "initial_state");

  doc = base_config();
  doc["compare_closed_form"] = "yes";
  CHECK(field_of(doc) == "compare_closed_form");

  doc = base_config();
  doc.erase("channel");
  CHECK(field_of(doc) == "channel");
}

TEST_CASE("preset states", "[cli][config]") {
  CHECK_THAT(triality::cli::preset_state("basis_2", 3).population(2), WithinAbs(1.0, 0.0));
  CHECK_THAT(triality::cli::preset_state("max_coherent_qutrit", 3)(0, 2).real(),
             WithinAbs(1.0 / 3.0, 1e-15));
  CHECK_THROWS_AS(triality::cli::preset_state("basis_3", 3), ConfigError);
  CHECK_THROWS_AS(triality::cli::preset_state("basis_x", 3), ConfigError);
  CHECK_THROWS_AS(triality::cli::preset_state("ground", 2), ConfigError);
}

TEST_CASE("load_sweep_config errors", "[cli][config]") {
  CHECK_THROWS_AS(triality::cli::load_sweep_config("/nonexistent/dir/config.json"),
                  triality::cli::IoError);
  const fs::path dir = scratch_dir("badjson");
  std::ofstream(dir / "c.json") << "{ not json";
  CHECK_THROWS_AS(triality::cli::load_sweep_config(dir / "c.json"), ConfigError);
}

TEST_CASE("gamma grid is inclusive and uniform", "[cli][sweep]") {
  const triality::cli::GammaGrid g{0.2, 0.7, 6};
  const auto pts = g.points();
  REQUIRE(pts.size() == 6);
  CHECK(pts.front() == 0.2);
  CHECK(pts.back() == 0.7);
  for (std::size_t i = 0; i < pts.size(); ++i) CHECK_THAT(pts[i], WithinAbs(0.2 + 0.1 * i, 1e-15));
}

TEST_CASE("run_sweep rows", "[cli][sweep]") {
  SECTION("phase damping on the coherent qubit") {
    const auto recs = triality::cli::run_sweep(triality::cli::parse_sweep_config(base_config()));
    REQUIRE(recs.size() == 11);
    for (const SweepRecord& r : recs) {
      const double g = *r.gamma;
      CHECK_THAT(r.v2, WithinAbs(1.0 - g, 1e-12));
      CHECK_THAT(r.p2, WithinAbs(0.0, 1e-12));
      CHECK_THAT(r.e2, WithinAbs(g, 1e-12));
      CHECK_THAT(r.sum, WithinAbs(1.0, 1e-10));
      CHECK(r.v2_cf.has_value());
      CHECK_FALSE(r.gamma1.has_value());
    }
    const auto d = triality::cli::closed_form_deviation(recs);
    CHECK(d.v2 <= 1e-12);
    CHECK(d.p2 <= 1e-12);
    CHECK(d.e2 <= 1e-12);
  }
  SECTION("amplitude damping row at 0.5") {
    json doc = base_config();
    doc["channel"]["kind"] = "ad_qubit";
    const auto recs = triality::cli::run_sweep(triality::cli::parse_sweep_config(doc));
    const SweepRecord& r = recs[5];
    CHECK(*r.gamma == 0.5);
    CHECK_THAT(r.v2, WithinAbs(0.5, 1e-12));
    CHECK_THAT(r.p2, WithinAbs(0.25, 1e-12));
    CHECK_THAT(r.e2, WithinAbs(0.25, 1e-12));
  }
  SECTION("qutrit cascade at equal rates") {
    json doc = base_config();
    doc["channel"]["kind"] = "ad_qutrit_cascade";
    doc["initial_state"] = "max_coherent_qutrit";
    const auto recs = triality::cli::run_sweep(triality::cli::parse_sweep_config(doc));
    const SweepRecord& r = recs[5];
    CHECK(*r.gamma1 == 0.5);
    CHECK(*r.gamma2 == 0.5);
    CHECK_THAT(r.v2, WithinAbs(0.416667, 1e-6));
    CHECK_THAT(r.p2, WithinAbs(0.145833, 1e-6));
    CHECK_THAT(r.e2, WithinAbs(0.4375, 1e-6));
    CHECK_FALSE(r.v2_cf.has_value());
    CHECK_THAT(*r.v2_unverified_claim, WithinAbs(0.25, 1e-15));
  }
  SECTION("one rate fixed leaves gamma empty") {
    json doc = base_config();
    doc["channel"] = json::parse(R"({"kind": "ad_qutrit_paper", "params": {"gamma1": 0.2}})");
    doc["initial_state"] = "basis_2";
    const auto recs = triality::cli::run_sweep(triality::cli::parse_sweep_config(doc));
    for (const SweepRecord& r : recs) {
      CHECK_FALSE(r.gamma.has_value());
      CHECK(*r.gamma1 == 0.2);
      CHECK_FALSE(r.v2_unverified_claim.has_value());
    }
    CHECK(*recs.back().gamma2 == 1.0);
  }
  SECTION("dimension mismatch") {
    SweepConfig cfg = triality::cli::parse_sweep_config(base_config());
    cfg.initial_state = triality::DensityMatrix::maximally_mixed(3);
    CHECK_THROWS_AS(triality::cli::run_sweep(cfg), ConfigError);
  }
}

TEST_CASE("number format", "[cli][output]") {
  CHECK(triality::cli::format_number(0.5) == "0.5");
  CHECK(triality::cli::format_number(1.0) == "1");
  CHECK(triality::cli::format_number(-3e-13) == "0");
  CHECK(triality::cli::format_number(-0.0) == "0");
  CHECK(triality::cli::format_number(1.0 / 3.0) == "0.333333333333333");
  CHECK(triality::cli::format_number(0.00025) == "0.00025");
  CHECK(triality::cli::format_number(0.999999999999999778) == "1");
}

TEST_CASE("CSV, JSON and SVG outputs", "[cli][output]") {
  const auto recs = triality::cli::run_sweep(triality::cli::parse_sweep_config(base_config()));
  const std::string csv = triality::cli::to_csv(recs);
  std::istringstream lines(csv);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "gamma,gamma1,gamma2,v2,p2,e2,sum,v2_cf,p2_cf,e2_cf");
  int rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    CHECK(std::count(line.begin(), line.end(), ',') == 9);
    CHECK(line.find(",,,") != std::string::npos);
  }
  CHECK(rows == 11);
  CHECK_THAT(csv, ContainsSubstring("\n0.5,,,0.5,0,0.5,1,0.5,0,0.5\n"));

  const json j = json::parse(triality::cli::to_json(recs));
  REQUIRE(j.size() == 11);
  CHECK(j[0]["gamma1"].is_null());
  CHECK(j[10]["e2"].get<double>() == 1.0);
  CHECK_FALSE(j[0].contains("v2_unverified_claim"));

  const std::string svg = triality::cli::to_svg(recs, "pd");
  CHECK_THAT(svg, ContainsSubstring("<svg"));
  CHECK_THAT(svg, ContainsSubstring("γ"));
  CHECK_THAT(svg, ContainsSubstring("squared measure"));
  std::size_t polylines = 0;
  for (std::size_t pos = svg.find("<polyline"); pos != std::string::npos;
       pos = svg.find("<polyline", pos + 1))
    ++polylines;
  CHECK(polylines == 4);
}

TEST_CASE("emit_outputs writes files and reports unwritable paths", "[cli][output]") {
  const auto recs = triality::cli::run_sweep(triality::cli::parse_sweep_config(base_config()));
  const fs::path dir = scratch_dir("emit") / "nested";
  const auto written = triality::cli::emit_outputs(
      recs, {triality::cli::OutputFormat::kCsv, triality::cli::OutputFormat::kJson,
             triality::cli::OutputFormat::kSvg},
      dir, "run");
  REQUIRE(written.size() == 3);
  for (const auto& p : written) CHECK(fs::file_size(p) > 0);
  CHECK(slurp(dir / "run.csv") == triality::cli::to_csv(recs));

  try {
    triality::cli::write_file("/nonexistent/dir/out.csv", "x");
    FAIL("expected IoError");
  } catch (const triality::cli::IoError& e) {
    CHECK_THAT(std::string(e.what()), ContainsSubstring("/nonexistent/dir/out.csv"));
  }
  CHECK_THROWS_AS(triality::cli::emit_outputs({}, {triality::cli::OutputFormat::kCsv}, dir, "x"),
                  triality::Error);
}

TEST_CASE("sweeps are deterministic", "[cli][sweep]") {
  json doc = base_config();
  doc["channel"]["kind"] = "ad_qutrit_cascade";
  doc["initial_state"] = "max_coherent_qutrit";
  doc["gamma_grid"]["steps"] = 101;
  const SweepConfig cfg = triality::cli::parse_sweep_config(doc);
  const auto a = triality::cli::run_sweep(cfg);
  const auto b = triality::cli::run_sweep(cfg);
  CHECK(triality::cli::to_csv(a) == triality::cli::to_csv(b));
  CHECK(triality::cli::to_json(a) == triality::cli::to_json(b));
}

TEST_CASE("verify suites", "[cli][verify]") {
  const auto report = triality::cli::run_verify({7, 20, false});
  CHECK(report.passed());
  REQUIRE_FALSE(report.suites.empty());
  CHECK(report.suites.front().name == "cptp_completeness");
  CHECK_THAT(report.to_text(), ContainsSubstring("PASS"));

  const auto again = triality::cli::run_verify({7, 20, false});
  for (std::size_t i = 0; i < report.suites.size(); ++i) {
    CHECK(report.suites[i].checks == again.suites[i].checks);
    CHECK(report.suites[i].worst_deviation == again.suites[i].worst_deviation);
  }

  const auto single = triality::cli::run_verify({1, 1, false});
  CHECK(single.passed());

  const auto faulty = triality::cli::run_verify({7, 20, true});
  CHECK_FALSE(faulty.passed());
  CHECK_THAT(faulty.to_text(), ContainsSubstring("FAIL"));
}

TEST_CASE("command line exit codes", "[cli][process]") {
  const fs::path dir = scratch_dir("process");
  std::ofstream(dir / "ok.json") << base_config().dump();
  json bad = base_config();
  bad["typo"] = 1;
  std::ofstream(dir / "bad.json") << bad.dump();

  CHECK(run_tool("sweep --config " + (dir / "ok.json").string() + " --out-dir " +
                 (dir / "out").string()) == 0);
  CHECK(fs::exists(dir / "out" / "pd.csv"));
  CHECK(run_tool("sweep --config " + (dir / "bad.json").string()) == 2);
  CHECK(run_tool("sweep --config " + (dir / "missing.json").string()) == 3);
  CHECK(run_tool("sweep --config " + (dir / "ok.json").string() + " --out-dir /proc/none") == 3);
  CHECK(run_tool("verify --seed 3 --cases 5") == 0);
  CHECK(run_tool("verify --seed 3 --cases 5 --inject-fault") == 1);
  CHECK(run_tool("discrepancy --gamma1 0.5 --gamma2 0.5 --json " + (dir / "d.json").string()) == 0);
  CHECK(json::parse(slurp(dir / "d.json")).size() == 3);
  CHECK(run_tool("discrepancy --gamma1 1.5 --gamma2 0.5") == 2);
  CHECK(run_tool("") == 2);
  CHECK(run_tool("frobnicate") == 2);
}
