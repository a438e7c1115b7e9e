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

#include "triality/cli/config.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <utility>

namespace triality::cli {

using nlohmann::json;

ConfigError::ConfigError(std::string field, const std::string& message)
    : Error(field.empty() ? message : field + ": " + message), field_(std::move(field)) {}

IoError::IoError(std::filesystem::path path, const std::string& message)
    : Error(path.string() + ": " + message), path_(std::move(path)) {}

std::string_view to_string(ChannelKind kind) noexcept {
  switch (kind) {
    case ChannelKind::kAdQubit: return "ad_qubit";
    case ChannelKind::kAdQutritCascade: return "ad_qutrit_cascade";
    case ChannelKind::kAdQutritPaper: return "ad_qutrit_paper";
    case ChannelKind::kPdQubit: return "pd_qubit";
    case ChannelKind::kPdQutrit: return "pd_qutrit";
  }
  return "unknown";
}

std::size_t channel_dim(ChannelKind kind) noexcept {
  return (kind == ChannelKind::kAdQubit || kind == ChannelKind::kPdQubit) ? 2 : 3;
}

bool ChannelSpec::two_rate() const noexcept {
  return kind == ChannelKind::kAdQutritCascade || kind == ChannelKind::kAdQutritPaper;
}

std::pair<double, double> ChannelSpec::rates(double gamma) const {
  const auto g1 = params.find("gamma1");
  const auto g2 = params.find("gamma2");
  return {g1 != params.end() ? g1->second : gamma, g2 != params.end() ? g2->second : gamma};
}

KrausChannel ChannelSpec::build(double gamma) const {
  switch (kind) {
    case ChannelKind::kAdQubit: return amplitude_damping_qubit(gamma);
    case ChannelKind::kPdQubit: return phase_damping_qubit(gamma);
    case ChannelKind::kPdQutrit: return phase_damping_qutrit(gamma);
    case ChannelKind::kAdQutritCascade: {
      const auto [g1, g2] = rates(gamma);
      return cascade_ad_qutrit(g1, g2);
    }
    case ChannelKind::kAdQutritPaper: {
      const auto [g1, g2] = rates(gamma);
      return literal_kraus_ad_qutrit(g1, g2);
    }
  }
  throw Error("ChannelSpec::build: unknown channel kind");
}

std::vector<double> GammaGrid::points() const {
  std::vector<double> out(static_cast<std::size_t>(steps));
  const double span = stop - start;
  for (int i = 0; i < steps; ++i) {
    out[static_cast<std::size_t>(i)] = start + span * static_cast<double>(i) / (steps - 1);
  }
  out.back() = stop;
  return out;
}

namespace {

std::string join(const std::string& parent, const std::string& key) {
  return parent.empty() ? key : parent + "." + key;
}

std::string index(const std::string& parent, std::size_t i) {
  return parent + "[" + std::to_string(i) + "]";
}

void reject_unknown(const json& obj, const std::string& field,
                    std::initializer_list<std::string_view> allowed) {
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (std::string_view a : allowed) known = known || key == a;
    if (!known) throw ConfigError(join(field, key), "unknown field");
  }
}

const json& require_object(const json& j, const std::string& field) {
  if (!j.is_object()) throw ConfigError(field, "expected an object");
  return j;
}

double require_number(const json& j, const std::string& field) {
  if (!j.is_number()) throw ConfigError(field, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw ConfigError(field, "expected a finite number");
  return v;
}

double require_rate(const json& j, const std::string& field) {
  const double v = require_number(j, field);
  if (v < 0.0 || v > 1.0) throw ConfigError(field, "must lie in [0, 1]");
  return v;
}

Complex parse_complex(const json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 2) throw ConfigError(field, "expected a [re, im] pair");
  return {require_number(j[0], index(field, 0)), require_number(j[1], index(field, 1))};
}

ChannelKind parse_kind(const json& j, const std::string& field) {
  if (!j.is_string()) throw ConfigError(field, "expected a string");
  const std::string s = j.get<std::string>();
  for (ChannelKind k : {ChannelKind::kAdQubit, ChannelKind::kAdQutritCascade,
                        ChannelKind::kAdQutritPaper, ChannelKind::kPdQubit,
                        ChannelKind::kPdQutrit}) {
    if (s == to_string(k)) return k;
  }
  throw ConfigError(field, "unknown channel kind '" + s + "'");
}

ChannelSpec parse_channel(const json& j, const std::string& field) {
  require_object(j, field);
  reject_unknown(j, field, {"kind", "params"});
  if (!j.contains("kind")) throw ConfigError(join(field, "kind"), "missing required field");
  ChannelSpec spec;
  spec.kind = parse_kind(j["kind"], join(field, "kind"));
  if (j.contains("params")) {
    const std::string pfield = join(field, "params");
    require_object(j["params"], pfield);
    for (const auto& [key, value] : j["params"].items()) {
      const std::string kfield = join(pfield, key);
      if (!spec.two_rate() || (key != "gamma1" && key != "gamma2")) {
        throw ConfigError(kfield, spec.two_rate()
                                      ? "unknown parameter (expected gamma1 or gamma2)"
                                      : "the swept parameter of this channel cannot be fixed");
      }
      spec.params[key] = require_rate(value, kfield);
    }
    if (spec.params.size() == 2) {
      throw ConfigError(pfield, "fixing both gamma1 and gamma2 leaves nothing to sweep");
    }
  }
  return spec;
}

GammaGrid parse_grid(const json& j, const std::string& field) {
  require_object(j, field);
  reject_unknown(j, field, {"start", "stop", "steps"});
  GammaGrid grid;
  if (j.contains("start")) grid.start = require_rate(j["start"], join(field, "start"));
  if (j.contains("stop")) grid.stop = require_rate(j["stop"], join(field, "stop"));
  if (j.contains("steps")) {
    const json& s = j["steps"];
    if (!s.is_number_integer()) throw ConfigError(join(field, "steps"), "expected an integer");
    const auto steps = s.get<long long>();
    if (steps < 2 || steps > 1000000) {
      throw ConfigError(join(field, "steps"), "must be between 2 and 1000000");
    }
    grid.steps = static_cast<int>(steps);
  }
  if (grid.start > grid.stop) throw ConfigError(field, "start must not exceed stop");
  return grid;
}

std::vector<OutputFormat> parse_outputs(const json& j, const std::string& field) {
  if (!j.is_array() || j.empty()) throw ConfigError(field, "expected a nonempty array");
  std::vector<OutputFormat> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string f = index(field, i);
    if (!j[i].is_string()) throw ConfigError(f, "expected a string");
    const std::string s = j[i].get<std::string>();
    OutputFormat fmt;
    if (s == "csv") {
      fmt = OutputFormat::kCsv;
    } else if (s == "json") {
      fmt = OutputFormat::kJson;
    } else if (s == "svg") {
      fmt = OutputFormat::kSvg;
    } else {
      throw ConfigError(f, "unknown output format '" + s + "'");
    }
    for (OutputFormat seen : out) {
      if (seen == fmt) throw ConfigError(f, "duplicate output format '" + s + "'");
    }
    out.push_back(fmt);
  }
  return out;
}

}  // namespace

DensityMatrix preset_state(std::string_view name, std::size_t dim) {
  if (name == "max_coherent_qubit") {
    if (dim != 2) throw ConfigError("initial_state", "max_coherent_qubit needs a qubit channel");
    return density_from_pure(PureState::uniform(2));
  }
  if (name == "max_coherent_qutrit") {
    if (dim != 3) throw ConfigError("initial_state", "max_coherent_qutrit needs a qutrit channel");
    return density_from_pure(PureState::uniform(3));
  }
  if (name.starts_with("basis_") && name.size() > 6) {
    std::size_t k = 0;
    for (char c : name.substr(6)) {
      if (c < '0' || c > '9') throw ConfigError("initial_state", "malformed basis preset");
      k = k * 10 + static_cast<std::size_t>(c - '0');
      if (k >= dim) break;
    }
    if (k >= dim) throw ConfigError("initial_state", "basis index out of range for the channel");
    return density_from_pure(PureState::basis(dim, k));
  }
  throw ConfigError("initial_state", "unknown preset '" + std::string(name) + "'");
}

DensityMatrix parse_density_matrix(const json& j, const std::string& field) {
  if (!j.is_array() || j.empty()) throw ConfigError(field, "expected a nonempty square array");
  const std::size_t n = j.size();
  std::vector<Complex> entries;
  entries.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::string rfield = index(field, i);
    if (!j[i].is_array() || j[i].size() != n) {
      throw ConfigError(rfield, "expected a row of " + std::to_string(n) + " entries");
    }
    for (std::size_t k = 0; k < n; ++k) entries.push_back(parse_complex(j[i][k], index(rfield, k)));
  }
  try {
    return DensityMatrix(ComplexMatrix(n, n, std::move(entries)));
  } catch (const Error& e) {
    throw ConfigError(field, e.what());
  }
}

PureState parse_pure_state(const json& j, const std::string& field) {
  if (!j.is_array() || j.empty()) throw ConfigError(field, "expected a nonempty array");
  std::vector<Complex> amps;
  for (std::size_t i = 0; i < j.size(); ++i) amps.push_back(parse_complex(j[i], index(field, i)));
  try {
    return PureState(std::move(amps));
  } catch (const Error& e) {
    throw ConfigError(field, e.what());
  }
}

json density_matrix_to_json(const DensityMatrix& rho) {
  json rows = json::array();
  for (std::size_t i = 0; i < rho.dim(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < rho.dim(); ++k) row.push_back({rho(i, k).real(), rho(i, k).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

SweepConfig parse_sweep_config(const json& doc) {
  require_object(doc, "");
  reject_unknown(doc, "",
                 {"name", "channel", "initial_state", "gamma_grid", "outputs",
                  "compare_closed_form"});
  SweepConfig cfg;
  if (doc.contains("name")) {
    const json& n = doc["name"];
    if (!n.is_string() || n.get<std::string>().empty()) {
      throw ConfigError("name", "expected a nonempty string");
    }
    cfg.name = n.get<std::string>();
    for (char c : cfg.name) {
      const bool ok = std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.';
      if (!ok) throw ConfigError("name", "may only contain letters, digits, '_', '-' and '.'");
    }
  }
  if (!doc.contains("channel")) throw ConfigError("channel", "missing required field");
  cfg.channel = parse_channel(doc["channel"], "channel");
  const std::size_t dim = channel_dim(cfg.channel.kind);

  if (!doc.contains("initial_state")) throw ConfigError("initial_state", "missing required field");
  const json& init = doc["initial_state"];
  if (init.is_string()) {
    cfg.initial_state_label = init.get<std::string>();
    cfg.initial_state = preset_state(cfg.initial_state_label, dim);
  } else if (init.is_object()) {
    reject_unknown(init, "initial_state", {"density_matrix", "pure_state"});
    if (init.size() != 1) {
      throw ConfigError("initial_state", "give exactly one of density_matrix or pure_state");
    }
    if (init.contains("density_matrix")) {
      cfg.initial_state_label = "explicit density matrix";
      cfg.initial_state = parse_density_matrix(init["density_matrix"], "initial_state.density_matrix");
    } else {
      cfg.initial_state_label = "explicit pure state";
      cfg.initial_state =
          density_from_pure(parse_pure_state(init["pure_state"], "initial_state.pure_state"));
    }
    if (cfg.initial_state.dim() != dim) {
      std::ostringstream msg;
      msg << "state dimension " << cfg.initial_state.dim() << " does not match channel '"
          << to_string(cfg.channel.kind) << "' (dimension " << dim << ")";
      throw ConfigError("initial_state", msg.str());
    }
  } else {
    throw ConfigError("initial_state", "expected a preset name or an object");
  }

  if (doc.contains("gamma_grid")) cfg.grid = parse_grid(doc["gamma_grid"], "gamma_grid");
  if (doc.contains("outputs")) cfg.outputs = parse_outputs(doc["outputs"], "outputs");
  if (doc.contains("compare_closed_form")) {
    if (!doc["compare_closed_form"].is_boolean()) {
      throw ConfigError("compare_closed_form", "expected true or false");
    }
    cfg.compare_closed_form = doc["compare_closed_form"].get<bool>();
  }
  return cfg;
}

SweepConfig load_sweep_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError(path, "cannot open config file");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("", std::string("invalid JSON: ") + e.what());
  }
  return parse_sweep_config(doc);
}

}  // namespace triality::cli
