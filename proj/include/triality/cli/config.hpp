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
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "triality/channels.hpp"
#include "triality/error.hpp"
#include "triality/state.hpp"

namespace triality::cli {

/// Invalid sweep configuration. `field()` is a dotted path into the document.
class ConfigError : public Error {
 public:
  ConfigError(std::string field, const std::string& message);
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// A file could not be read or written.
class IoError : public Error {
 public:
  IoError(std::filesystem::path path, const std::string& message);
  const std::filesystem::path& path() const noexcept { return path_; }

 private:
  std::filesystem::path path_;
};

enum class ChannelKind { kAdQubit, kAdQutritCascade, kAdQutritPaper, kPdQubit, kPdQutrit };

std::string_view to_string(ChannelKind kind) noexcept;
std::size_t channel_dim(ChannelKind kind) noexcept;

/// {"kind": ..., "params": {...}}. For the qutrit decay kinds, fixing one of
/// gamma1/gamma2 makes the sweep run over the other; with neither fixed both
/// follow the swept value.
struct ChannelSpec {
  ChannelKind kind = ChannelKind::kAdQubit;
  std::map<std::string, double> params;

  /// Channel at swept value `gamma`.
  KrausChannel build(double gamma) const;
  /// (gamma1, gamma2) at swept value `gamma`; only for the qutrit decay kinds.
  std::pair<double, double> rates(double gamma) const;
  bool two_rate() const noexcept;
};

/// Inclusive, uniformly spaced grid on [start, stop].
struct GammaGrid {
  double start = 0.0;
  double stop = 1.0;
  int steps = 101;

  std::vector<double> points() const;
};

enum class OutputFormat { kCsv, kJson, kSvg };

struct SweepConfig {
  std::string name = "sweep";
  ChannelSpec channel;
  std::string initial_state_label;
  DensityMatrix initial_state = DensityMatrix::maximally_mixed(2);
  GammaGrid grid;
  std::vector<OutputFormat> outputs{OutputFormat::kCsv};
  bool compare_closed_form = false;
};

/// Strict parse: unknown fields, wrong types and out-of-range values raise
/// ConfigError naming the offending field.
SweepConfig parse_sweep_config(const nlohmann::json& doc);

/// Reads and parses a JSON file. IoError if unreadable, ConfigError otherwise.
SweepConfig load_sweep_config(const std::filesystem::path& path);

/// "max_coherent_qubit", "max_coherent_qutrit" or "basis_<k>" in dimension `dim`.
DensityMatrix preset_state(std::string_view name, std::size_t dim);

/// Nested arrays of [re, im] pairs.
DensityMatrix parse_density_matrix(const nlohmann::json& j, const std::string& field);
/// Array of [re, im] pairs.
PureState parse_pure_state(const nlohmann::json& j, const std::string& field);
nlohmann::json density_matrix_to_json(const DensityMatrix& rho);

}  // namespace triality::cli
