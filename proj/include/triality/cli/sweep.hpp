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
#include <optional>
#include <string>
#include <vector>

#include "triality/cli/config.hpp"

namespace triality::cli {

/// One grid point of a sweep.
///
/// `gamma` is set whenever a single rate drives the channel (including the
/// qutrit decay with gamma1 = gamma2 = gamma). For the qutrit decay kinds
/// gamma1 and gamma2 are always filled; with one rate fixed `gamma` is empty.
struct SweepRecord {
  std::optional<double> gamma;
  std::optional<double> gamma1;
  std::optional<double> gamma2;
  double v2 = 0.0;
  double p2 = 0.0;
  double e2 = 0.0;
  double sum = 0.0;
  std::optional<double> v2_cf;
  std::optional<double> p2_cf;
  std::optional<double> e2_cf;
  /// (1-g)^2 V^2 for equal-rate qutrit decay. Unverified; the cascade
  /// channel does not follow it. Reported for reference only.
  std::optional<double> v2_unverified_claim;
};

inline constexpr double kRecordSumTolerance = 1e-10;

/// Evaluates the channel on the initial state at every grid point, in grid
/// order. Closed-form columns are filled when requested and available
/// (ad_qubit, pd_qubit, pd_qutrit).
std::vector<SweepRecord> run_sweep(const SweepConfig& config);

/// Largest |x - x_cf| over the sweep for each of v2, p2, e2 (0 when absent).
struct ClosedFormDeviation {
  double v2 = 0.0;
  double p2 = 0.0;
  double e2 = 0.0;
};
ClosedFormDeviation closed_form_deviation(const std::vector<SweepRecord>& records);

}  // namespace triality::cli
