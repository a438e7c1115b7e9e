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

#include "triality/cli/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace triality::cli {

namespace {

std::optional<ComplementarityTriple> closed_form(ChannelKind kind, const DensityMatrix& rho,
                                                 double gamma) {
  switch (kind) {
    case ChannelKind::kAdQubit: return predict_ad_qubit(rho, gamma);
    case ChannelKind::kPdQubit: return predict_pd_qubit(rho, gamma);
    case ChannelKind::kPdQutrit: return predict_pd_qutrit(rho, gamma);
    case ChannelKind::kAdQutritCascade:
    case ChannelKind::kAdQutritPaper: return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

std::vector<SweepRecord> run_sweep(const SweepConfig& config) {
  const std::size_t dim = channel_dim(config.channel.kind);
  if (config.initial_state.dim() != dim) {
    throw ConfigError("initial_state", "state dimension does not match the channel");
  }
  const std::vector<double> grid = config.grid.points();
  const double v2_initial = visibility2(config.initial_state);

  std::vector<SweepRecord> records;
  records.reserve(grid.size());
  for (double g : grid) {
    SweepRecord rec;
    if (config.channel.two_rate()) {
      const auto [g1, g2] = config.channel.rates(g);
      rec.gamma1 = g1;
      rec.gamma2 = g2;
      if (config.channel.params.empty()) {
        rec.gamma = g;
        rec.v2_unverified_claim = (1.0 - g) * (1.0 - g) * v2_initial;
      }
    } else {
      rec.gamma = g;
    }

    const DensityMatrix out = apply(config.channel.build(g), config.initial_state);
    const ComplementarityTriple t = measure_triple(out);
    rec.v2 = t.v2;
    rec.p2 = t.p2;
    rec.e2 = t.e2;
    rec.sum = t.sum();
    if (std::abs(rec.sum - 1.0) > kRecordSumTolerance) {
      std::ostringstream msg;
      msg << "run_sweep: triple sum " << rec.sum << " at gamma " << g << " violates V2+P2+E2=1";
      throw Error(msg.str());
    }

    if (config.compare_closed_form) {
      if (const auto cf = closed_form(config.channel.kind, config.initial_state, g)) {
        rec.v2_cf = cf->v2;
        rec.p2_cf = cf->p2;
        rec.e2_cf = cf->e2;
      }
    }
    records.push_back(rec);
  }
  return records;
}

ClosedFormDeviation closed_form_deviation(const std::vector<SweepRecord>& records) {
  ClosedFormDeviation d;
  for (const SweepRecord& r : records) {
    if (r.v2_cf) d.v2 = std::max(d.v2, std::abs(r.v2 - *r.v2_cf));
    if (r.p2_cf) d.p2 = std::max(d.p2, std::abs(r.p2 - *r.p2_cf));
    if (r.e2_cf) d.e2 = std::max(d.e2, std::abs(r.e2 - *r.e2_cf));
  }
  return d;
}

}  // namespace triality::cli
