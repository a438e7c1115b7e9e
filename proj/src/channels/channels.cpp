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

#include "triality/channels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "triality/error.hpp"

namespace triality {

namespace {

void require_rate(double gamma, const char* name) {
  if (!std::isfinite(gamma) || gamma < 0.0 || gamma > 1.0) {
    std::ostringstream msg;
    msg << name << " = " << gamma << " is outside [0, 1]";
    throw InvalidParameterError(msg.str());
  }
}

double completeness(const std::vector<ComplexMatrix>& ops, std::size_t dim) {
  ComplexMatrix sum = ComplexMatrix::zeros(dim, dim);
  for (const ComplexMatrix& e : ops) sum += mat_mul(adjoint(e), e);
  return max_abs_diff(sum, ComplexMatrix::identity(dim));
}

// |row><col| scaled by `amp`.
ComplexMatrix transition(std::size_t dim, std::size_t row, std::size_t col, double amp) {
  ComplexMatrix m(dim, dim);
  m(row, col) = amp;
  return m;
}

}  // namespace

KrausChannel::KrausChannel(std::string label, std::vector<ComplexMatrix> operators,
                           std::vector<ChannelParameter> params)
    : label_(std::move(label)), dim_(0), ops_(std::move(operators)), params_(std::move(params)) {
  if (ops_.empty()) throw DimensionError("KrausChannel: empty operator list");
  dim_ = ops_.front().rows();
  for (const ComplexMatrix& e : ops_) {
    if (e.rows() != dim_ || e.cols() != dim_) {
      throw DimensionError("KrausChannel: operators must all be square of equal size");
    }
  }
  for (const ChannelParameter& p : params_) require_rate(p.value, p.name.c_str());
  defect_ = completeness(ops_, dim_);
}

std::optional<double> KrausChannel::param(std::string_view name) const {
  for (const ChannelParameter& p : params_) {
    if (p.name == name) return p.value;
  }
  return std::nullopt;
}

double validate_cptp(const KrausChannel& channel) { return channel.completeness_defect(); }

DensityMatrix apply(const KrausChannel& channel, const DensityMatrix& rho) {
  if (channel.dim() != rho.dim()) {
    std::ostringstream msg;
    msg << "apply: channel '" << channel.label() << "' acts on dimension " << channel.dim()
        << " but the state has dimension " << rho.dim();
    throw DimensionError(msg.str());
  }
  if (channel.completeness_defect() > kIdentityTolerance) {
    std::ostringstream msg;
    msg << "apply: channel '" << channel.label() << "' is not trace preserving (defect "
        << channel.completeness_defect() << ")";
    throw ChannelError(msg.str());
  }
  ComplexMatrix out = ComplexMatrix::zeros(rho.dim(), rho.dim());
  for (const ComplexMatrix& e : channel.operators()) {
    out += mat_mul(mat_mul(e, rho.matrix()), adjoint(e));
  }
  return DensityMatrix(std::move(out));
}

KrausChannel compose(const KrausChannel& first, const KrausChannel& second) {
  if (first.dim() != second.dim()) {
    throw DimensionError("compose: channels act on different dimensions");
  }
  std::vector<ComplexMatrix> ops;
  ops.reserve(first.operators().size() * second.operators().size());
  for (const ComplexMatrix& f : second.operators()) {
    for (const ComplexMatrix& e : first.operators()) ops.push_back(mat_mul(f, e));
  }
  std::vector<ChannelParameter> params = first.params();
  params.insert(params.end(), second.params().begin(), second.params().end());
  return KrausChannel(first.label() + " then " + second.label(), std::move(ops),
                      std::move(params));
}

KrausChannel amplitude_damping_qubit(double gamma_a) {
  require_rate(gamma_a, "gamma_a");
  return KrausChannel("ad_qubit",
                      {ComplexMatrix::diagonal({1.0, std::sqrt(1.0 - gamma_a)}),
                       transition(2, 0, 1, std::sqrt(gamma_a))},
                      {{"gamma_a", gamma_a}});
}

KrausChannel phase_damping_qubit(double gamma_p) {
  require_rate(gamma_p, "gamma_p");
  return KrausChannel("pd_qubit",
                      {ComplexMatrix::diagonal({1.0, std::sqrt(1.0 - gamma_p)}),
                       ComplexMatrix::diagonal({0.0, std::sqrt(gamma_p)})},
                      {{"gamma_p", gamma_p}});
}

KrausChannel phase_damping_qutrit(double gamma_p) {
  require_rate(gamma_p, "gamma_p");
  const double keep = std::sqrt(1.0 - gamma_p);
  const double a = std::sqrt((1.0 + 2.0 * keep) / 3.0);
  const double b = std::sqrt((1.0 - keep) / 3.0);
  const Complex omega = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
  const Complex omega2 = omega * omega;
  return KrausChannel("pd_qutrit",
                      {ComplexMatrix::diagonal({a, a, a}),
                       ComplexMatrix::diagonal({b, b * omega, b * omega2}),
                       ComplexMatrix::diagonal({b, b * omega2, b * omega})},
                      {{"gamma_p", gamma_p}});
}

KrausChannel qutrit_decay_step(DecayStep step, double gamma) {
  require_rate(gamma, "gamma");
  const double keep = std::sqrt(1.0 - gamma);
  const double jump = std::sqrt(gamma);
  if (step == DecayStep::kUpper) {
    return KrausChannel("decay_2_to_1",
                        {ComplexMatrix::diagonal({1.0, 1.0, keep}), transition(3, 1, 2, jump)},
                        {{"gamma2", gamma}});
  }
  return KrausChannel("decay_1_to_0",
                      {ComplexMatrix::diagonal({1.0, keep, 1.0}), transition(3, 0, 1, jump)},
                      {{"gamma1", gamma}});
}

KrausChannel cascade_ad_qutrit(double gamma1, double gamma2) {
  require_rate(gamma1, "gamma1");
  require_rate(gamma2, "gamma2");
  const KrausChannel chain = compose(qutrit_decay_step(DecayStep::kUpper, gamma2),
                                     qutrit_decay_step(DecayStep::kLower, gamma1));
  return KrausChannel("ad_qutrit_cascade", chain.operators(),
                      {{"gamma1", gamma1}, {"gamma2", gamma2}});
}

KrausChannel literal_kraus_ad_qutrit(double gamma1, double gamma2) {
  require_rate(gamma1, "gamma1");
  require_rate(gamma2, "gamma2");
  return KrausChannel(
      "ad_qutrit_paper",
      {ComplexMatrix::diagonal({1.0, std::sqrt(1.0 - gamma1), std::sqrt(1.0 - gamma2)}),
       transition(3, 0, 1, std::sqrt(gamma1)), transition(3, 1, 2, std::sqrt(gamma2))},
      {{"gamma1", gamma1}, {"gamma2", gamma2}});
}

ComplementarityTriple predict_ad_qubit(const DensityMatrix& rho, double gamma_a) {
  if (rho.dim() != 2) throw DimensionError("predict_ad_qubit: state is not a qubit");
  require_rate(gamma_a, "gamma_a");
  const double r11 = rho.population(0);
  const double r22 = rho.population(1);
  const double coh2 = std::norm(rho(0, 1));
  const double concurrence2 = 4.0 * (r11 * r22 - coh2);
  const double shifted = r11 - r22 + 2.0 * gamma_a * r22;
  return {(1.0 - gamma_a) * 4.0 * coh2, shifted * shifted,
          (1.0 - gamma_a) * concurrence2 + 4.0 * gamma_a * (1.0 - gamma_a) * r22 * r22};
}

ComplementarityTriple predict_pd_qubit(const DensityMatrix& rho, double gamma_p) {
  if (rho.dim() != 2) throw DimensionError("predict_pd_qubit: state is not a qubit");
  require_rate(gamma_p, "gamma_p");
  const double r11 = rho.population(0);
  const double r22 = rho.population(1);
  const double coh2 = std::norm(rho(0, 1));
  const double concurrence2 = 4.0 * (r11 * r22 - coh2);
  return {(1.0 - gamma_p) * 4.0 * coh2, (r11 - r22) * (r11 - r22),
          concurrence2 + 4.0 * gamma_p * coh2};
}

ComplementarityTriple predict_pd_qutrit(const DensityMatrix& rho, double gamma_p) {
  if (rho.dim() != 3) throw DimensionError("predict_pd_qutrit: state is not a qutrit");
  require_rate(gamma_p, "gamma_p");
  const double v2 = visibility2(rho);
  const double p2 = predictability2(rho);
  return {(1.0 - gamma_p) * v2, p2, 1.0 - p2 - (1.0 - gamma_p) * v2};
}

GellMannVector gellmann_transform_ad(const GellMannVector& s, double gamma1, double gamma2) {
  require_rate(gamma1, "gamma1");
  require_rate(gamma2, "gamma2");
  const double f1 = std::sqrt(1.0 - gamma1);
  const double f2 = std::sqrt(1.0 - gamma2);
  GellMannVector out;
  out[1] = f1 * s[1];
  out[2] = f1 * s[2];
  out[4] = f2 * s[4];
  out[5] = f2 * s[5];
  out[6] = f1 * f2 * s[6];
  out[7] = f1 * f2 * s[7];
  out[8] = (1.0 - gamma2) * s[8] + 0.5 * gamma2;
  out[3] = (1.0 - gamma1) * s[3] + (std::numbers::sqrt3 / 3.0) * gamma1 * (1.0 - gamma2) * s[8];
  return out;
}

double DiscrepancyReport::max_abs_deviation() const noexcept {
  double worst = 0.0;
  for (const DiscrepancyEntry& e : entries) worst = std::max(worst, e.deviation);
  return worst;
}

bool DiscrepancyReport::all_agree() const noexcept {
  return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.agree; });
}

const DiscrepancyEntry& DiscrepancyReport::at(std::string_view quantity) const {
  for (const DiscrepancyEntry& e : entries) {
    if (e.quantity == quantity) return e;
  }
  throw std::out_of_range("DiscrepancyReport: no entry '" + std::string(quantity) + "'");
}

bool DiscrepancyReport::contains(std::string_view quantity) const noexcept {
  return std::any_of(entries.begin(), entries.end(),
                     [&](const auto& e) { return e.quantity == quantity; });
}

DiscrepancyReport compare_claims_vs_oracle(const DensityMatrix& rho, double gamma1,
                                           double gamma2) {
  if (rho.dim() != 3) throw DimensionError("compare_claims_vs_oracle: state is not a qutrit");
  const KrausChannel cascade = cascade_ad_qutrit(gamma1, gamma2);
  const DensityMatrix oracle = apply(cascade, rho);
  const DensityMatrix literal = apply(literal_kraus_ad_qutrit(gamma1, gamma2), rho);

  DiscrepancyReport report{cascade.label(), rho, gamma1, gamma2, {}};
  auto add = [&](std::string quantity, std::string description, double claimed, double truth,
                 std::optional<double> deviation = std::nullopt) {
    const double dev = deviation.value_or(std::abs(claimed - truth));
    report.entries.push_back({std::move(quantity), std::move(description), claimed, truth, dev,
                              dev <= kDiscrepancyTolerance});
  };

  const double p0 = rho.population(0);
  const double p1 = rho.population(1);
  const double p2 = rho.population(2);
  const double updated[3] = {p0 + gamma1 * p1 + gamma1 * gamma2 * p2,
                             (1.0 - gamma1) * p1 + gamma2 * (1.0 - gamma1) * p2,
                             (1.0 - gamma2) * p2};
  for (std::size_t k = 0; k < 3; ++k) {
    const std::string key = "population_" + std::to_string(k);
    add(key + ".update_equations", "printed population update equation",
        updated[k], oracle.population(k));
    add(key + ".three_operator_kraus", "three-operator Kraus set", literal.population(k),
        oracle.population(k));
  }

  // Level k decays with rate g_k; level 0 is stable.
  const double rate[3] = {0.0, gamma1, gamma2};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      const Complex claimed = std::sqrt((1.0 - rate[i]) * (1.0 - rate[j])) * rho(i, j);
      add("coherence_" + std::to_string(i) + std::to_string(j) + ".damping_law",
          "|rho'_ij| from sqrt((1-g_i)(1-g_j)) rho_ij", std::abs(claimed), std::abs(oracle(i, j)),
          std::abs(claimed - oracle(i, j)));
    }
  }

  const GellMannVector transformed = gellmann_transform_ad(gellmann_decompose(rho), gamma1, gamma2);
  const GellMannVector decomposed = gellmann_decompose(oracle);
  for (std::size_t k = 1; k <= 8; ++k) {
    add("s" + std::to_string(k) + ".transform", "closed-form Gell-Mann update", transformed[k],
        decomposed[k]);
  }

  const ComplementarityTriple measured = measure_triple(oracle);
  const double v2_claim = transformed[1] * transformed[1] + transformed[2] * transformed[2] +
                          transformed[4] * transformed[4] + transformed[5] * transformed[5] +
                          transformed[6] * transformed[6] + transformed[7] * transformed[7];
  const double p2_claim = transformed[3] * transformed[3] + transformed[8] * transformed[8];
  add("v2.transform", "V'^2 from the Gell-Mann update", v2_claim, measured.v2);
  add("p2.transform", "P'^2 from the Gell-Mann update", p2_claim, measured.p2);
  add("e2.transform", "1 - |s'|^2 from the Gell-Mann update", 1.0 - transformed.length2(),
      measured.e2);

  if (gamma1 == gamma2) {
    const double keep = 1.0 - gamma1;
    add("v2.uniform_damping_claim", "all coherences scaled by (1-g): V'^2 = (1-g)^2 V^2",
        keep * keep * visibility2(rho), measured.v2);
  }
  return report;
}

}  // namespace triality
