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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "triality/bloch.hpp"
#include "triality/matrix.hpp"
#include "triality/measures.hpp"
#include "triality/state.hpp"

namespace triality {

struct ChannelParameter {
  std::string name;
  double value = 0.0;
};

/// Ordered Kraus set {E_k} acting as rho -> sum_k E_k rho E_k^dagger.
///
/// Construction checks shapes and parameter ranges only, so that broken
/// sets can be represented and diagnosed; apply() refuses any set whose
/// completeness defect exceeds kIdentityTolerance.
class KrausChannel {
 public:
  KrausChannel(std::string label, std::vector<ComplexMatrix> operators,
               std::vector<ChannelParameter> params = {});

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<ComplexMatrix>& operators() const noexcept { return ops_; }
  const std::string& label() const noexcept { return label_; }
  const std::vector<ChannelParameter>& params() const noexcept { return params_; }
  std::optional<double> param(std::string_view name) const;
  /// max |(sum_k E_k^dagger E_k - I)_ij|, computed once at construction.
  double completeness_defect() const noexcept { return defect_; }

 private:
  std::string label_;
  std::size_t dim_;
  std::vector<ComplexMatrix> ops_;
  std::vector<ChannelParameter> params_;
  double defect_;
};

/// max-norm of sum_k E_k^dagger E_k - I. The caller decides the tolerance.
double validate_cptp(const KrausChannel& channel);

/// Throws DimensionError on size mismatch and ChannelError if the set is not
/// trace preserving within kIdentityTolerance.
DensityMatrix apply(const KrausChannel& channel, const DensityMatrix& rho);

/// Channel that applies `first` and then `second`: operators F_j E_k.
KrausChannel compose(const KrausChannel& first, const KrausChannel& second);

/// E0 = diag(1, sqrt(1-g)), E1 = sqrt(g) |0><1|.
KrausChannel amplitude_damping_qubit(double gamma_a);

/// E0 = diag(1, sqrt(1-g)), E1 = diag(0, sqrt(g)).
KrausChannel phase_damping_qubit(double gamma_p);

/// Three diagonal operators built from the cube roots of unity; every
/// coherence shrinks by sqrt(1-g) and populations are untouched.
KrausChannel phase_damping_qutrit(double gamma_p);

/// One link of the qutrit decay ladder.
enum class DecayStep {
  kUpper,  ///< |2> -> |1>
  kLower,  ///< |1> -> |0>
};

KrausChannel qutrit_decay_step(DecayStep step, double gamma);

/// |2> -> |1> with rate gamma2 followed by |1> -> |0> with rate gamma1, as a
/// single four-operator set. Populations:
///   rho'_00 = rho_00 + g1 rho_11 + g1 g2 rho_22
///   rho'_11 = (1-g1) rho_11 + g2 (1-g1) rho_22
///   rho'_22 = (1-g2) rho_22
KrausChannel cascade_ad_qutrit(double gamma1, double gamma2);

/// The three-operator set {diag(1, sqrt(1-g1), sqrt(1-g2)), sqrt(g1)|0><1|,
/// sqrt(g2)|1><2|}. Trace preserving, but it moves g2 rho_22 into |1> without
/// the subsequent (1-g1) decay, so it is not the cascade above.
KrausChannel literal_kraus_ad_qutrit(double gamma1, double gamma2);

// Closed-form predictions for the triple after each channel.

ComplementarityTriple predict_ad_qubit(const DensityMatrix& rho, double gamma_a);
ComplementarityTriple predict_pd_qubit(const DensityMatrix& rho, double gamma_p);
ComplementarityTriple predict_pd_qutrit(const DensityMatrix& rho, double gamma_p);

/// Closed-form Gell-Mann update claimed for the qutrit decay:
///   s'_{1,2} = sqrt(1-g1) s,  s'_{4,5} = sqrt(1-g2) s,
///   s'_{6,7} = sqrt((1-g1)(1-g2)) s,
///   s'_8 = (1-g2) s_8 + g2/2,
///   s'_3 = (1-g1) s_3 + (sqrt 3/3) g1 (1-g2) s_8.
/// Kept for comparison only; the s'_3 rule does not follow from any of the
/// Kraus sets above (see compare_claims_vs_oracle).
GellMannVector gellmann_transform_ad(const GellMannVector& s, double gamma1, double gamma2);

/// One compared quantity of a DiscrepancyReport.
struct DiscrepancyEntry {
  std::string quantity;     ///< machine key, e.g. "population_0.update_equations"
  std::string description;  ///< what the claimed value is
  double claimed_value = 0.0;
  double oracle_value = 0.0;
  double deviation = 0.0;
  bool agree = true;  ///< deviation <= kDiscrepancyTolerance
};

inline constexpr double kDiscrepancyTolerance = 1e-10;

/// Claimed closed forms for the qutrit decay checked against the
/// matrix-level cascade channel on one input state.
struct DiscrepancyReport {
  std::string channel_label;
  DensityMatrix test_state;
  double gamma1 = 0.0;
  double gamma2 = 0.0;
  std::vector<DiscrepancyEntry> entries;

  double max_abs_deviation() const noexcept;
  bool all_agree() const noexcept;
  /// Throws std::out_of_range if `quantity` is absent.
  const DiscrepancyEntry& at(std::string_view quantity) const;
  bool contains(std::string_view quantity) const noexcept;
};

/// Compares, on a qutrit state:
///  (a) printed population update equations and the three-operator Kraus set
///      against the cascade output,
///  (b) the coherence damping law against the cascade output,
///  (c) gellmann_transform_ad against the decomposition of the cascade output,
///  (d) the triple implied by (c), and for g1 == g2 the uniform (1-g)^2
///      visibility scaling, against the measured triple.
DiscrepancyReport compare_claims_vs_oracle(const DensityMatrix& rho, double gamma1, double gamma2);

}  // namespace triality
