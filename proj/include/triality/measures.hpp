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

#include "triality/state.hpp"

namespace triality {

/// Squared visibility, predictability and entanglement of one path state.
struct ComplementarityTriple {
  double v2 = 0.0;
  double p2 = 0.0;
  double e2 = 0.0;

  double sum() const noexcept { return v2 + p2 + e2; }
  /// Every component within [-tol, 1 + tol].
  bool in_range(double tol = kIdentityTolerance) const noexcept;
  /// Copy with round-off negatives in [-1e-12, 0) reported as 0.
  ComplementarityTriple clamped() const noexcept;
};

/// Clamps values in [-1e-12, 0) to zero; anything else passes through.
double clamp_roundoff(double x) noexcept;

/// V^2 = n/(n-1) sum_{i != j} |rho_ij|^2.
double visibility2(const DensityMatrix& rho);

/// P^2 = sum_i rho_ii^2 - 1/(n-1) sum_{i != j} rho_ii rho_jj.
double predictability2(const DensityMatrix& rho);

/// 1 - V^2 - P^2. Applies to any state, including channel outputs, and
/// equals n/(n-1) (1 - Tr rho^2).
double entanglement2_residual(const DensityMatrix& rho);

/// n/(2(n-1)) sum_{i<j} E_ij^2 with E_ij^2 = 4|c_i|^2|c_j|^2 (1 - |G_ij|^2).
///
/// Only defined for the pure system-detector construction, where it matches
/// entanglement2_residual(reduced_density(psi, gram)).
double entanglement2_pairwise(const PureState& psi, const DetectorGram& gram);

/// Measures of a general state, with the residual entanglement.
ComplementarityTriple measure_triple(const DensityMatrix& rho);

/// (V^2, P^2) of the reduced path state plus the pairwise entanglement.
ComplementarityTriple triality_triple(const PureState& psi, const DetectorGram& gram);

}  // namespace triality
