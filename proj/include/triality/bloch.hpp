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

#include <array>
#include <cstddef>

#include "triality/matrix.hpp"
#include "triality/state.hpp"

namespace triality {

/// Pauli matrices sigma_x, sigma_y, sigma_z.
const std::array<ComplexMatrix, 3>& pauli_matrices();

/// Gell-Mann matrices lambda_1..lambda_8 (index 0 holds lambda_1).
///
/// lambda_1, lambda_2 act on paths (1,2); lambda_4, lambda_5 on (1,3);
/// lambda_6, lambda_7 on (2,3); lambda_3 = diag(1,-1,0) and
/// lambda_8 = diag(1,1,-2)/sqrt(3).
const std::array<ComplexMatrix, 8>& gellmann_matrices();

/// Qubit state as rho0*I + rho1*sigma_x + rho2*sigma_y + rho3*sigma_z.
struct BlochVector {
  double rho0 = 0.5;
  double rho1 = 0.0;
  double rho2 = 0.0;
  double rho3 = 0.0;

  double length2() const noexcept { return rho1 * rho1 + rho2 * rho2 + rho3 * rho3; }
};

/// Qutrit state as I/3 + (1/sqrt 3) sum_i S_i lambda_i.
struct GellMannVector {
  std::array<double, 8> s{};

  /// S_k, one-based.
  double operator[](std::size_t one_based) const { return s.at(one_based - 1); }
  double& operator[](std::size_t one_based) { return s.at(one_based - 1); }

  double length2() const noexcept;
};

/// rho1 = Re rho_21, rho2 = Im rho_21, rho3 = (rho_11 - rho_22)/2.
BlochVector pauli_decompose(const DensityMatrix& rho);

/// Throws InvalidStateError if rho0 != 1/2 or the vector leaves the Bloch ball.
DensityMatrix pauli_reconstruct(const BlochVector& b);

/// S_i = (sqrt 3 / 2) Tr(rho lambda_i).
GellMannVector gellmann_decompose(const DensityMatrix& rho);

/// Throws InvalidStateError naming the minimum eigenvalue if the result is
/// not positive semidefinite.
DensityMatrix gellmann_reconstruct(const GellMannVector& v);

}  // namespace triality
