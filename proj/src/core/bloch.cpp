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

#include "triality/bloch.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "triality/error.hpp"

namespace triality {

namespace {

constexpr double kSqrt3 = 1.7320508075688772;
const Complex kI{0.0, 1.0};

}  // namespace

const std::array<ComplexMatrix, 3>& pauli_matrices() {
  static const std::array<ComplexMatrix, 3> sigma{
      ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}},
      ComplexMatrix{{0.0, -kI}, {kI, 0.0}},
      ComplexMatrix{{1.0, 0.0}, {0.0, -1.0}},
  };
  return sigma;
}

const std::array<ComplexMatrix, 8>& gellmann_matrices() {
  static const std::array<ComplexMatrix, 8> lambda{
      ComplexMatrix{{0.0, 1.0, 0.0}, {1.0, 0.0, 0.0}, {0.0, 0.0, 0.0}},
      ComplexMatrix{{0.0, -kI, 0.0}, {kI, 0.0, 0.0}, {0.0, 0.0, 0.0}},
      ComplexMatrix{{1.0, 0.0, 0.0}, {0.0, -1.0, 0.0}, {0.0, 0.0, 0.0}},
      ComplexMatrix{{0.0, 0.0, 1.0}, {0.0, 0.0, 0.0}, {1.0, 0.0, 0.0}},
      ComplexMatrix{{0.0, 0.0, -kI}, {0.0, 0.0, 0.0}, {kI, 0.0, 0.0}},
      ComplexMatrix{{0.0, 0.0, 0.0}, {0.0, 0.0, 1.0}, {0.0, 1.0, 0.0}},
      ComplexMatrix{{0.0, 0.0, 0.0}, {0.0, 0.0, -kI}, {0.0, kI, 0.0}},
      (1.0 / kSqrt3) * ComplexMatrix{{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, -2.0}},
  };
  return lambda;
}

double GellMannVector::length2() const noexcept {
  return std::inner_product(s.begin(), s.end(), s.begin(), 0.0);
}

BlochVector pauli_decompose(const DensityMatrix& rho) {
  if (rho.dim() != 2) throw DimensionError("pauli_decompose: state is not a qubit");
  const Complex lower = rho(1, 0);
  return BlochVector{0.5, lower.real(), lower.imag(), 0.5 * (rho.population(0) - rho.population(1))};
}

DensityMatrix pauli_reconstruct(const BlochVector& b) {
  if (std::abs(b.rho0 - 0.5) > kStateTolerance) {
    throw InvalidStateError("pauli_reconstruct: rho0 must be 1/2 for a unit-trace state");
  }
  if (b.length2() > 0.25 + kStateTolerance) {
    std::ostringstream msg;
    msg << "pauli_reconstruct: |rho|^2 = " << b.length2() << " exceeds the Bloch-ball bound 1/4";
    throw InvalidStateError(msg.str());
  }
  ComplexMatrix m{{b.rho0 + b.rho3, Complex(b.rho1, -b.rho2)},
                  {Complex(b.rho1, b.rho2), b.rho0 - b.rho3}};
  return DensityMatrix(std::move(m));
}

GellMannVector gellmann_decompose(const DensityMatrix& rho) {
  if (rho.dim() != 3) throw DimensionError("gellmann_decompose: state is not a qutrit");
  GellMannVector v;
  const auto& lambda = gellmann_matrices();
  for (std::size_t k = 0; k < 8; ++k) {
    v.s[k] = 0.5 * kSqrt3 * mat_mul(rho.matrix(), lambda[k]).trace().real();
  }
  return v;
}

DensityMatrix gellmann_reconstruct(const GellMannVector& v) {
  ComplexMatrix m = (1.0 / 3.0) * ComplexMatrix::identity(3);
  const auto& lambda = gellmann_matrices();
  for (std::size_t k = 0; k < 8; ++k) m += (v.s[k] / kSqrt3) * lambda[k];
  const double min_eig = psd_min_eigenvalue(m);
  if (min_eig < -kStateTolerance) {
    std::ostringstream msg;
    msg << "gellmann_reconstruct: coefficients give a non-PSD matrix (min eigenvalue " << min_eig
        << ")";
    throw InvalidStateError(msg.str());
  }
  return DensityMatrix(std::move(m));
}

}  // namespace triality
