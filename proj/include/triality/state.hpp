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

#include <cstddef>
#include <span>
#include <vector>

#include "triality/matrix.hpp"

namespace triality {

/// Normalized amplitude vector (c_1, ..., c_n) over the path basis, or a
/// detector state when used as a path marker.
class PureState {
 public:
  /// Throws InvalidStateError unless sum |c_i|^2 = 1 within kStateTolerance.
  explicit PureState(std::vector<Complex> amplitudes);

  /// Scales an arbitrary nonzero vector to unit norm.
  static PureState normalized(std::vector<Complex> amplitudes);
  static PureState basis(std::size_t dim, std::size_t index);
  /// Equal-amplitude, equal-phase superposition over all paths.
  static PureState uniform(std::size_t dim);

  std::size_t dim() const noexcept { return amps_.size(); }
  const Complex& operator[](std::size_t i) const { return amps_[i]; }
  std::span<const Complex> amplitudes() const noexcept { return amps_; }

 private:
  std::vector<Complex> amps_;
};

/// Complex inner product <a|b>.
Complex inner(const PureState& a, const PureState& b);

/// Hermitian, unit-trace, positive semidefinite matrix.
class DensityMatrix {
 public:
  /// Validates all three invariants with tolerance `tol`; never repairs input.
  explicit DensityMatrix(ComplexMatrix matrix, double tol = kStateTolerance);

  static DensityMatrix maximally_mixed(std::size_t dim);

  std::size_t dim() const noexcept { return m_.rows(); }
  const ComplexMatrix& matrix() const noexcept { return m_; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  /// Real population rho_ii.
  double population(std::size_t i) const { return m_(i, i).real(); }

 private:
  ComplexMatrix m_;
};

/// Detector overlap matrix G_ij = <d_i|d_j>: Hermitian, unit diagonal, PSD.
class DetectorGram {
 public:
  explicit DetectorGram(ComplexMatrix overlaps, double tol = kStateTolerance);

  /// All detector states parallel: G_ij = 1.
  static DetectorGram parallel(std::size_t dim);
  /// Orthogonal detector states: G = I.
  static DetectorGram orthogonal(std::size_t dim);

  std::size_t dim() const noexcept { return g_.rows(); }
  const ComplexMatrix& matrix() const noexcept { return g_; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return g_(i, j); }

 private:
  ComplexMatrix g_;
};

/// Tr(rho^2).
double purity(const DensityMatrix& rho);

/// |psi><psi|, i.e. rho_ij = c_i conj(c_j).
DensityMatrix density_from_pure(const PureState& psi);

/// Overlaps of one detector state per path. All states must share a dimension.
DetectorGram gram_from_detector_states(std::span<const PureState> detectors);

/// Path state with coherences suppressed by detector overlaps.
///
/// rho_ij = c_i conj(c_j) <d_j|d_i> = c_i conj(c_j) G_ji. With the ket-bra
/// convention of density_from_pure this is the overlap factor that makes the
/// result equal the detector partial trace of the composite state; for real
/// overlaps it is the plain entrywise product with G.
DensityMatrix reduced_density(const PureState& psi, const DetectorGram& gram);

/// sum_i c_i |i> (x) |d_i>, laid out as n blocks of length m.
PureState composite_state(const PureState& psi, std::span<const PureState> detectors);

/// Tr_det |Psi><Psi| for a composite vector of n paths by m detector levels.
DensityMatrix partial_trace_detector(const PureState& composite, std::size_t paths,
                                     std::size_t detector_dim);

}  // namespace triality
