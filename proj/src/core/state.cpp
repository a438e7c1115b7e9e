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

#include "triality/state.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "triality/error.hpp"

namespace triality {

namespace {

double norm2(std::span<const Complex> v) {
  double s = 0.0;
  for (const Complex& z : v) s += std::norm(z);
  return s;
}

}  // namespace

PureState::PureState(std::vector<Complex> amplitudes) : amps_(std::move(amplitudes)) {
  if (amps_.empty()) throw DimensionError("PureState: empty amplitude vector");
  for (const Complex& z : amps_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw InvalidStateError("PureState: non-finite amplitude");
    }
  }
  const double n2 = norm2(amps_);
  if (std::abs(n2 - 1.0) > kStateTolerance) {
    std::ostringstream msg;
    msg << "PureState: not normalized (squared norm " << n2 << ")";
    throw InvalidStateError(msg.str());
  }
}

PureState PureState::normalized(std::vector<Complex> amplitudes) {
  const double n = std::sqrt(norm2(amplitudes));
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw InvalidStateError("PureState::normalized: zero or non-finite vector");
  }
  for (Complex& z : amplitudes) z /= n;
  return PureState(std::move(amplitudes));
}

PureState PureState::basis(std::size_t dim, std::size_t index) {
  if (index >= dim) throw DimensionError("PureState::basis: index out of range");
  std::vector<Complex> v(dim);
  v[index] = 1.0;
  return PureState(std::move(v));
}

PureState PureState::uniform(std::size_t dim) {
  if (dim == 0) throw DimensionError("PureState::uniform: zero dimension");
  return PureState(std::vector<Complex>(dim, 1.0 / std::sqrt(static_cast<double>(dim))));
}

Complex inner(const PureState& a, const PureState& b) {
  if (a.dim() != b.dim()) throw DimensionError("inner: dimension mismatch");
  Complex s = 0.0;
  for (std::size_t k = 0; k < a.dim(); ++k) s += std::conj(a[k]) * b[k];
  return s;
}

DensityMatrix::DensityMatrix(ComplexMatrix matrix, double tol) : m_(std::move(matrix)) {
  if (!m_.is_square()) throw DimensionError("DensityMatrix: matrix is not square");
  const double herm = hermiticity_defect(m_);
  if (herm > tol) {
    std::ostringstream msg;
    msg << "DensityMatrix: not Hermitian (defect " << herm << ")";
    throw InvalidStateError(msg.str());
  }
  const Complex tr = m_.trace();
  if (std::abs(tr - 1.0) > tol) {
    std::ostringstream msg;
    msg << "DensityMatrix: trace " << tr.real() << (tr.imag() < 0 ? "" : "+") << tr.imag()
        << "i is not 1";
    throw InvalidStateError(msg.str());
  }
  const double min_eig = psd_min_eigenvalue(m_);
  if (min_eig < -tol) {
    std::ostringstream msg;
    msg << "DensityMatrix: not positive semidefinite (min eigenvalue " << min_eig << ")";
    throw InvalidStateError(msg.str());
  }
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
  return DensityMatrix((1.0 / static_cast<double>(dim)) * ComplexMatrix::identity(dim));
}

DetectorGram::DetectorGram(ComplexMatrix overlaps, double tol) : g_(std::move(overlaps)) {
  if (!g_.is_square()) throw DimensionError("DetectorGram: matrix is not square");
  const double herm = hermiticity_defect(g_);
  if (herm > tol) {
    std::ostringstream msg;
    msg << "DetectorGram: not Hermitian (defect " << herm << ")";
    throw InvalidStateError(msg.str());
  }
  for (std::size_t i = 0; i < g_.rows(); ++i) {
    if (std::abs(g_(i, i) - 1.0) > tol) {
      throw InvalidStateError("DetectorGram: diagonal entries must equal 1");
    }
    for (std::size_t j = 0; j < g_.cols(); ++j) {
      if (std::abs(g_(i, j)) > 1.0 + tol) {
        throw InvalidStateError("DetectorGram: overlap magnitude exceeds 1");
      }
    }
  }
  const double min_eig = psd_min_eigenvalue(g_);
  if (min_eig < -tol) {
    std::ostringstream msg;
    msg << "DetectorGram: not positive semidefinite (min eigenvalue " << min_eig << ")";
    throw InvalidStateError(msg.str());
  }
}

DetectorGram DetectorGram::parallel(std::size_t dim) {
  return DetectorGram(ComplexMatrix(dim, dim, std::vector<Complex>(dim * dim, 1.0)));
}

DetectorGram DetectorGram::orthogonal(std::size_t dim) {
  return DetectorGram(ComplexMatrix::identity(dim));
}

double purity(const DensityMatrix& rho) {
  // Tr(rho^2) = sum_ij |rho_ij|^2 for Hermitian rho.
  double s = 0.0;
  for (const Complex& z : rho.matrix().entries()) s += std::norm(z);
  return s;
}

DensityMatrix density_from_pure(const PureState& psi) {
  const std::size_t n = psi.dim();
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = psi[i] * std::conj(psi[j]);
  }
  return DensityMatrix(std::move(m));
}

DetectorGram gram_from_detector_states(std::span<const PureState> detectors) {
  if (detectors.empty()) throw DimensionError("gram_from_detector_states: no detector states");
  const std::size_t m = detectors.front().dim();
  for (const PureState& d : detectors) {
    if (d.dim() != m) throw DimensionError("gram_from_detector_states: mixed detector dimensions");
  }
  const std::size_t n = detectors.size();
  ComplexMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    g(i, i) = 1.0;
    for (std::size_t j = i + 1; j < n; ++j) {
      g(i, j) = inner(detectors[i], detectors[j]);
      g(j, i) = std::conj(g(i, j));
    }
  }
  return DetectorGram(std::move(g));
}

DensityMatrix reduced_density(const PureState& psi, const DetectorGram& gram) {
  if (psi.dim() != gram.dim()) {
    throw DimensionError("reduced_density: path count differs from overlap matrix size");
  }
  const std::size_t n = psi.dim();
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = psi[i] * std::conj(psi[j]) * gram(j, i);
  }
  return DensityMatrix(std::move(m));
}

PureState composite_state(const PureState& psi, std::span<const PureState> detectors) {
  if (detectors.size() != psi.dim()) {
    throw DimensionError("composite_state: need exactly one detector state per path");
  }
  const std::size_t m = detectors.front().dim();
  std::vector<Complex> out;
  out.reserve(psi.dim() * m);
  for (std::size_t i = 0; i < psi.dim(); ++i) {
    if (detectors[i].dim() != m) throw DimensionError("composite_state: mixed detector dimensions");
    for (std::size_t k = 0; k < m; ++k) out.push_back(psi[i] * detectors[i][k]);
  }
  return PureState(std::move(out));
}

DensityMatrix partial_trace_detector(const PureState& composite, std::size_t paths,
                                     std::size_t detector_dim) {
  if (paths == 0 || detector_dim == 0 || composite.dim() != paths * detector_dim) {
    std::ostringstream msg;
    msg << "partial_trace_detector: dimension " << composite.dim() << " is not " << paths << " x "
        << detector_dim;
    throw DimensionError(msg.str());
  }
  ComplexMatrix rho(paths, paths);
  for (std::size_t i = 0; i < paths; ++i) {
    for (std::size_t j = 0; j < paths; ++j) {
      Complex s = 0.0;
      for (std::size_t k = 0; k < detector_dim; ++k) {
        s += composite[i * detector_dim + k] * std::conj(composite[j * detector_dim + k]);
      }
      rho(i, j) = s;
    }
  }
  return DensityMatrix(std::move(rho));
}

}  // namespace triality
