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

#include "triality/cli/sampling.hpp"

namespace triality::cli {

namespace {

Complex gaussian(Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  const double re = normal(rng);
  const double im = normal(rng);
  return {re, im};
}

}  // namespace

PureState random_pure_state(Rng& rng, std::size_t dim) {
  std::vector<Complex> v(dim);
  for (Complex& z : v) z = gaussian(rng);
  return PureState::normalized(std::move(v));
}

DensityMatrix random_density_matrix(Rng& rng, std::size_t dim) {
  std::uniform_int_distribution<std::size_t> rank_dist(1, dim);
  const std::size_t rank = rank_dist(rng);
  ComplexMatrix g(dim, rank);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t k = 0; k < rank; ++k) g(i, k) = gaussian(rng);
  ComplexMatrix rho = mat_mul(g, adjoint(g));
  const double tr = rho.trace().real();
  rho *= 1.0 / tr;
  // Exact Hermitian symmetry; the product is Hermitian only up to round-off.
  for (std::size_t i = 0; i < dim; ++i) {
    rho(i, i) = rho(i, i).real();
    for (std::size_t j = i + 1; j < dim; ++j) rho(j, i) = std::conj(rho(i, j));
  }
  return DensityMatrix(std::move(rho));
}

std::vector<PureState> random_detectors(Rng& rng, std::size_t count, std::size_t detector_dim) {
  std::vector<PureState> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_pure_state(rng, detector_dim));
  return out;
}

std::vector<DensityMatrix> boundary_states(std::size_t dim) {
  std::vector<DensityMatrix> out;
  out.push_back(density_from_pure(PureState::uniform(dim)));
  for (std::size_t k = 0; k < dim; ++k) out.push_back(density_from_pure(PureState::basis(dim, k)));
  out.push_back(DensityMatrix::maximally_mixed(dim));
  return out;
}

}  // namespace triality::cli
