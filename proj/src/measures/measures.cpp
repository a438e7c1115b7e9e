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

#include "triality/measures.hpp"

#include <cmath>

#include "triality/error.hpp"

namespace triality {

namespace {

double path_count(const DensityMatrix& rho) {
  if (rho.dim() < 2) throw DimensionError("measures need at least two paths");
  return static_cast<double>(rho.dim());
}

}  // namespace

bool ComplementarityTriple::in_range(double tol) const noexcept {
  auto ok = [tol](double x) { return x >= -tol && x <= 1.0 + tol; };
  return ok(v2) && ok(p2) && ok(e2);
}

double clamp_roundoff(double x) noexcept { return (x < 0.0 && x >= -1e-12) ? 0.0 : x; }

ComplementarityTriple ComplementarityTriple::clamped() const noexcept {
  return {clamp_roundoff(v2), clamp_roundoff(p2), clamp_roundoff(e2)};
}

double visibility2(const DensityMatrix& rho) {
  const double n = path_count(rho);
  double off = 0.0;
  for (std::size_t i = 0; i < rho.dim(); ++i) {
    for (std::size_t j = 0; j < rho.dim(); ++j) {
      if (i != j) off += std::norm(rho(i, j));
    }
  }
  return n / (n - 1.0) * off;
}

double predictability2(const DensityMatrix& rho) {
  const double n = path_count(rho);
  double squares = 0.0;
  double cross = 0.0;
  for (std::size_t i = 0; i < rho.dim(); ++i) {
    squares += rho.population(i) * rho.population(i);
    for (std::size_t j = 0; j < rho.dim(); ++j) {
      if (i != j) cross += rho.population(i) * rho.population(j);
    }
  }
  return squares - cross / (n - 1.0);
}

double entanglement2_residual(const DensityMatrix& rho) {
  return 1.0 - visibility2(rho) - predictability2(rho);
}

double entanglement2_pairwise(const PureState& psi, const DetectorGram& gram) {
  if (psi.dim() != gram.dim()) {
    throw DimensionError("entanglement2_pairwise: path count differs from overlap matrix size");
  }
  if (psi.dim() < 2) throw DimensionError("entanglement2_pairwise: need at least two paths");
  const double n = static_cast<double>(psi.dim());
  double pairs = 0.0;
  for (std::size_t i = 0; i < psi.dim(); ++i) {
    for (std::size_t j = i + 1; j < psi.dim(); ++j) {
      const double concurrence2 =
          4.0 * std::norm(psi[i]) * std::norm(psi[j]) * (1.0 - std::norm(gram(i, j)));
      pairs += concurrence2;
    }
  }
  return n / (2.0 * (n - 1.0)) * pairs;
}

ComplementarityTriple measure_triple(const DensityMatrix& rho) {
  const double v2 = visibility2(rho);
  const double p2 = predictability2(rho);
  return {v2, p2, 1.0 - v2 - p2};
}

ComplementarityTriple triality_triple(const PureState& psi, const DetectorGram& gram) {
  const DensityMatrix reduced = reduced_density(psi, gram);
  return {visibility2(reduced), predictability2(reduced), entanglement2_pairwise(psi, gram)};
}

}  // namespace triality
