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
#include <random>
#include <vector>

#include "triality/state.hpp"

namespace triality::cli {

using Rng = std::mt19937_64;

/// Haar-random pure state (normalized complex Gaussian vector).
PureState random_pure_state(Rng& rng, std::size_t dim);

/// rho = G G^dagger / Tr with G a dim x r complex Gaussian matrix, r drawn
/// uniformly from 1..dim, so rank-deficient and pure states both occur.
DensityMatrix random_density_matrix(Rng& rng, std::size_t dim);

/// `count` random detector states of dimension `detector_dim`.
std::vector<PureState> random_detectors(Rng& rng, std::size_t count, std::size_t detector_dim);

/// Deterministic edge cases: the maximally coherent state, every basis
/// state, and the maximally mixed state.
std::vector<DensityMatrix> boundary_states(std::size_t dim);

}  // namespace triality::cli
