// Copyright 2026 The weylkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef WEYLKIT_RANDOM_H
#define WEYLKIT_RANDOM_H

#include <random>

#include "weylkit/dilation.h"
#include "weylkit/numerics.h"

// Random instances for property checks. Entries are complex Gaussians.
namespace weylkit::random {

using Rng = std::mt19937_64;

inline constexpr uint64_t kDefaultSeed = 20260101;

Complex gaussian(Rng &rng);
ComplexMatrix matrix(size_t rows, size_t cols, Rng &rng);
Ket ket(size_t d, Rng &rng);
/// Full-rank mixed state G G^dagger / tr(G G^dagger).
DensityMatrix density(size_t d, Rng &rng);
/// Haar-ish unitary from Gram-Schmidt on a Gaussian matrix.
ComplexMatrix unitary(size_t d, Rng &rng);
/// Gaussian amplitudes with every column rescaled to unit mass.
GammaTable gamma(size_t d, Rng &rng);
/// |gamma_{a,b}| = 1/sqrt(d) with uniformly random phases.
GammaTable uniform_magnitude_gamma(size_t d, Rng &rng);

}  // namespace weylkit::random

#endif  // WEYLKIT_RANDOM_H
