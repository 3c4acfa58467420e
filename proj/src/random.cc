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

#include "weylkit/random.h"

#include <cmath>
#include <numbers>

namespace weylkit::random {

Complex gaussian(Rng &rng) {
    std::normal_distribution<double> n(0.0, 1.0);
    double re = n(rng);
    double im = n(rng);
    return {re, im};
}

ComplexMatrix matrix(size_t rows, size_t cols, Rng &rng) {
    ComplexMatrix m(rows, cols);
    for (size_t r = 0; r < rows; r++) {
        for (size_t c = 0; c < cols; c++) {
            m(r, c) = gaussian(rng);
        }
    }
    return m;
}

Ket ket(size_t d, Rng &rng) {
    ComplexVector v(d);
    for (size_t i = 0; i < d; i++) {
        v[i] = gaussian(rng);
    }
    return Ket::normalized(std::move(v));
}

DensityMatrix density(size_t d, Rng &rng) {
    auto g = matrix(d, d, rng);
    auto rho = matmul(g, dagger(g));
    // Exact Hermitian symmetry before normalizing.
    for (size_t i = 0; i < d; i++) {
        rho(i, i) = rho(i, i).real();
        for (size_t j = i + 1; j < d; j++) {
            rho(j, i) = std::conj(rho(i, j));
        }
    }
    rho *= 1.0 / trace(rho).real();
    return DensityMatrix(std::move(rho));
}

ComplexMatrix unitary(size_t d, Rng &rng) {
    auto g = matrix(d, d, rng);
    std::vector<ComplexVector> cols;
    for (size_t c = 0; c < d; c++) {
        ComplexVector v = g.col(c);
        for (const auto &q : cols) {
            Complex proj = inner(q, v);
            for (size_t r = 0; r < d; r++) {
                v[r] -= proj * q[r];
            }
        }
        double n = v.norm();
        for (size_t r = 0; r < d; r++) {
            v[r] /= n;
        }
        cols.push_back(std::move(v));
    }
    ComplexMatrix u(d, d);
    for (size_t c = 0; c < d; c++) {
        for (size_t r = 0; r < d; r++) {
            u(r, c) = cols[c][r];
        }
    }
    return u;
}

GammaTable gamma(size_t d, Rng &rng) {
    std::vector<Complex> g(d * d);
    for (auto &z : g) {
        z = gaussian(rng);
    }
    auto mass = gamma_column_masses(d, g);
    for (size_t a = 0; a < d; a++) {
        for (size_t b = 0; b < d; b++) {
            g[a * d + b] /= std::sqrt(mass[b]);
        }
    }
    return GammaTable(d, std::move(g));
}

GammaTable uniform_magnitude_gamma(size_t d, Rng &rng) {
    std::uniform_real_distribution<double> phase(0.0, 2 * std::numbers::pi);
    std::vector<Complex> g(d * d);
    for (auto &z : g) {
        z = std::polar(1.0 / std::sqrt(static_cast<double>(d)), phase(rng));
    }
    return GammaTable(d, std::move(g));
}

}  // namespace weylkit::random
