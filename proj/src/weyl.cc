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

#include "weylkit/weyl.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "weylkit/errors.h"

namespace weylkit {

size_t mod_d(int64_t x, size_t d) {
    auto m = static_cast<int64_t>(d);
    int64_t r = x % m;
    return static_cast<size_t>(r < 0 ? r + m : r);
}

Complex omega(int64_t d) {
    if (d < 1) {
        throw DomainError("omega: d must be >= 1, got " + std::to_string(d));
    }
    return omega_pow(static_cast<size_t>(d), 1);
}

Complex omega_pow(size_t d, int64_t exponent) {
    size_t e = mod_d(exponent, d);
    if (e == 0) {
        return 1.0;
    }
    // Exact values on the axes keep small-d tables free of 1e-17 noise.
    if (4 * e == d) {
        return {0, 1};
    }
    if (2 * e == d) {
        return -1.0;
    }
    if (4 * e == 3 * d) {
        return {0, -1};
    }
    double theta = 2 * std::numbers::pi * static_cast<double>(e) / static_cast<double>(d);
    return {std::cos(theta), std::sin(theta)};
}

WeylIndex::WeylIndex(size_t d, int64_t l, int64_t k) : d_(d) {
    if (d < 2) {
        throw DomainError("WeylIndex: d must be >= 2, got " + std::to_string(d));
    }
    l_ = mod_d(l, d);
    k_ = mod_d(k, d);
}

ComplexMatrix shift_matrix(size_t d, int64_t l) {
    if (d < 2) {
        throw DomainError("shift_matrix: d must be >= 2");
    }
    size_t s = mod_d(l, d);
    ComplexMatrix x(d, d);
    for (size_t n = 0; n < d; n++) {
        x((n + s) % d, n) = 1.0;
    }
    return x;
}

ComplexMatrix clock_matrix(size_t d, int64_t k) {
    if (d < 2) {
        throw DomainError("clock_matrix: d must be >= 2");
    }
    size_t kk = mod_d(k, d);
    ComplexMatrix z(d, d);
    for (size_t m = 0; m < d; m++) {
        z(m, m) = omega_pow(d, static_cast<int64_t>(m * kk));
    }
    return z;
}

ComplexMatrix weyl_element(const WeylIndex &idx) {
    size_t d = idx.d();
    ComplexMatrix w(d, d);
    for (size_t n = 0; n < d; n++) {
        w((n + idx.l()) % d, n) = omega_pow(d, static_cast<int64_t>(n * idx.k()));
    }
    return w;
}

// ---------------------------------------------------------------------------

CoefficientTable::CoefficientTable(size_t d) : d_(d), xi_(d * d) {
    if (d < 2) {
        throw DomainError("CoefficientTable: d must be >= 2");
    }
}

CoefficientTable::CoefficientTable(size_t d, std::vector<Complex> xi) : d_(d), xi_(std::move(xi)) {
    if (d < 2) {
        throw DomainError("CoefficientTable: d must be >= 2");
    }
    if (xi_.size() != d * d) {
        throw ShapeError("CoefficientTable: expected " + std::to_string(d * d) + " coefficients, got " +
                         std::to_string(xi_.size()));
    }
}

double CoefficientTable::squared_norm() const {
    double s = 0;
    for (const auto &z : xi_) {
        s += std::norm(z);
    }
    return s;
}

double CoefficientTable::max_abs_difference(const CoefficientTable &other) const {
    if (other.d_ != d_) {
        throw ShapeError("CoefficientTable: dimension mismatch");
    }
    double m = 0;
    for (size_t i = 0; i < xi_.size(); i++) {
        m = std::max(m, std::abs(xi_[i] - other.xi_[i]));
    }
    return m;
}

WeylBasis::WeylBasis(size_t d) : d_(d), omega_(weylkit::omega(static_cast<int64_t>(d))) {
    if (d < 2) {
        throw DomainError("WeylBasis: d must be >= 2");
    }
    elements_.reserve(d * d);
    for (size_t l = 0; l < d; l++) {
        for (size_t k = 0; k < d; k++) {
            elements_.push_back(weyl_element(WeylIndex(d, l, k)));
        }
    }
}

// ---------------------------------------------------------------------------

CoefficientTable decompose(const ComplexMatrix &a) {
    if (!a.is_square()) {
        throw ShapeError("decompose: expected a square matrix, got " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()));
    }
    size_t d = a.rows();
    CoefficientTable out(d);
    double inv_d = 1.0 / static_cast<double>(d);
    // W_lk has entry omega^{nk} at (n + l, n) only.
    for (size_t l = 0; l < d; l++) {
        for (size_t k = 0; k < d; k++) {
            Complex s{};
            for (size_t n = 0; n < d; n++) {
                s += std::conj(omega_pow(d, static_cast<int64_t>(n * k))) * a((n + l) % d, n);
            }
            out(l, k) = s * inv_d;
        }
    }
    return out;
}

ComplexMatrix reconstruct(const CoefficientTable &table) {
    size_t d = table.d();
    ComplexMatrix out(d, d);
    for (size_t l = 0; l < d; l++) {
        for (size_t k = 0; k < d; k++) {
            Complex xi = table(l, k);
            if (xi == Complex{}) {
                continue;
            }
            for (size_t n = 0; n < d; n++) {
                out((n + l) % d, n) += xi * omega_pow(d, static_cast<int64_t>(n * k));
            }
        }
    }
    return out;
}

ComplexMatrix gram_matrix(const WeylBasis &basis) {
    size_t n = basis.size();
    ComplexMatrix g(n, n);
    // tr(A^dagger B) = sum_ij conj(A_ij) B_ij, evaluated over every entry.
    for (size_t a = 0; a < n; a++) {
        auto ea = basis.elements()[a].entries();
        for (size_t b = 0; b < n; b++) {
            auto eb = basis.elements()[b].entries();
            Complex s{};
            for (size_t i = 0; i < ea.size(); i++) {
                s += std::conj(ea[i]) * eb[i];
            }
            g(a, b) = s;
        }
    }
    return g;
}

ComplexMatrix commutator(const ComplexMatrix &a, const ComplexMatrix &b) {
    return matmul(a, b) - matmul(b, a);
}

CoefficientTable commutator_in_basis(const WeylIndex &x, const WeylIndex &y) {
    if (x.d() != y.d()) {
        throw DomainError("commutator_in_basis: indices have different d (" + std::to_string(x.d()) + " vs " +
                          std::to_string(y.d()) + ")");
    }
    return decompose(commutator(weyl_element(x), weyl_element(y)));
}

}  // namespace weylkit
