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

#include "weylkit/dilation.h"

#include <cmath>
#include <sstream>
#include <string>

#include "weylkit/errors.h"

namespace weylkit {

namespace {

struct Entry {
    size_t row;
    Complex value;
};

// Nonzero pattern of column i of the isometry: one entry per shift l.
std::vector<Entry> isometry_column(const GammaTable &g, size_t i) {
    size_t d = g.d();
    size_t d2 = d * d;
    auto ii = static_cast<int64_t>(i);
    std::vector<Entry> col;
    col.reserve(d);
    for (size_t l = 0; l < d; l++) {
        auto ll = static_cast<int64_t>(l);
        size_t sys = (i + l) % d;
        size_t env = env_index(d, ll - ii, -ii);
        col.push_back({sys * d2 + env, g(ll - ii, -ii)});
    }
    return col;
}

}  // namespace

std::vector<double> gamma_column_masses(size_t d, std::span<const Complex> gamma) {
    std::vector<double> mass(d, 0.0);
    for (size_t a = 0; a < d; a++) {
        for (size_t b = 0; b < d; b++) {
            mass[b] += std::norm(gamma[a * d + b]);
        }
    }
    return mass;
}

GammaTable::GammaTable(size_t d, std::vector<Complex> gamma, const Tolerances &tol)
    : d_(d), gamma_(std::move(gamma)) {
    if (d < 2) {
        throw DomainError("GammaTable: d must be >= 2, got " + std::to_string(d));
    }
    if (gamma_.size() != d * d) {
        throw ShapeError("GammaTable: expected " + std::to_string(d * d) + " amplitudes, got " +
                         std::to_string(gamma_.size()));
    }
    for (const auto &z : gamma_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw ValidationError("GammaTable: non-finite amplitude");
        }
    }
    auto mass = gamma_column_masses(d, gamma_);
    std::ostringstream bad;
    for (size_t b = 0; b < d; b++) {
        double deficit = mass[b] - 1.0;
        if (std::abs(deficit) > tol.norm) {
            bad << "\n  column b=" << b << ": sum_a |gamma_{a,b}|^2 = " << mass[b] << " (deficit " << deficit << ")";
        }
    }
    if (!bad.str().empty()) {
        throw ValidationError("GammaTable: column normalization violated" + bad.str());
    }
}

double GammaTable::column_mass(size_t b) const {
    double s = 0;
    for (size_t a = 0; a < d_; a++) {
        s += std::norm(gamma_[a * d_ + b]);
    }
    return s;
}

ComplexMatrix make_isometry(const GammaTable &g) {
    size_t d = g.d();
    ComplexMatrix v(d * d * d, d);
    for (size_t i = 0; i < d; i++) {
        for (const auto &e : isometry_column(g, i)) {
            v(e.row, i) += e.value;
        }
    }
    return v;
}

JointState evolve_pure(const Ket &psi, const GammaTable &g) {
    size_t d = g.d();
    if (psi.dim() != d) {
        throw ShapeError("evolve_pure: state has dim " + std::to_string(psi.dim()) + ", gamma table has d=" +
                         std::to_string(d));
    }
    ComplexVector out(d * d * d);
    for (size_t i = 0; i < d; i++) {
        for (const auto &e : isometry_column(g, i)) {
            out[e.row] += psi[i] * e.value;
        }
    }
    return {d, std::move(out)};
}

ComplexVector env_vector(const GammaTable &g, size_t l, size_t k) {
    size_t d = g.d();
    ComplexVector env(d * d);
    for (size_t z = 0; z < d; z++) {
        auto zz = static_cast<int64_t>(z);
        auto ll = static_cast<int64_t>(l);
        env[env_index(d, zz + ll, zz)] = omega_pow(d, static_cast<int64_t>(z * k)) * g(zz + ll, zz);
    }
    return env;
}

std::vector<WeylFormTerm> weyl_form_of_joint(const Ket &psi, const GammaTable &g) {
    size_t d = g.d();
    if (psi.dim() != d) {
        throw ShapeError("weyl_form_of_joint: state has dim " + std::to_string(psi.dim()) + ", gamma table has d=" +
                         std::to_string(d));
    }
    std::vector<WeylFormTerm> terms;
    terms.reserve(d * d);
    for (size_t l = 0; l < d; l++) {
        for (size_t k = 0; k < d; k++) {
            WeylIndex idx(d, static_cast<int64_t>(l), static_cast<int64_t>(k));
            terms.push_back({idx, matvec(weyl_element(idx), psi.vec()), env_vector(g, l, k)});
        }
    }
    return terms;
}

ComplexMatrix env_overlaps(const GammaTable &g, size_t l) {
    size_t d = g.d();
    std::vector<ComplexVector> v;
    v.reserve(d);
    for (size_t k = 0; k < d; k++) {
        v.push_back(env_vector(g, l % d, k));
    }
    ComplexMatrix out(d, d);
    for (size_t k = 0; k < d; k++) {
        for (size_t kp = 0; kp < d; kp++) {
            out(k, kp) = inner(v[k], v[kp]);
        }
    }
    return out;
}

ComplexVector reassemble(const std::vector<WeylFormTerm> &terms, size_t d) {
    ComplexVector out(d * d * d);
    double inv_d = 1.0 / static_cast<double>(d);
    for (const auto &t : terms) {
        for (size_t s = 0; s < t.sys.dim(); s++) {
            if (t.sys[s] == Complex{}) {
                continue;
            }
            for (size_t e = 0; e < t.env.dim(); e++) {
                out[s * d * d + e] += inv_d * t.sys[s] * t.env[e];
            }
        }
    }
    return out;
}

ComplexMatrix evolve_density(const DensityMatrix &rho, const GammaTable &g) {
    size_t d = g.d();
    if (rho.dim() != d) {
        throw ShapeError("evolve_density: density matrix has dim " + std::to_string(rho.dim()) +
                         ", gamma table has d=" + std::to_string(d));
    }
    std::vector<std::vector<Entry>> cols;
    cols.reserve(d);
    for (size_t i = 0; i < d; i++) {
        cols.push_back(isometry_column(g, i));
    }
    size_t n = d * d * d;
    ComplexMatrix out(n, n);
    for (size_t i = 0; i < d; i++) {
        for (size_t j = 0; j < d; j++) {
            Complex rij = rho(i, j);
            if (rij == Complex{}) {
                continue;
            }
            for (const auto &ei : cols[i]) {
                for (const auto &ej : cols[j]) {
                    out(ei.row, ej.row) += ei.value * rij * std::conj(ej.value);
                }
            }
        }
    }
    return out;
}

DensityMatrix ensemble_to_density(std::span<const double> weights, std::span<const ComplexMatrix> states,
                                  const Tolerances &tol) {
    if (weights.empty() || weights.size() != states.size()) {
        throw ShapeError("ensemble_to_density: " + std::to_string(weights.size()) + " weights for " +
                         std::to_string(states.size()) + " states");
    }
    double total = 0;
    for (size_t s = 0; s < weights.size(); s++) {
        if (!(weights[s] >= 0)) {
            throw DomainError("ensemble_to_density: weight " + std::to_string(s) + " is negative (" +
                              std::to_string(weights[s]) + ")");
        }
        total += weights[s];
    }
    if (std::abs(total - 1.0) > tol.norm) {
        std::ostringstream ss;
        ss << "ensemble_to_density: weights sum to " << total << ", not 1";
        throw DomainError(ss.str());
    }
    size_t d = states[0].rows();
    ComplexMatrix rho(d, d);
    for (size_t s = 0; s < states.size(); s++) {
        if (states[s].rows() != d || states[s].cols() != d) {
            throw ShapeError("ensemble_to_density: state " + std::to_string(s) + " is not " + std::to_string(d) +
                             "x" + std::to_string(d));
        }
        rho += weights[s] * states[s];
    }
    return DensityMatrix(std::move(rho), tol);
}

}  // namespace weylkit
