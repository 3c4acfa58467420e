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

#include "weylkit/channels.h"

#include <cmath>
#include <sstream>
#include <string>

#include "weylkit/errors.h"
#include "weylkit/weyl.h"

namespace weylkit {

QuantumChannel::QuantumChannel(std::vector<ComplexMatrix> kraus) : kraus_(std::move(kraus)) {
    if (kraus_.empty()) {
        throw ShapeError("QuantumChannel: needs at least one Kraus operator");
    }
    size_t d = kraus_.front().rows();
    if (d == 0) {
        throw ShapeError("QuantumChannel: empty Kraus operator");
    }
    for (size_t m = 0; m < kraus_.size(); m++) {
        if (kraus_[m].rows() != d || kraus_[m].cols() != d) {
            throw ShapeError("QuantumChannel: Kraus operator " + std::to_string(m) + " is " +
                             std::to_string(kraus_[m].rows()) + "x" + std::to_string(kraus_[m].cols()) +
                             ", expected " + std::to_string(d) + "x" + std::to_string(d));
        }
    }
}

WeylWeights::WeylWeights(size_t d, std::vector<double> p, const Tolerances &tol) : d_(d), p_(std::move(p)) {
    if (d < 2) {
        throw DomainError("WeylWeights: d must be >= 2");
    }
    if (p_.size() != d * d) {
        throw DomainError("WeylWeights: expected " + std::to_string(d * d) + " weights, got " +
                          std::to_string(p_.size()));
    }
    double total = 0;
    for (size_t i = 0; i < p_.size(); i++) {
        if (!(p_[i] >= 0) || !std::isfinite(p_[i])) {
            throw DomainError("WeylWeights: weight (" + std::to_string(i / d) + "," + std::to_string(i % d) +
                              ") is negative or non-finite");
        }
        total += p_[i];
    }
    if (std::abs(total - 1.0) > tol.norm) {
        std::ostringstream ss;
        ss << "WeylWeights: weights sum to " << total << ", not 1";
        throw DomainError(ss.str());
    }
}

WeylWeights WeylWeights::uniform(size_t d) {
    return WeylWeights(d, std::vector<double>(d * d, 1.0 / static_cast<double>(d * d)));
}

WeylWeights WeylWeights::point(size_t d, size_t l, size_t k) {
    std::vector<double> p(d * d, 0.0);
    p[(l % d) * d + (k % d)] = 1.0;
    return WeylWeights(d, std::move(p));
}

// ---------------------------------------------------------------------------

QuantumChannel kraus_from_isometry(const ComplexMatrix &v, const Tolerances &tol) {
    size_t d = v.cols();
    size_t d2 = d * d;
    if (d < 1 || v.rows() != d * d2) {
        throw ValidationError("kraus_from_isometry: expected a d^3 x d matrix, got " + std::to_string(v.rows()) +
                              "x" + std::to_string(v.cols()));
    }
    double deficit = frobenius_distance(matmul(dagger(v), v), ComplexMatrix::identity(d));
    if (deficit > tol.norm) {
        std::ostringstream ss;
        ss << "kraus_from_isometry: input is not an isometry (||V^dagger V - I||_F = " << deficit << ")";
        throw ValidationError(ss.str());
    }
    std::vector<ComplexMatrix> kraus;
    for (size_t m = 0; m < d2; m++) {
        ComplexMatrix e(d, d);
        for (size_t r = 0; r < d; r++) {
            for (size_t c = 0; c < d; c++) {
                e(r, c) = v(r * d2 + m, c);
            }
        }
        if (frobenius_norm(e) >= tol.prune) {
            kraus.push_back(std::move(e));
        }
    }
    return QuantumChannel(std::move(kraus));
}

ComplexMatrix apply_kraus(const QuantumChannel &ch, const ComplexMatrix &rho) {
    size_t d = ch.d();
    if (rho.rows() != d || rho.cols() != d) {
        throw ShapeError("apply_channel: channel acts on d=" + std::to_string(d) + ", input is " +
                         std::to_string(rho.rows()) + "x" + std::to_string(rho.cols()));
    }
    ComplexMatrix out(d, d);
    for (const auto &e : ch.kraus()) {
        out += matmul(matmul(e, rho), dagger(e));
    }
    return out;
}

DensityMatrix apply_channel(const QuantumChannel &ch, const DensityMatrix &rho, const Tolerances &tol) {
    ComplexMatrix out = apply_kraus(ch, rho.mat());
    std::string problems = density_matrix_problems(out, tol);
    if (!problems.empty()) {
        throw InternalConsistencyError("apply_channel: image is not a density matrix: " + problems);
    }
    return DensityMatrix(std::move(out), tol);
}

CompletenessReport is_trace_preserving(const QuantumChannel &ch, const Tolerances &tol) {
    size_t d = ch.d();
    ComplexMatrix left(d, d);
    ComplexMatrix right(d, d);
    for (const auto &e : ch.kraus()) {
        auto ed = dagger(e);
        left += matmul(ed, e);
        right += matmul(e, ed);
    }
    auto id = ComplexMatrix::identity(d);
    double deficit = frobenius_distance(left, id);
    return {deficit < tol.cptp, deficit, frobenius_distance(right, id)};
}

QuantumChannel weyl_channel(const WeylWeights &w) {
    size_t d = w.d();
    std::vector<ComplexMatrix> kraus;
    for (size_t l = 0; l < d; l++) {
        for (size_t k = 0; k < d; k++) {
            double p = w(l, k);
            if (p == 0) {
                continue;
            }
            kraus.push_back(std::sqrt(p) * weyl_element(WeylIndex(d, static_cast<int64_t>(l), static_cast<int64_t>(k))));
        }
    }
    return QuantumChannel(std::move(kraus));
}

QuantumChannel channel_from_dilation(const GammaTable &g, const Tolerances &tol) {
    return kraus_from_isometry(make_isometry(g), tol);
}

ChoiMatrix choi_matrix(const QuantumChannel &ch) {
    size_t d = ch.d();
    size_t n = d * d;
    ComplexMatrix j(n, n);
    // J = sum_m |E_m>> <<E_m| with |E>>[r * d + c] = E[r, c], i.e. (E (x) I) sum_i |i>|i>.
    for (const auto &e : ch.kraus()) {
        auto flat = e.entries();
        for (size_t a = 0; a < n; a++) {
            if (flat[a] == Complex{}) {
                continue;
            }
            for (size_t b = 0; b < n; b++) {
                j(a, b) += flat[a] * std::conj(flat[b]);
            }
        }
    }
    return {d, std::move(j)};
}

double choi_distance(const QuantumChannel &a, const QuantumChannel &b) {
    if (a.d() != b.d()) {
        throw ShapeError("channels_equal: channels act on d=" + std::to_string(a.d()) + " and d=" +
                         std::to_string(b.d()));
    }
    return frobenius_distance(choi_matrix(a).mat, choi_matrix(b).mat);
}

bool channels_equal(const QuantumChannel &a, const QuantumChannel &b, double tol) {
    return choi_distance(a, b) < tol;
}

}  // namespace weylkit
