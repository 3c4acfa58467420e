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

#ifndef WEYLKIT_CHANNELS_H
#define WEYLKIT_CHANNELS_H

#include <vector>

#include "weylkit/dilation.h"
#include "weylkit/numerics.h"

namespace weylkit {

/// Ordered Kraus list {E_m} acting on C^d.
///
/// Construction only checks shapes, so a non trace-preserving list can be
/// represented and inspected with `is_trace_preserving`. Channels produced by
/// `kraus_from_isometry` and `weyl_channel` are trace preserving.
class QuantumChannel {
   public:
    /// Throws ShapeError unless kraus is nonempty and every element is d x d.
    explicit QuantumChannel(std::vector<ComplexMatrix> kraus);

    size_t d() const { return kraus_.front().rows(); }
    const std::vector<ComplexMatrix> &kraus() const { return kraus_; }
    size_t size() const { return kraus_.size(); }

   private:
    std::vector<ComplexMatrix> kraus_;
};

struct CompletenessReport {
    bool trace_preserving;
    double deficit;         // || sum E^dagger E - I ||_F
    double unital_deficit;  // || sum E E^dagger - I ||_F
};

/// Probability weights p_{l,k} >= 0 over the Weyl basis, summing to one.
class WeylWeights {
   public:
    /// (l outer, k inner). Throws DomainError on a negative weight or a sum away from 1.
    WeylWeights(size_t d, std::vector<double> p, const Tolerances &tol = {});

    static WeylWeights uniform(size_t d);
    static WeylWeights point(size_t d, size_t l, size_t k);

    size_t d() const { return d_; }
    double operator()(size_t l, size_t k) const { return p_[l * d_ + k]; }
    const std::vector<double> &entries() const { return p_; }

   private:
    size_t d_;
    std::vector<double> p_;
};

/// J = sum_ij E(|i><j|) (x) |i><j|, output factor left. d^2 x d^2.
struct ChoiMatrix {
    size_t d;
    ComplexMatrix mat;
};

/// E_m[r, c] = v[r * d^2 + m, c] for each environment slot m, dropping
/// operators with Frobenius norm below tol.prune. Throws ValidationError if
/// v is not a d^3 x d isometry.
QuantumChannel kraus_from_isometry(const ComplexMatrix &v, const Tolerances &tol = {});

/// sum_m E_m rho E_m^dagger. Throws ShapeError on a dimension mismatch and
/// InternalConsistencyError if the image is not a density matrix.
DensityMatrix apply_channel(const QuantumChannel &ch, const DensityMatrix &rho, const Tolerances &tol = {});

/// Same sum without validating the image.
ComplexMatrix apply_kraus(const QuantumChannel &ch, const ComplexMatrix &rho);

CompletenessReport is_trace_preserving(const QuantumChannel &ch, const Tolerances &tol = {});

/// Kraus set {sqrt(p_lk) X_l Z_k}; zero weights are skipped.
QuantumChannel weyl_channel(const WeylWeights &w);

/// kraus_from_isometry(make_isometry(g)).
QuantumChannel channel_from_dilation(const GammaTable &g, const Tolerances &tol = {});

ChoiMatrix choi_matrix(const QuantumChannel &ch);

/// Decides equality of the maps (not the Kraus lists) by Choi distance.
/// Throws ShapeError if the channels act on different dimensions.
bool channels_equal(const QuantumChannel &a, const QuantumChannel &b, double tol);
double choi_distance(const QuantumChannel &a, const QuantumChannel &b);

}  // namespace weylkit

#endif  // WEYLKIT_CHANNELS_H
