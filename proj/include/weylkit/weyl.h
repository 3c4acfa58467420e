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

#ifndef WEYLKIT_WEYL_H
#define WEYLKIT_WEYL_H

#include <cstdint>
#include <vector>

#include "weylkit/numerics.h"

namespace weylkit {

/// Reduces `x` into [0, d).
size_t mod_d(int64_t x, size_t d);

/// exp(2 pi i / d), the canonical primitive d-th root of unity.
/// Throws DomainError for d < 1.
Complex omega(int64_t d);

/// omega(d)^exponent, with the exponent reduced mod d before evaluation.
Complex omega_pow(size_t d, int64_t exponent);

/// Label (l, k) of the basis element X_l Z_k. Components are stored reduced mod d.
class WeylIndex {
   public:
    /// Throws DomainError if d < 2. Negative or large l, k are reduced mod d.
    WeylIndex(size_t d, int64_t l, int64_t k);

    size_t d() const { return d_; }
    size_t l() const { return l_; }
    size_t k() const { return k_; }
    /// Position in (l outer, k inner) enumeration order.
    size_t linear() const { return l_ * d_ + k_; }

    bool operator==(const WeylIndex &other) const = default;

   private:
    size_t d_;
    size_t l_;
    size_t k_;
};

/// X_l: |i> -> |i + l mod d>. Entry [m, n] = 1 iff m = n + l (mod d).
ComplexMatrix shift_matrix(size_t d, int64_t l);

/// Z_k = diag(omega^{0k}, omega^{1k}, ..., omega^{(d-1)k}).
ComplexMatrix clock_matrix(size_t d, int64_t k);

/// X_l Z_k, built from its entry formula: [m, n] = omega^{nk} iff m = n + l (mod d).
ComplexMatrix weyl_element(const WeylIndex &idx);

/// Decomposition coefficients xi_{l,k} of a d x d operator, (l outer, k inner).
class CoefficientTable {
   public:
    /// All-zero table. Throws DomainError if d < 2.
    explicit CoefficientTable(size_t d);
    /// Throws ShapeError unless xi.size() == d * d.
    CoefficientTable(size_t d, std::vector<Complex> xi);

    size_t d() const { return d_; }
    Complex operator()(size_t l, size_t k) const { return xi_[l * d_ + k]; }
    Complex &operator()(size_t l, size_t k) { return xi_[l * d_ + k]; }
    Complex operator[](const WeylIndex &idx) const { return xi_[idx.linear()]; }
    const std::vector<Complex> &entries() const { return xi_; }

    /// Sum of |xi_{l,k}|^2.
    double squared_norm() const;
    /// Largest |xi_{l,k} - other_{l,k}|.
    double max_abs_difference(const CoefficientTable &other) const;

   private:
    size_t d_;
    std::vector<Complex> xi_;
};

/// Precomputed {X_l Z_k}. Read-only after construction.
class WeylBasis {
   public:
    explicit WeylBasis(size_t d);

    size_t d() const { return d_; }
    Complex omega() const { return omega_; }
    size_t size() const { return elements_.size(); }
    const ComplexMatrix &element(const WeylIndex &idx) const { return elements_[idx.linear()]; }
    const ComplexMatrix &element(size_t l, size_t k) const { return elements_[l * d_ + k]; }
    const std::vector<ComplexMatrix> &elements() const { return elements_; }

   private:
    size_t d_;
    Complex omega_;
    std::vector<ComplexMatrix> elements_;
};

/// xi_{l,k} = tr((X_l Z_k)^dagger a) / d. Uses the d nonzero entries of each
/// basis element, so the whole table costs O(d^3).
CoefficientTable decompose(const ComplexMatrix &a);

/// sum_{l,k} xi_{l,k} X_l Z_k.
ComplexMatrix reconstruct(const CoefficientTable &table);

/// Hilbert-Schmidt Gram matrix G[(l,k), (m,n)] = tr(W_lk^dagger W_mn).
ComplexMatrix gram_matrix(const WeylBasis &basis);

/// [A, B] = AB - BA.
ComplexMatrix commutator(const ComplexMatrix &a, const ComplexMatrix &b);

/// decompose([W_x, W_y]). Throws DomainError if x and y have different d.
CoefficientTable commutator_in_basis(const WeylIndex &x, const WeylIndex &y);

}  // namespace weylkit

#endif  // WEYLKIT_WEYL_H
