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

#ifndef WEYLKIT_DILATION_H
#define WEYLKIT_DILATION_H

#include <span>
#include <vector>

#include "weylkit/numerics.h"
#include "weylkit/weyl.h"

namespace weylkit {

/// System-environment interaction amplitudes gamma_{a,b}, a, b in Z_d.
///
/// Basis qudit |i> evolves to sum_l gamma_{l-i,-i} |i+l> (x) |e_{l-i,-i}>.
/// The environment label b = -i differs between columns, so the images are
/// orthonormal exactly when every gamma column has unit l2 mass:
/// sum_a |gamma_{a,b}|^2 = 1.
class GammaTable {
   public:
    /// `gamma` is in (a outer, b inner) order. Throws ShapeError on a size
    /// mismatch and ValidationError naming each column whose mass is off by
    /// more than tol.norm.
    GammaTable(size_t d, std::vector<Complex> gamma, const Tolerances &tol = {});

    size_t d() const { return d_; }
    Complex operator()(int64_t a, int64_t b) const { return gamma_[mod_d(a, d_) * d_ + mod_d(b, d_)]; }
    const std::vector<Complex> &entries() const { return gamma_; }

    /// sum_a |gamma_{a,b}|^2.
    double column_mass(size_t b) const;

   private:
    size_t d_;
    std::vector<Complex> gamma_;
};

/// Column masses sum_a |gamma_{a,b}|^2 for an unvalidated table.
std::vector<double> gamma_column_masses(size_t d, std::span<const Complex> gamma);

/// Linear index of |e_{a,b}> in the d^2-dimensional environment.
inline size_t env_index(size_t d, int64_t a, int64_t b) {
    return mod_d(a, d) * d + mod_d(b, d);
}

/// System (x) environment pure state, system factor outer. Dimension d^3.
struct JointState {
    size_t d;
    ComplexVector vec;
};

/// One term (l, k) of the regrouped joint state: sys = X_l Z_k |psi>, env = v_lk.
struct WeylFormTerm {
    WeylIndex idx;
    ComplexVector sys;
    ComplexVector env;
};

/// The isometry V: C^d -> C^d (x) C^{d^2} whose column i is
/// sum_l gamma_{l-i,-i} |i+l> (x) |e_{l-i,-i}>. Shape d^3 x d.
ComplexMatrix make_isometry(const GammaTable &g);

/// V |psi>. Throws ShapeError if dim(psi) != d.
JointState evolve_pure(const Ket &psi, const GammaTable &g);

/// The d^2 terms (l outer, k inner) whose sum (1/d) sum_lk sys (x) env equals
/// evolve_pure(psi, g). env has component omega^{zk} gamma_{z+l,z} at |e_{z+l,z}>.
std::vector<WeylFormTerm> weyl_form_of_joint(const Ket &psi, const GammaTable &g);

/// The effective environment vector v_lk on its own.
ComplexVector env_vector(const GammaTable &g, size_t l, size_t k);

/// Overlaps <v_lk, v_lk'> for fixed l, as a d x d matrix indexed (k, k').
/// Equals sum_z omega^{z(k'-k)} |gamma_{z+l,z}|^2; diagonal whenever |gamma_{z+l,z}|
/// does not depend on z.
ComplexMatrix env_overlaps(const GammaTable &g, size_t l);

/// Sums (1/d) sys (x) env over all terms.
ComplexVector reassemble(const std::vector<WeylFormTerm> &terms, size_t d);

/// V rho V^dagger, a d^3 x d^3 matrix.
ComplexMatrix evolve_density(const DensityMatrix &rho, const GammaTable &g);

/// sum_s weights[s] * states[s]. Throws DomainError on negative weights or a
/// weight sum away from 1, ShapeError on mismatched dimensions, and
/// ValidationError if the mixture is not a density matrix.
DensityMatrix ensemble_to_density(std::span<const double> weights, std::span<const ComplexMatrix> states,
                                  const Tolerances &tol = {});

}  // namespace weylkit

#endif  // WEYLKIT_DILATION_H
