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

#ifndef WEYLKIT_NUMERICS_H
#define WEYLKIT_NUMERICS_H

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "weylkit/tolerances.h"

namespace weylkit {

using Complex = std::complex<double>;

/// Dense complex vector. Entries must be finite.
class ComplexVector {
   public:
    ComplexVector() = default;
    explicit ComplexVector(size_t dim);
    explicit ComplexVector(std::vector<Complex> entries);
    ComplexVector(std::initializer_list<Complex> entries);

    static ComplexVector basis(size_t dim, size_t index);

    size_t dim() const { return data_.size(); }
    Complex operator[](size_t i) const { return data_[i]; }
    Complex &operator[](size_t i) { return data_[i]; }
    std::span<const Complex> entries() const { return data_; }

    double norm() const;
    bool operator==(const ComplexVector &other) const = default;

   private:
    std::vector<Complex> data_;
};

/// A unit vector in C^d.
class Ket {
   public:
    /// Throws ValidationError unless |vec| = 1 within `tol.norm`.
    explicit Ket(ComplexVector vec, const Tolerances &tol = {});

    /// Rescales a nonzero vector to unit norm.
    static Ket normalized(ComplexVector vec);

    size_t dim() const { return vec_.dim(); }
    const ComplexVector &vec() const { return vec_; }
    Complex operator[](size_t i) const { return vec_[i]; }

   private:
    struct Unchecked {};
    Ket(ComplexVector vec, Unchecked) : vec_(std::move(vec)) {}
    ComplexVector vec_;
};

/// Dense rows x cols complex matrix in row-major logical order.
class ComplexMatrix {
   public:
    ComplexMatrix() = default;
    ComplexMatrix(size_t rows, size_t cols);
    /// Throws ShapeError if entries.size() != rows * cols, ValidationError on non-finite entries.
    ComplexMatrix(size_t rows, size_t cols, std::vector<Complex> entries);
    /// Row-wise literal, e.g. {{0, 1}, {1, 0}}.
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(size_t n);
    static ComplexMatrix zeros(size_t rows, size_t cols) { return ComplexMatrix(rows, cols); }
    static ComplexMatrix diagonal(std::span<const Complex> diag);
    static ComplexMatrix column(const ComplexVector &v);
    /// |a><b| on C^dim.
    static ComplexMatrix unit(size_t dim, size_t a, size_t b);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Complex operator()(size_t r, size_t c) const { return data_[r * cols_ + c]; }
    Complex &operator()(size_t r, size_t c) { return data_[r * cols_ + c]; }
    std::span<const Complex> entries() const { return data_; }

    ComplexVector col(size_t c) const;

    ComplexMatrix &operator+=(const ComplexMatrix &other);
    ComplexMatrix &operator-=(const ComplexMatrix &other);
    ComplexMatrix &operator*=(Complex s);

    bool operator==(const ComplexMatrix &other) const = default;

   private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b);
ComplexMatrix operator*(Complex s, ComplexMatrix a);

/// Standard matrix product. Throws ShapeError if a.cols != b.rows.
ComplexMatrix matmul(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexVector matvec(const ComplexMatrix &a, const ComplexVector &x);
ComplexMatrix dagger(const ComplexMatrix &a);
/// Throws ShapeError on non-square input.
Complex trace(const ComplexMatrix &a);

/// Kronecker product, left factor outer:
/// out[i * b.rows + k, j * b.cols + l] = a[i, j] * b[k, l].
ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexVector kron(const ComplexVector &a, const ComplexVector &b);

/// |a><b|.
ComplexMatrix outer(const ComplexVector &a, const ComplexVector &b);
Complex inner(const ComplexVector &a, const ComplexVector &b);

/// Traces out the fast-varying (right) factor of a (d_sys*d_env)^2 operator:
/// out[i, j] = sum_m joint[i * d_env + m, j * d_env + m].
ComplexMatrix partial_trace_env(const ComplexMatrix &joint, size_t d_sys, size_t d_env);

/// Frobenius norm of a - b. Throws ShapeError on shape mismatch.
double frobenius_distance(const ComplexMatrix &a, const ComplexMatrix &b);
double frobenius_norm(const ComplexMatrix &a);
double max_abs_difference(const ComplexMatrix &a, const ComplexMatrix &b);
double distance(const ComplexVector &a, const ComplexVector &b);

/// Largest |a[i,j] - conj(a[j,i])|; infinity for non-square input.
double hermitian_deficit(const ComplexMatrix &a);

/// Ascending eigenvalues of a Hermitian matrix by cyclic complex Jacobi
/// rotations. Throws ValidationError if `a` is not Hermitian within `tol.herm`.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix &a, const Tolerances &tol = {});

/// Hermitian, trace-one, positive semidefinite d x d matrix.
class DensityMatrix {
   public:
    /// Throws ValidationError naming every failed invariant.
    explicit DensityMatrix(ComplexMatrix mat, const Tolerances &tol = {});

    static DensityMatrix pure(const Ket &psi);
    static DensityMatrix maximally_mixed(size_t d);

    size_t dim() const { return mat_.rows(); }
    const ComplexMatrix &mat() const { return mat_; }
    Complex operator()(size_t r, size_t c) const { return mat_(r, c); }

   private:
    struct Unchecked {};
    DensityMatrix(ComplexMatrix mat, Unchecked) : mat_(std::move(mat)) {}
    ComplexMatrix mat_;
};

/// Empty string if `mat` is a valid density matrix, otherwise a list of the
/// invariants it breaks.
std::string density_matrix_problems(const ComplexMatrix &mat, const Tolerances &tol = {});

}  // namespace weylkit

#endif  // WEYLKIT_NUMERICS_H
