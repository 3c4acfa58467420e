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

#include "weylkit/numerics.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "weylkit/errors.h"

namespace weylkit {

namespace {

bool is_finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

void require_finite(std::span<const Complex> entries) {
    for (size_t i = 0; i < entries.size(); i++) {
        if (!is_finite(entries[i])) {
            throw ValidationError("non-finite entry at linear index " + std::to_string(i));
        }
    }
}

std::string shape_str(const ComplexMatrix &m) {
    return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

void require_same_shape(const ComplexMatrix &a, const ComplexMatrix &b, const char *op) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw ShapeError(std::string(op) + ": shape mismatch " + shape_str(a) + " vs " + shape_str(b));
    }
}

}  // namespace

bool set_tolerance(Tolerances &tol, std::string_view name, double value) {
    if (!(value > 0) || !std::isfinite(value)) {
        return false;
    }
    if (name == "norm") {
        tol.norm = value;
    } else if (name == "herm") {
        tol.herm = value;
    } else if (name == "psd") {
        tol.psd = value;
    } else if (name == "jacobi") {
        tol.jacobi = value;
    } else if (name == "cptp") {
        tol.cptp = value;
    } else if (name == "prune") {
        tol.prune = value;
    } else {
        return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// ComplexVector / Ket

ComplexVector::ComplexVector(size_t dim) : data_(dim) {
}

ComplexVector::ComplexVector(std::vector<Complex> entries) : data_(std::move(entries)) {
    require_finite(data_);
}

ComplexVector::ComplexVector(std::initializer_list<Complex> entries) : data_(entries) {
    require_finite(data_);
}

ComplexVector ComplexVector::basis(size_t dim, size_t index) {
    if (index >= dim) {
        throw ShapeError("basis index " + std::to_string(index) + " out of range for dim " + std::to_string(dim));
    }
    ComplexVector v(dim);
    v[index] = 1.0;
    return v;
}

double ComplexVector::norm() const {
    double s = 0;
    for (const auto &z : data_) {
        s += std::norm(z);
    }
    return std::sqrt(s);
}

Ket::Ket(ComplexVector vec, const Tolerances &tol) : vec_(std::move(vec)) {
    if (vec_.dim() == 0) {
        throw ValidationError("ket must have positive dimension");
    }
    double n = vec_.norm();
    if (std::abs(n - 1.0) > tol.norm) {
        std::ostringstream ss;
        ss << "ket norm " << n << " differs from 1 by more than " << tol.norm;
        throw ValidationError(ss.str());
    }
}

Ket Ket::normalized(ComplexVector vec) {
    double n = vec.norm();
    if (!(n > 0)) {
        throw ValidationError("cannot normalize a zero vector");
    }
    std::vector<Complex> out(vec.entries().begin(), vec.entries().end());
    for (auto &z : out) {
        z /= n;
    }
    return Ket(ComplexVector(std::move(out)), Unchecked{});
}

// ---------------------------------------------------------------------------
// ComplexMatrix

ComplexMatrix::ComplexMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
}

ComplexMatrix::ComplexMatrix(size_t rows, size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows * cols) {
        throw ShapeError("expected " + std::to_string(rows * cols) + " entries for a " + std::to_string(rows) + "x" +
                         std::to_string(cols) + " matrix, got " + std::to_string(data_.size()));
    }
    require_finite(data_);
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto &row : rows) {
        if (row.size() != cols_) {
            throw ShapeError("ragged matrix literal");
        }
        data_.insert(data_.end(), row.begin(), row.end());
    }
    require_finite(data_);
}

ComplexMatrix ComplexMatrix::identity(size_t n) {
    ComplexMatrix m(n, n);
    for (size_t i = 0; i < n; i++) {
        m(i, i) = 1.0;
    }
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> diag) {
    ComplexMatrix m(diag.size(), diag.size());
    for (size_t i = 0; i < diag.size(); i++) {
        m(i, i) = diag[i];
    }
    return m;
}

ComplexMatrix ComplexMatrix::column(const ComplexVector &v) {
    return ComplexMatrix(v.dim(), 1, std::vector<Complex>(v.entries().begin(), v.entries().end()));
}

ComplexMatrix ComplexMatrix::unit(size_t dim, size_t a, size_t b) {
    if (a >= dim || b >= dim) {
        throw ShapeError("unit matrix index out of range");
    }
    ComplexMatrix m(dim, dim);
    m(a, b) = 1.0;
    return m;
}

ComplexVector ComplexMatrix::col(size_t c) const {
    ComplexVector v(rows_);
    for (size_t r = 0; r < rows_; r++) {
        v[r] = (*this)(r, c);
    }
    return v;
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &other) {
    require_same_shape(*this, other, "add");
    for (size_t i = 0; i < data_.size(); i++) {
        data_[i] += other.data_[i];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator-=(const ComplexMatrix &other) {
    require_same_shape(*this, other, "subtract");
    for (size_t i = 0; i < data_.size(); i++) {
        data_[i] -= other.data_[i];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator*=(Complex s) {
    for (auto &z : data_) {
        z *= s;
    }
    return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b) {
    a += b;
    return a;
}

ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b) {
    a -= b;
    return a;
}

ComplexMatrix operator*(Complex s, ComplexMatrix a) {
    a *= s;
    return a;
}

// ---------------------------------------------------------------------------
// Products and reductions

ComplexMatrix matmul(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.cols() != b.rows()) {
        throw ShapeError("matmul: " + shape_str(a) + " * " + shape_str(b));
    }
    ComplexMatrix out(a.rows(), b.cols());
    for (size_t i = 0; i < a.rows(); i++) {
        for (size_t k = 0; k < a.cols(); k++) {
            Complex aik = a(i, k);
            if (aik == Complex{}) {
                continue;
            }
            for (size_t j = 0; j < b.cols(); j++) {
                out(i, j) += aik * b(k, j);
            }
        }
    }
    return out;
}

ComplexVector matvec(const ComplexMatrix &a, const ComplexVector &x) {
    if (a.cols() != x.dim()) {
        throw ShapeError("matvec: " + shape_str(a) + " * vector of dim " + std::to_string(x.dim()));
    }
    ComplexVector out(a.rows());
    for (size_t i = 0; i < a.rows(); i++) {
        Complex s{};
        for (size_t j = 0; j < a.cols(); j++) {
            s += a(i, j) * x[j];
        }
        out[i] = s;
    }
    return out;
}

ComplexMatrix dagger(const ComplexMatrix &a) {
    ComplexMatrix out(a.cols(), a.rows());
    for (size_t i = 0; i < a.rows(); i++) {
        for (size_t j = 0; j < a.cols(); j++) {
            out(j, i) = std::conj(a(i, j));
        }
    }
    return out;
}

Complex trace(const ComplexMatrix &a) {
    if (!a.is_square()) {
        throw ShapeError("trace of non-square " + shape_str(a) + " matrix");
    }
    Complex s{};
    for (size_t i = 0; i < a.rows(); i++) {
        s += a(i, i);
    }
    return s;
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (size_t i = 0; i < a.rows(); i++) {
        for (size_t j = 0; j < a.cols(); j++) {
            Complex aij = a(i, j);
            if (aij == Complex{}) {
                continue;
            }
            for (size_t k = 0; k < b.rows(); k++) {
                for (size_t l = 0; l < b.cols(); l++) {
                    out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
                }
            }
        }
    }
    return out;
}

ComplexVector kron(const ComplexVector &a, const ComplexVector &b) {
    ComplexVector out(a.dim() * b.dim());
    for (size_t i = 0; i < a.dim(); i++) {
        for (size_t k = 0; k < b.dim(); k++) {
            out[i * b.dim() + k] = a[i] * b[k];
        }
    }
    return out;
}

ComplexMatrix outer(const ComplexVector &a, const ComplexVector &b) {
    ComplexMatrix out(a.dim(), b.dim());
    for (size_t i = 0; i < a.dim(); i++) {
        for (size_t j = 0; j < b.dim(); j++) {
            out(i, j) = a[i] * std::conj(b[j]);
        }
    }
    return out;
}

Complex inner(const ComplexVector &a, const ComplexVector &b) {
    if (a.dim() != b.dim()) {
        throw ShapeError("inner: dimension mismatch");
    }
    Complex s{};
    for (size_t i = 0; i < a.dim(); i++) {
        s += std::conj(a[i]) * b[i];
    }
    return s;
}

ComplexMatrix partial_trace_env(const ComplexMatrix &joint, size_t d_sys, size_t d_env) {
    size_t n = d_sys * d_env;
    if (d_sys == 0 || d_env == 0 || joint.rows() != n || joint.cols() != n) {
        throw ShapeError("partial_trace_env: " + shape_str(joint) + " is not (" + std::to_string(d_sys) + "*" +
                         std::to_string(d_env) + ")-square");
    }
    ComplexMatrix out(d_sys, d_sys);
    for (size_t i = 0; i < d_sys; i++) {
        for (size_t j = 0; j < d_sys; j++) {
            Complex s{};
            for (size_t m = 0; m < d_env; m++) {
                s += joint(i * d_env + m, j * d_env + m);
            }
            out(i, j) = s;
        }
    }
    return out;
}

double frobenius_norm(const ComplexMatrix &a) {
    double s = 0;
    for (const auto &z : a.entries()) {
        s += std::norm(z);
    }
    return std::sqrt(s);
}

double frobenius_distance(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_shape(a, b, "frobenius_distance");
    double s = 0;
    auto ea = a.entries();
    auto eb = b.entries();
    for (size_t i = 0; i < ea.size(); i++) {
        s += std::norm(ea[i] - eb[i]);
    }
    return std::sqrt(s);
}

double max_abs_difference(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_shape(a, b, "max_abs_difference");
    double m = 0;
    auto ea = a.entries();
    auto eb = b.entries();
    for (size_t i = 0; i < ea.size(); i++) {
        m = std::max(m, std::abs(ea[i] - eb[i]));
    }
    return m;
}

double distance(const ComplexVector &a, const ComplexVector &b) {
    if (a.dim() != b.dim()) {
        throw ShapeError("distance: dimension mismatch");
    }
    double s = 0;
    for (size_t i = 0; i < a.dim(); i++) {
        s += std::norm(a[i] - b[i]);
    }
    return std::sqrt(s);
}

double hermitian_deficit(const ComplexMatrix &a) {
    if (!a.is_square()) {
        return std::numeric_limits<double>::infinity();
    }
    double m = 0;
    for (size_t i = 0; i < a.rows(); i++) {
        for (size_t j = i; j < a.cols(); j++) {
            m = std::max(m, std::abs(a(i, j) - std::conj(a(j, i))));
        }
    }
    return m;
}

// ---------------------------------------------------------------------------
// Hermitian eigenvalues

namespace {

double off_diagonal_mass(const ComplexMatrix &a) {
    double s = 0;
    for (size_t i = 0; i < a.rows(); i++) {
        for (size_t j = 0; j < a.cols(); j++) {
            if (i != j) {
                s += std::norm(a(i, j));
            }
        }
    }
    return std::sqrt(s);
}

// Zeroes a(p, q) with the unitary W = diag(1, e^{-i phi}) * R(theta), where
// phi = arg a(p, q) and R is the real Jacobi rotation of the phased 2x2 block.
void jacobi_rotate(ComplexMatrix &a, size_t p, size_t q) {
    Complex g = a(p, q);
    double mag = std::abs(g);
    if (mag == 0) {
        return;
    }
    Complex phase = g / mag;  // e^{i phi}
    double app = a(p, p).real();
    double aqq = a(q, q).real();
    double tau = (aqq - app) / (2 * mag);
    double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1 + tau * tau));
    double c = 1 / std::sqrt(1 + t * t);
    double s = t * c;
    Complex wqp = -s * std::conj(phase);
    Complex wqq = c * std::conj(phase);

    size_t n = a.rows();
    // a <- a * W (columns p, q).
    for (size_t k = 0; k < n; k++) {
        Complex akp = a(k, p);
        Complex akq = a(k, q);
        a(k, p) = c * akp + wqp * akq;
        a(k, q) = s * akp + wqq * akq;
    }
    // a <- W^dagger * a (rows p, q).
    for (size_t k = 0; k < n; k++) {
        Complex apk = a(p, k);
        Complex aqk = a(q, k);
        a(p, k) = c * apk + std::conj(wqp) * aqk;
        a(q, k) = s * apk + std::conj(wqq) * aqk;
    }
    a(p, q) = 0;
    a(q, p) = 0;
    a(p, p) = a(p, p).real();
    a(q, q) = a(q, q).real();
}

}  // namespace

std::vector<double> hermitian_eigenvalues(const ComplexMatrix &a, const Tolerances &tol) {
    if (!a.is_square()) {
        throw ShapeError("hermitian_eigenvalues of non-square " + shape_str(a) + " matrix");
    }
    double deficit = hermitian_deficit(a);
    if (deficit > tol.herm) {
        std::ostringstream ss;
        ss << "hermitian_eigenvalues: input is not Hermitian (max |a - a^dagger| = " << deficit << ")";
        throw ValidationError(ss.str());
    }
    size_t n = a.rows();
    // Symmetrize so rotations act on an exactly Hermitian matrix.
    ComplexMatrix work(n, n);
    for (size_t i = 0; i < n; i++) {
        work(i, i) = a(i, i).real();
        for (size_t j = i + 1; j < n; j++) {
            Complex z = 0.5 * (a(i, j) + std::conj(a(j, i)));
            work(i, j) = z;
            work(j, i) = std::conj(z);
        }
    }
    double threshold = tol.jacobi * std::max(1.0, frobenius_norm(work));
    constexpr int kMaxSweeps = 100;
    for (int sweep = 0; sweep < kMaxSweeps && off_diagonal_mass(work) > threshold; sweep++) {
        for (size_t p = 0; p + 1 < n; p++) {
            for (size_t q = p + 1; q < n; q++) {
                jacobi_rotate(work, p, q);
            }
        }
    }
    if (off_diagonal_mass(work) > threshold) {
        throw InternalConsistencyError("hermitian_eigenvalues: Jacobi sweeps did not converge");
    }
    std::vector<double> out(n);
    for (size_t i = 0; i < n; i++) {
        out[i] = work(i, i).real();
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// DensityMatrix

std::string density_matrix_problems(const ComplexMatrix &mat, const Tolerances &tol) {
    if (!mat.is_square() || mat.rows() == 0) {
        return "not square (" + shape_str(mat) + ")";
    }
    std::ostringstream problems;
    std::string sep;
    double herm = hermitian_deficit(mat);
    if (herm > tol.herm) {
        problems << sep << "not Hermitian (max |a - a^dagger| = " << herm << ")";
        sep = "; ";
    }
    Complex tr = trace(mat);
    if (std::abs(tr - 1.0) > tol.norm) {
        problems << sep << "trace " << tr.real() << (tr.imag() < 0 ? "-" : "+") << std::abs(tr.imag())
                 << "i is not 1";
        sep = "; ";
    }
    if (herm <= tol.herm) {
        double lo = hermitian_eigenvalues(mat, tol).front();
        if (lo < -tol.psd) {
            problems << sep << "not positive semidefinite (min eigenvalue " << lo << ")";
        }
    }
    return problems.str();
}

DensityMatrix::DensityMatrix(ComplexMatrix mat, const Tolerances &tol) : mat_(std::move(mat)) {
    std::string problems = density_matrix_problems(mat_, tol);
    if (!problems.empty()) {
        throw ValidationError("invalid density matrix: " + problems);
    }
}

DensityMatrix DensityMatrix::pure(const Ket &psi) {
    return DensityMatrix(outer(psi.vec(), psi.vec()), Unchecked{});
}

DensityMatrix DensityMatrix::maximally_mixed(size_t d) {
    return DensityMatrix((1.0 / static_cast<double>(d)) * ComplexMatrix::identity(d), Unchecked{});
}

}  // namespace weylkit
