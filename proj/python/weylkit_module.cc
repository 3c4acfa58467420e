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

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "weylkit/channels.h"
#include "weylkit/dilation.h"
#include "weylkit/errors.h"
#include "weylkit/serialize.h"
#include "weylkit/verify.h"
#include "weylkit/weyl.h"

namespace py = pybind11;
using namespace weylkit;

namespace {

using CArray = py::array_t<Complex, py::array::c_style | py::array::forcecast>;

ComplexMatrix to_matrix(const CArray &a) {
    if (a.ndim() == 1) {
        auto n = static_cast<size_t>(a.shape(0));
        return ComplexMatrix(n, 1, std::vector<Complex>(a.data(), a.data() + n));
    }
    if (a.ndim() != 2) {
        throw ShapeError("expected a 1-D or 2-D array, got " + std::to_string(a.ndim()) + "-D");
    }
    auto r = static_cast<size_t>(a.shape(0));
    auto c = static_cast<size_t>(a.shape(1));
    return ComplexMatrix(r, c, std::vector<Complex>(a.data(), a.data() + r * c));
}

ComplexVector to_vector(const CArray &a) {
    auto m = to_matrix(a);
    if (m.cols() != 1) {
        throw ShapeError("expected a vector");
    }
    return m.col(0);
}

CArray from_matrix(const ComplexMatrix &m) {
    CArray out({m.rows(), m.cols()});
    std::copy(m.entries().begin(), m.entries().end(), out.mutable_data());
    return out;
}

CArray from_vector(const ComplexVector &v) {
    CArray out(static_cast<py::ssize_t>(v.dim()));
    std::copy(v.entries().begin(), v.entries().end(), out.mutable_data());
    return out;
}

/// d x d array indexed [l, k] (or [a, b] for gamma).
CArray square_table(size_t d, const std::vector<Complex> &flat) {
    CArray out({d, d});
    std::copy(flat.begin(), flat.end(), out.mutable_data());
    return out;
}

std::vector<Complex> flat_square(const CArray &a, const char *what) {
    auto m = to_matrix(a);
    if (!m.is_square()) {
        throw ShapeError(std::string(what) + ": expected a d x d array");
    }
    return std::vector<Complex>(m.entries().begin(), m.entries().end());
}

GammaTable to_gamma(const CArray &a) {
    auto flat = flat_square(a, "gamma");
    auto d = static_cast<size_t>(a.shape(0));
    return GammaTable(d, std::move(flat));
}

QuantumChannel to_channel(const std::vector<CArray> &kraus) {
    std::vector<ComplexMatrix> ops;
    for (const auto &k : kraus) {
        ops.push_back(to_matrix(k));
    }
    return QuantumChannel(std::move(ops));
}

py::list from_channel(const QuantumChannel &ch) {
    py::list out;
    for (const auto &e : ch.kraus()) {
        out.append(from_matrix(e));
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Weyl-Heisenberg basis, dilations and Kraus channels";

    auto base = py::register_exception<ShapeError>(m, "ShapeError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<InternalConsistencyError>(m, "InternalConsistencyError", PyExc_RuntimeError);
    (void)base;

    m.def("omega", [](int64_t d) { return omega(d); }, py::arg("d"));

    m.def(
        "weyl_element",
        [](size_t d, int64_t l, int64_t k) { return from_matrix(weyl_element(WeylIndex(d, l, k))); },
        py::arg("d"), py::arg("l"), py::arg("k"), "X_l Z_k as a d x d array.");

    m.def(
        "basis",
        [](size_t d) {
            WeylBasis b(d);
            CArray out({d * d, d, d});
            Complex *p = out.mutable_data();
            for (const auto &e : b.elements()) {
                p = std::copy(e.entries().begin(), e.entries().end(), p);
            }
            return out;
        },
        py::arg("d"), "All d^2 elements stacked in l-major order, shape (d*d, d, d).");

    m.def(
        "decompose", [](const CArray &a) { return square_table(a.shape(0), decompose(to_matrix(a)).entries()); },
        py::arg("a"), "Coefficients xi[l, k] with a = sum xi[l, k] X_l Z_k.");

    m.def(
        "reconstruct",
        [](const CArray &xi) {
            auto d = static_cast<size_t>(xi.shape(0));
            return from_matrix(reconstruct(CoefficientTable(d, flat_square(xi, "xi"))));
        },
        py::arg("xi"));

    m.def(
        "commutator_in_basis",
        [](size_t d, int64_t l1, int64_t k1, int64_t l2, int64_t k2) {
            return square_table(d, commutator_in_basis(WeylIndex(d, l1, k1), WeylIndex(d, l2, k2)).entries());
        },
        py::arg("d"), py::arg("l1"), py::arg("k1"), py::arg("l2"), py::arg("k2"));

    m.def(
        "make_isometry", [](const CArray &gamma) { return from_matrix(make_isometry(to_gamma(gamma))); },
        py::arg("gamma"), "d^3 x d isometry for gamma[a, b].");

    m.def(
        "evolve_pure",
        [](const CArray &gamma, const CArray &psi) {
            return from_vector(evolve_pure(Ket(to_vector(psi)), to_gamma(gamma)).vec);
        },
        py::arg("gamma"), py::arg("psi"));

    m.def(
        "weyl_form",
        [](const CArray &gamma, const CArray &psi) {
            py::list out;
            for (const auto &t : weyl_form_of_joint(Ket(to_vector(psi)), to_gamma(gamma))) {
                out.append(py::make_tuple(t.idx.l(), t.idx.k(), from_vector(t.sys), from_vector(t.env)));
            }
            return out;
        },
        py::arg("gamma"), py::arg("psi"), "List of (l, k, X_l Z_k psi, v_lk).");

    m.def(
        "evolve_density",
        [](const CArray &gamma, const CArray &rho) {
            return from_matrix(evolve_density(DensityMatrix(to_matrix(rho)), to_gamma(gamma)));
        },
        py::arg("gamma"), py::arg("rho"));

    m.def(
        "partial_trace_env",
        [](const CArray &joint, size_t d_sys, size_t d_env) {
            return from_matrix(partial_trace_env(to_matrix(joint), d_sys, d_env));
        },
        py::arg("joint"), py::arg("d_sys"), py::arg("d_env"));

    m.def(
        "kraus_from_isometry", [](const CArray &v) { return from_channel(kraus_from_isometry(to_matrix(v))); },
        py::arg("v"));

    m.def(
        "channel_from_dilation", [](const CArray &gamma) { return from_channel(channel_from_dilation(to_gamma(gamma))); },
        py::arg("gamma"));

    m.def(
        "weyl_channel",
        [](const py::array_t<double, py::array::c_style | py::array::forcecast> &p) {
            if (p.ndim() != 2 || p.shape(0) != p.shape(1)) {
                throw ShapeError("weights: expected a d x d array");
            }
            auto d = static_cast<size_t>(p.shape(0));
            return from_channel(weyl_channel(WeylWeights(d, std::vector<double>(p.data(), p.data() + d * d))));
        },
        py::arg("p"), "Kraus list sqrt(p[l, k]) X_l Z_k, skipping zero weights.");

    m.def(
        "apply_channel",
        [](const std::vector<CArray> &kraus, const CArray &rho) {
            return from_matrix(apply_channel(to_channel(kraus), DensityMatrix(to_matrix(rho))).mat());
        },
        py::arg("kraus"), py::arg("rho"));

    m.def(
        "is_trace_preserving",
        [](const std::vector<CArray> &kraus) {
            auto r = is_trace_preserving(to_channel(kraus));
            py::dict out;
            out["trace_preserving"] = r.trace_preserving;
            out["deficit"] = r.deficit;
            out["unital_deficit"] = r.unital_deficit;
            return out;
        },
        py::arg("kraus"));

    m.def(
        "choi_matrix", [](const std::vector<CArray> &kraus) { return from_matrix(choi_matrix(to_channel(kraus)).mat); },
        py::arg("kraus"));

    m.def(
        "channels_equal",
        [](const std::vector<CArray> &a, const std::vector<CArray> &b, double tol) {
            return channels_equal(to_channel(a), to_channel(b), tol);
        },
        py::arg("a"), py::arg("b"), py::arg("tol") = 1e-9);

    m.def(
        "verify_json",
        [](const std::vector<size_t> &dims, uint64_t seed, bool include_timing) {
            VerifyOptions opt;
            opt.seed = seed;
            opt.include_timing = include_timing;
            return io::dump(to_json(run_verify(dims, opt), include_timing));
        },
        py::arg("dims"), py::arg("seed") = random::kDefaultSeed, py::arg("include_timing") = true);
}
