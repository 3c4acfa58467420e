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

#include "gtest/gtest.h"
#include "oracles.h"
#include "weylkit/errors.h"
#include "weylkit/random.h"

using namespace weylkit;

namespace {

const double kHalfRoot = 1 / std::sqrt(2.0);

GammaTable uniform_real_gamma(size_t d) {
    return GammaTable(d, std::vector<Complex>(d * d, Complex(1 / std::sqrt(static_cast<double>(d)), 0)));
}

/// One unit amplitude per column b, at row rows[b].
GammaTable single_entry_gamma(size_t d, const std::vector<size_t> &rows) {
    std::vector<Complex> g(d * d);
    for (size_t b = 0; b < d; b++) {
        g[rows[b] * d + b] = 1.0;
    }
    return GammaTable(d, g);
}

size_t count_nonzero(const ComplexVector &v) {
    size_t n = 0;
    for (auto z : v.entries()) {
        n += z != Complex{};
    }
    return n;
}

}  // namespace

TEST(gamma_table, validation_reports_column_and_deficit) {
    std::vector<Complex> g{1, 0.5, 0, 0.5};
    try {
        GammaTable(2, g);
        FAIL();
    } catch (const ValidationError &e) {
        std::string msg = e.what();
        EXPECT_NE(msg.find("column b=1"), std::string::npos) << msg;
        EXPECT_NE(msg.find("deficit -0.5"), std::string::npos) << msg;
        EXPECT_EQ(msg.find("column b=0"), std::string::npos) << msg;
    }
    EXPECT_THROW(GammaTable(2, std::vector<Complex>(3)), ShapeError);
    EXPECT_THROW(GammaTable(1, std::vector<Complex>{1}), DomainError);
}

TEST(gamma_table, indexing_wraps) {
    random::Rng rng(1);
    auto g = random::gamma(3, rng);
    EXPECT_EQ(g(-1, -2), g(2, 1));
    EXPECT_EQ(g(2, 1), g.entries()[2 * 3 + 1]);
    for (size_t b = 0; b < 3; b++) {
        EXPECT_NEAR(g.column_mass(b), 1, 1e-12);
    }
}

TEST(make_isometry, zero_row_gamma_resets_to_ground) {
    // gamma_{0,b} = 1: only l = i survives, so |i> -> |2i> (x) |e_{0,-i}>.
    // At d = 2 both basis states land on |0>, with the environment recording i.
    auto v = make_isometry(single_entry_gamma(2, {0, 0}));
    ASSERT_EQ(v.rows(), 8u);
    ASSERT_EQ(v.cols(), 2u);
    EXPECT_EQ(v.col(0), ComplexVector::basis(8, 0 * 4 + env_index(2, 0, 0)));
    EXPECT_EQ(v.col(1), ComplexVector::basis(8, 0 * 4 + env_index(2, 0, -1)));
    EXPECT_EQ(matmul(dagger(v), v), ComplexMatrix::identity(2));

    // At d = 3, |i> -> |2i mod 3> permutes the system.
    auto v3 = make_isometry(single_entry_gamma(3, {0, 0, 0}));
    for (size_t i = 0; i < 3; i++) {
        size_t b = (3 - i) % 3;
        EXPECT_EQ(v3.col(i), ComplexVector::basis(27, ((2 * i) % 3) * 9 + env_index(3, 0, b)));
    }
}

TEST(make_isometry, diagonal_gamma_keeps_system_state) {
    // gamma_{a,b} = delta_{a,b}: only l = 0 survives, |i> -> |i> (x) |e_{-i,-i}>.
    for (size_t d : {2, 3, 5}) {
        std::vector<size_t> rows(d);
        for (size_t b = 0; b < d; b++) {
            rows[b] = b;
        }
        auto v = make_isometry(single_entry_gamma(d, rows));
        for (size_t i = 0; i < d; i++) {
            auto mi = static_cast<int64_t>(i);
            EXPECT_EQ(v.col(i), ComplexVector::basis(d * d * d, i * d * d + env_index(d, -mi, -mi)));
        }
    }
}

TEST(make_isometry, single_entry_columns_are_isometries) {
    random::Rng rng(31);
    for (size_t d : {2, 3, 4, 6}) {
        std::vector<size_t> rows(d);
        for (auto &r : rows) {
            r = std::uniform_int_distribution<size_t>(0, d - 1)(rng);
        }
        auto v = make_isometry(single_entry_gamma(d, rows));
        EXPECT_EQ(matmul(dagger(v), v), ComplexMatrix::identity(d));
        for (size_t i = 0; i < d; i++) {
            EXPECT_EQ(count_nonzero(v.col(i)), 1u);
        }
    }
}

TEST(make_isometry, uniform_gamma_d2) {
    auto v = make_isometry(uniform_real_gamma(2));
    EXPECT_LT(frobenius_distance(matmul(dagger(v), v), ComplexMatrix::identity(2)), 1e-15);
    EXPECT_EQ(count_nonzero(v.col(0)), 2u);
    EXPECT_EQ(count_nonzero(v.col(1)), 2u);
}

TEST(make_isometry, column_support) {
    random::Rng rng(32);
    for (size_t d : {2, 3, 5}) {
        auto g = random::gamma(d, rng);
        auto v = make_isometry(g);
        for (size_t i = 0; i < d; i++) {
            ComplexVector expected(d * d * d);
            for (size_t l = 0; l < d; l++) {
                size_t row = ((i + l) % d) * d * d + oracle::md(static_cast<long long>(l) - static_cast<long long>(i), d) * d +
                             oracle::md(-static_cast<long long>(i), d);
                expected[row] = g(static_cast<int64_t>(l) - static_cast<int64_t>(i), -static_cast<int64_t>(i));
            }
            EXPECT_EQ(v.col(i), expected);
        }
    }
}

TEST(make_isometry, random_isometry_property) {
    random::Rng rng(33);
    for (size_t d : {2, 3, 4, 5, 7}) {
        for (int trial = 0; trial < 20; trial++) {
            auto v = make_isometry(random::gamma(d, rng));
            EXPECT_LT(frobenius_distance(matmul(dagger(v), v), ComplexMatrix::identity(d)), 1e-10);
        }
    }
}

TEST(evolve_pure, ground_state_single_entry) {
    // Column 0 has its unit amplitude at a0 = 2, so |0> -> |2> (x) |e_{2,0}>.
    auto g = single_entry_gamma(3, {2, 1, 0});
    auto joint = evolve_pure(Ket(ComplexVector::basis(3, 0)), g);
    EXPECT_EQ(joint.vec, kron(ComplexVector::basis(3, 2), ComplexVector::basis(9, env_index(3, 2, 0))));
    EXPECT_NEAR(joint.vec.norm(), 1, 1e-15);
}

TEST(evolve_pure, basis_state_is_isometry_column) {
    random::Rng rng(34);
    auto g = random::gamma(4, rng);
    auto v = make_isometry(g);
    for (size_t i = 0; i < 4; i++) {
        EXPECT_EQ(evolve_pure(Ket(ComplexVector::basis(4, i)), g).vec, v.col(i));
    }
}

TEST(evolve_pure, plus_state_uniform_gamma_d2) {
    auto psi = Ket(ComplexVector{kHalfRoot, kHalfRoot});
    auto g = uniform_real_gamma(2);
    auto joint = evolve_pure(psi, g);
    // Hand evaluation of the double sum: amplitudes 1/2 at |0,e00>, |0,e01>, |1,e10>, |1,e11>.
    ComplexVector expected{0.5, 0.5, 0, 0, 0, 0, 0.5, 0.5};
    EXPECT_LT(distance(joint.vec, expected), 1e-15);
    EXPECT_LT(distance(joint.vec, oracle::evolve_by_double_sum(psi.vec(), g)), 1e-15);
}

TEST(evolve_pure, matches_double_sum_and_keeps_norm) {
    random::Rng rng(35);
    for (size_t d : {2, 3, 5}) {
        for (int trial = 0; trial < 20; trial++) {
            auto g = random::gamma(d, rng);
            auto psi = random::ket(d, rng);
            auto joint = evolve_pure(psi, g);
            EXPECT_LT(distance(joint.vec, oracle::evolve_by_double_sum(psi.vec(), g)), 1e-12);
            EXPECT_NEAR(joint.vec.norm(), 1, 1e-10);
            EXPECT_LT(distance(joint.vec, matvec(make_isometry(g), psi.vec())), 1e-12);
        }
    }
}

TEST(evolve_pure, dimension_mismatch) {
    EXPECT_THROW(evolve_pure(Ket(ComplexVector::basis(3, 0)), uniform_real_gamma(2)), ShapeError);
    EXPECT_THROW(weyl_form_of_joint(Ket(ComplexVector::basis(3, 0)), uniform_real_gamma(2)), ShapeError);
}

TEST(weyl_form_of_joint, reassembles_direct_evolution) {
    random::Rng rng(36);
    for (size_t d : {2, 3, 5}) {
        for (int trial = 0; trial < 50; trial++) {
            auto g = random::gamma(d, rng);
            auto psi = random::ket(d, rng);
            auto terms = weyl_form_of_joint(psi, g);
            ASSERT_EQ(terms.size(), d * d);
            // Brute-force sum of (1/d) sys (x) env via kron.
            ComplexVector sum(d * d * d);
            for (const auto &t : terms) {
                auto piece = kron(t.sys, t.env);
                for (size_t i = 0; i < sum.dim(); i++) {
                    sum[i] += piece[i] / static_cast<double>(d);
                }
            }
            auto direct = evolve_pure(psi, g).vec;
            EXPECT_LT(distance(sum, direct), 1e-10);
            EXPECT_LT(distance(reassemble(terms, d), direct), 1e-10);
        }
    }
}

TEST(weyl_form_of_joint, term_structure) {
    random::Rng rng(37);
    size_t d = 3;
    auto g = random::gamma(d, rng);
    auto psi = random::ket(d, rng);
    auto terms = weyl_form_of_joint(psi, g);
    for (size_t l = 0; l < d; l++) {
        for (size_t k = 0; k < d; k++) {
            const auto &t = terms[l * d + k];
            EXPECT_EQ(t.idx, WeylIndex(d, l, k));
            EXPECT_LT(distance(t.sys, matvec(oracle::weyl_by_product(d, l, k), psi.vec())), 1e-14);
            ComplexVector env(d * d);
            for (size_t z = 0; z < d; z++) {
                env[((z + l) % d) * d + z] = oracle::root(d, static_cast<long long>(z * k)) *
                                             g(static_cast<int64_t>(z + l), static_cast<int64_t>(z));
            }
            EXPECT_LT(distance(t.env, env), 1e-14);
        }
    }
}

TEST(weyl_form_of_joint, uniform_gamma_terms_have_unit_system_norm) {
    random::Rng rng(38);
    auto psi = random::ket(2, rng);
    for (const auto &t : weyl_form_of_joint(psi, uniform_real_gamma(2))) {
        EXPECT_NEAR(t.sys.norm(), 1, 1e-14);
        EXPECT_NEAR(t.env.norm(), 1, 1e-14);
    }
}

TEST(weyl_form_of_joint, env_vector_parseval) {
    // sum_k |v_lk|^2 = d sum_z |gamma_{z+l,z}|^2.
    random::Rng rng(39);
    for (size_t d : {2, 3, 5}) {
        auto g = random::gamma(d, rng);
        for (size_t l = 0; l < d; l++) {
            double lhs = 0;
            for (size_t k = 0; k < d; k++) {
                lhs += std::pow(env_vector(g, l, k).norm(), 2);
            }
            double diag = 0;
            for (size_t z = 0; z < d; z++) {
                diag += std::norm(g(static_cast<int64_t>(z + l), static_cast<int64_t>(z)));
            }
            EXPECT_NEAR(lhs, static_cast<double>(d) * diag, 1e-10);
        }
    }
}

TEST(env_overlaps, diagonal_iff_magnitudes_constant_along_diagonals) {
    random::Rng rng(40);
    // |gamma_{a,b}| depending only on a - b: off-diagonal overlaps vanish.
    size_t d = 3;
    std::vector<double> mags{0.3, 0.5, std::sqrt(1 - 0.09 - 0.25)};
    std::vector<Complex> g(d * d);
    std::uniform_real_distribution<double> phase(0, 6.283185307179586);
    for (size_t a = 0; a < d; a++) {
        for (size_t b = 0; b < d; b++) {
            g[a * d + b] = std::polar(mags[(a + d - b) % d], phase(rng));
        }
    }
    GammaTable banded(d, g);
    for (size_t l = 0; l < d; l++) {
        auto ov = env_overlaps(banded, l);
        for (size_t k = 0; k < d; k++) {
            for (size_t kp = 0; kp < d; kp++) {
                double expected = k == kp ? d * mags[l] * mags[l] : 0.0;
                EXPECT_LT(std::abs(ov(k, kp) - expected), 1e-12);
            }
        }
    }
    // A generic table has nonzero overlaps, matching sum_z omega^{z(k'-k)} |gamma_{z+l,z}|^2.
    auto generic = random::gamma(d, rng);
    auto ov = env_overlaps(generic, 1);
    for (size_t k = 0; k < d; k++) {
        for (size_t kp = 0; kp < d; kp++) {
            Complex expected{};
            for (size_t z = 0; z < d; z++) {
                expected += oracle::root(d, static_cast<long long>(z * kp) - static_cast<long long>(z * k)) *
                            std::norm(generic(static_cast<int64_t>(z + 1), static_cast<int64_t>(z)));
            }
            EXPECT_LT(std::abs(ov(k, kp) - expected), 1e-12);
        }
    }
    EXPECT_GT(std::abs(ov(0, 1)), 1e-6);
}

TEST(evolve_density, basis_projector_is_column_outer_product) {
    random::Rng rng(41);
    auto g = random::gamma(3, rng);
    auto v = make_isometry(g);
    for (size_t i = 0; i < 3; i++) {
        auto rho = DensityMatrix::pure(Ket(ComplexVector::basis(3, i)));
        EXPECT_LT(frobenius_distance(evolve_density(rho, g), outer(v.col(i), v.col(i))), 1e-15);
    }
}

TEST(evolve_density, valid_joint_state) {
    random::Rng rng(42);
    for (size_t d : {2, 3}) {
        for (int trial = 0; trial < 10; trial++) {
            auto g = random::gamma(d, rng);
            auto rho = random::density(d, rng);
            auto joint = evolve_density(rho, g);
            EXPECT_NEAR(trace(joint).real(), 1, 1e-10);
            EXPECT_LT(hermitian_deficit(joint), 1e-12);
            EXPECT_GE(hermitian_eigenvalues(joint).front(), -1e-9);
            auto v = make_isometry(g);
            EXPECT_LT(frobenius_distance(joint, matmul(matmul(v, rho.mat()), dagger(v))), 1e-12);
        }
    }
}

TEST(evolve_density, uniform_gamma_reduces_to_maximally_mixed) {
    random::Rng rng(43);
    auto g = uniform_real_gamma(2);
    for (int trial = 0; trial < 10; trial++) {
        auto reduced = partial_trace_env(evolve_density(random::density(2, rng), g), 2, 4);
        EXPECT_LT(frobenius_distance(reduced, 0.5 * ComplexMatrix::identity(2)), 1e-14);
    }
}

TEST(evolve_density, purity_preservation) {
    random::Rng rng(44);
    for (size_t d : {2, 3, 5}) {
        auto g = random::gamma(d, rng);
        auto psi = random::ket(d, rng);
        auto joint = evolve_pure(psi, g).vec;
        EXPECT_LT(frobenius_distance(evolve_density(DensityMatrix::pure(psi), g), outer(joint, joint)), 1e-10);
    }
}

TEST(evolve_density, linear_over_mixtures) {
    random::Rng rng(45);
    size_t d = 3;
    auto g = random::gamma(d, rng);
    auto r1 = random::density(d, rng);
    auto r2 = random::density(d, rng);
    std::vector<double> p{0.3, 0.7};
    std::vector<ComplexMatrix> states{r1.mat(), r2.mat()};
    auto mix = ensemble_to_density(p, states);
    auto lhs = evolve_density(mix, g);
    auto rhs = 0.3 * evolve_density(r1, g) + 0.7 * evolve_density(r2, g);
    EXPECT_LT(frobenius_distance(lhs, rhs), 1e-12);
}

TEST(ensemble_to_density, examples) {
    auto p0 = ComplexMatrix::unit(2, 0, 0);
    auto p1 = ComplexMatrix::unit(2, 1, 1);
    std::vector<double> one{1.0};
    std::vector<ComplexMatrix> single{p0};
    EXPECT_EQ(ensemble_to_density(one, single).mat(), p0);

    std::vector<double> half{0.5, 0.5};
    std::vector<ComplexMatrix> both{p0, p1};
    EXPECT_EQ(ensemble_to_density(half, both).mat(), 0.5 * ComplexMatrix::identity(2));

    random::Rng rng(46);
    auto a = random::ket(3, rng);
    auto b = random::ket(3, rng);
    std::vector<double> w{0.25, 0.75};
    std::vector<ComplexMatrix> projectors{outer(a.vec(), a.vec()), outer(b.vec(), b.vec())};
    auto rho = ensemble_to_density(w, projectors);
    ComplexMatrix direct(3, 3);
    for (size_t i = 0; i < 3; i++) {
        for (size_t j = 0; j < 3; j++) {
            direct(i, j) = 0.25 * a[i] * std::conj(a[j]) + 0.75 * b[i] * std::conj(b[j]);
        }
    }
    EXPECT_LT(frobenius_distance(rho.mat(), direct), 1e-15);
    EXPECT_GE(hermitian_eigenvalues(rho.mat()).front(), -1e-12);
}

TEST(ensemble_to_density, errors) {
    auto p0 = ComplexMatrix::unit(2, 0, 0);
    auto p1 = ComplexMatrix::unit(2, 1, 1);
    std::vector<ComplexMatrix> both{p0, p1};
    std::vector<double> negative{1.5, -0.5};
    EXPECT_THROW(ensemble_to_density(negative, both), DomainError);
    std::vector<double> short_sum{0.5, 0.4};
    EXPECT_THROW(ensemble_to_density(short_sum, both), DomainError);
    std::vector<double> half{0.5, 0.5};
    // Mixture is diag(1.5, -0.5): trace one but indefinite.
    std::vector<ComplexMatrix> indefinite{ComplexMatrix{{2, 0}, {0, -1}}, p0};
    EXPECT_THROW(ensemble_to_density(half, indefinite), ValidationError);
    std::vector<ComplexMatrix> mismatched{p0, ComplexMatrix::identity(3)};
    EXPECT_THROW(ensemble_to_density(half, mismatched), ShapeError);
}
