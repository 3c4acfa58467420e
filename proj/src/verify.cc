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

#include "weylkit/verify.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <sstream>

#include "weylkit/channels.h"
#include "weylkit/dilation.h"
#include "weylkit/weyl.h"

namespace weylkit {

namespace {

constexpr size_t kRoundTripSamples = 100;
constexpr size_t kDilationSamples = 50;
constexpr size_t kDepolarizingSamples = 100;

std::vector<ComplexMatrix> basis_under_test(size_t d, bool fault) {
    auto elements = WeylBasis(d).elements();
    if (fault) {
        elements[WeylIndex(d, 1, 0).linear()](1, 0) *= -1.0;
    }
    return elements;
}

double hs_inner_residual(const std::vector<ComplexMatrix> &elements, size_t d) {
    // || G - d I ||_F with G_ab = tr(W_a^dagger W_b), summed entrywise.
    double s = 0;
    for (size_t a = 0; a < elements.size(); a++) {
        auto ea = elements[a].entries();
        for (size_t b = 0; b < elements.size(); b++) {
            auto eb = elements[b].entries();
            Complex g{};
            for (size_t i = 0; i < ea.size(); i++) {
                g += std::conj(ea[i]) * eb[i];
            }
            if (a == b) {
                g -= static_cast<double>(d);
            }
            s += std::norm(g);
        }
    }
    return std::sqrt(s);
}

using Check = std::function<double(size_t d, random::Rng &rng)>;

struct NamedCheck {
    const char *name;
    double tolerance;
    Check run;
};

std::vector<NamedCheck> make_checks(const VerifyOptions &opt) {
    const Tolerances &tol = opt.tol;
    bool fault = opt.inject_phase_fault;
    std::vector<NamedCheck> checks;

    checks.push_back({"orthogonality", 1e-10, [fault](size_t d, random::Rng &) {
                          return hs_inner_residual(basis_under_test(d, fault), d);
                      }});

    checks.push_back({"gram_matrix", 1e-10, [](size_t d, random::Rng &) {
                          WeylBasis basis(d);
                          auto expected = static_cast<double>(d) * ComplexMatrix::identity(d * d);
                          return frobenius_distance(gram_matrix(basis), expected);
                      }});

    checks.push_back({"trace_character", 1e-10, [](size_t d, random::Rng &) {
                          double worst = 0;
                          for (size_t l = 0; l < d; l++) {
                              for (size_t k = 0; k < d; k++) {
                                  double expected = (l == 0 && k == 0) ? static_cast<double>(d) : 0.0;
                                  auto tr = trace(weyl_element(WeylIndex(d, l, k)));
                                  worst = std::max(worst, std::abs(tr - expected));
                              }
                          }
                          return worst;
                      }});

    checks.push_back({"unitarity", 1e-12, [](size_t d, random::Rng &) {
                          double worst = 0;
                          auto id = ComplexMatrix::identity(d);
                          WeylBasis basis(d);
                          for (const auto &w : basis.elements()) {
                              worst = std::max(worst, max_abs_difference(matmul(dagger(w), w), id));
                          }
                          return worst;
                      }});

    checks.push_back({"weyl_commutation", 1e-12, [](size_t d, random::Rng &) {
                          double worst = 0;
                          for (size_t l = 0; l < d; l++) {
                              for (size_t k = 0; k < d; k++) {
                                  auto x = shift_matrix(d, l);
                                  auto z = clock_matrix(d, k);
                                  auto lhs = matmul(z, x);
                                  auto rhs = omega_pow(d, static_cast<int64_t>(l * k)) * matmul(x, z);
                                  worst = std::max(worst, max_abs_difference(lhs, rhs));
                              }
                          }
                          return worst;
                      }});

    checks.push_back({"round_trip", 1e-10, [](size_t d, random::Rng &rng) {
                          double worst = 0;
                          for (size_t s = 0; s < kRoundTripSamples; s++) {
                              auto a = random::matrix(d, d, rng);
                              worst = std::max(worst, frobenius_distance(reconstruct(decompose(a)), a));
                          }
                          return worst;
                      }});

    checks.push_back({"parseval", 1e-10, [](size_t d, random::Rng &rng) {
                          double worst = 0;
                          for (size_t s = 0; s < kRoundTripSamples; s++) {
                              auto a = random::matrix(d, d, rng);
                              double hs = trace(matmul(dagger(a), a)).real() / static_cast<double>(d);
                              worst = std::max(worst, std::abs(decompose(a).squared_norm() - hs));
                          }
                          return worst;
                      }});

    checks.push_back({"rank_one_coefficients", 1e-12, [](size_t d, random::Rng &) {
                          double worst = 0;
                          auto dd = static_cast<int64_t>(d);
                          for (int64_t a = 0; a < dd; a++) {
                              for (int64_t b = 0; b < dd; b++) {
                                  auto xi = decompose(ComplexMatrix::unit(d, a, b));
                                  for (int64_t l = 0; l < dd; l++) {
                                      for (int64_t k = 0; k < dd; k++) {
                                          Complex expected = mod_d(b + l, d) == static_cast<size_t>(a)
                                                                 ? omega_pow(d, -b * k) / static_cast<double>(d)
                                                                 : Complex{};
                                          worst = std::max(worst, std::abs(xi(l, k) - expected));
                                      }
                                  }
                              }
                          }
                          return worst;
                      }});

    checks.push_back({"lie_closure", 1e-10, [](size_t d, random::Rng &) {
                          double worst = 0;
                          for (size_t x = 0; x < d * d; x++) {
                              for (size_t y = 0; y < d * d; y++) {
                                  WeylIndex ix(d, x / d, x % d);
                                  WeylIndex iy(d, y / d, y % d);
                                  auto direct = commutator(weyl_element(ix), weyl_element(iy));
                                  auto table = commutator_in_basis(ix, iy);
                                  worst = std::max(worst, frobenius_distance(reconstruct(table), direct));
                              }
                          }
                          return worst;
                      }});

    checks.push_back({"isometry", 1e-10, [](size_t d, random::Rng &rng) {
                          double worst = 0;
                          for (size_t s = 0; s < kDilationSamples; s++) {
                              auto v = make_isometry(random::gamma(d, rng));
                              worst = std::max(worst,
                                               frobenius_distance(matmul(dagger(v), v), ComplexMatrix::identity(d)));
                          }
                          return worst;
                      }});

    checks.push_back({"weyl_form_consistency", 1e-10, [](size_t d, random::Rng &rng) {
                          double worst = 0;
                          for (size_t s = 0; s < kDilationSamples; s++) {
                              auto g = random::gamma(d, rng);
                              auto psi = random::ket(d, rng);
                              auto direct = evolve_pure(psi, g);
                              auto regrouped = reassemble(weyl_form_of_joint(psi, g), d);
                              worst = std::max(worst, distance(direct.vec, regrouped));
                          }
                          return worst;
                      }});

    checks.push_back({"dilation_partial_trace", 1e-10, [tol](size_t d, random::Rng &rng) {
                          double worst = 0;
                          for (size_t s = 0; s < kDilationSamples; s++) {
                              auto g = random::gamma(d, rng);
                              auto rho = random::density(d, rng);
                              auto kraus_side = apply_kraus(channel_from_dilation(g, tol), rho.mat());
                              auto trace_side = partial_trace_env(evolve_density(rho, g), d, d * d);
                              worst = std::max(worst, frobenius_distance(kraus_side, trace_side));
                          }
                          return worst;
                      }});

    checks.push_back({"trace_preservation", 1e-10, [tol](size_t d, random::Rng &rng) {
                          double worst = is_trace_preserving(weyl_channel(WeylWeights::uniform(d)), tol).deficit;
                          for (size_t s = 0; s < kDilationSamples; s++) {
                              auto ch = channel_from_dilation(random::gamma(d, rng), tol);
                              worst = std::max(worst, is_trace_preserving(ch, tol).deficit);
                          }
                          return worst;
                      }});

    checks.push_back({"depolarizing_limit", 1e-10, [tol](size_t d, random::Rng &rng) {
                          auto ch = weyl_channel(WeylWeights::uniform(d));
                          auto target = DensityMatrix::maximally_mixed(d).mat();
                          double worst = 0;
                          for (size_t s = 0; s < kDepolarizingSamples; s++) {
                              auto out = apply_channel(ch, random::density(d, rng), tol);
                              worst = std::max(worst, frobenius_distance(out.mat(), target));
                          }
                          return worst;
                      }});

    checks.push_back({"uniform_gamma_choi", 1e-9, [tol](size_t d, random::Rng &rng) {
                          auto g = random::uniform_magnitude_gamma(d, rng);
                          return choi_distance(channel_from_dilation(g, tol), weyl_channel(WeylWeights::uniform(d)));
                      }});

    checks.push_back({"kraus_mixing_invariance", 1e-10, [tol](size_t d, random::Rng &rng) {
                          auto ch = channel_from_dilation(random::gamma(d, rng), tol);
                          size_t m = ch.size();
                          auto u = random::unitary(m, rng);
                          std::vector<ComplexMatrix> mixed;
                          for (size_t r = 0; r < m; r++) {
                              ComplexMatrix e(d, d);
                              for (size_t c = 0; c < m; c++) {
                                  e += u(r, c) * ch.kraus()[c];
                              }
                              mixed.push_back(std::move(e));
                          }
                          return choi_distance(ch, QuantumChannel(std::move(mixed)));
                      }});

    return checks;
}

}  // namespace

bool VerifyReport::pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult &c) { return c.pass; });
}

VerifyReport run_verify(const std::vector<size_t> &dims, const VerifyOptions &options) {
    VerifyReport report{options.seed, dims, {}};
    auto checks = make_checks(options);
    for (size_t d : dims) {
        for (size_t i = 0; i < checks.size(); i++) {
            // Each (check, d) gets its own stream so results do not depend on ordering.
            random::Rng rng(options.seed + 1000003 * d + 7919 * i);
            auto start = std::chrono::steady_clock::now();
            double residual;
            try {
                residual = checks[i].run(d, rng);
            } catch (const std::exception &) {
                residual = std::numeric_limits<double>::infinity();
            }
            std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
            bool pass = std::isfinite(residual) && residual < checks[i].tolerance;
            report.checks.push_back({checks[i].name, d, pass, residual, checks[i].tolerance, elapsed.count()});
        }
    }
    std::stable_sort(report.checks.begin(), report.checks.end(), [](const CheckResult &a, const CheckResult &b) {
        return a.name != b.name ? a.name < b.name : a.d < b.d;
    });
    return report;
}

io::Json to_json(const VerifyReport &report, bool include_timing) {
    io::Json checks = io::Json::array();
    for (const auto &c : report.checks) {
        io::Json j = io::Json::object();
        j["name"] = c.name;
        j["d"] = c.d;
        j["status"] = c.pass ? "pass" : "fail";
        if (std::isfinite(c.residual)) {
            j["residual"] = c.residual;
        } else {
            j["residual"] = nullptr;
        }
        j["tolerance"] = c.tolerance;
        if (include_timing) {
            j["wall_time_s"] = c.wall_time_s;
        }
        checks.push_back(std::move(j));
    }
    io::Json doc = io::Json::object();
    doc["status"] = report.pass() ? "pass" : "fail";
    doc["seed"] = report.seed;
    doc["d"] = report.dims;
    doc["checks"] = std::move(checks);
    return doc;
}

std::string to_table(const VerifyReport &report) {
    std::ostringstream out;
    char line[160];
    std::snprintf(line, sizeof(line), "%-26s %3s  %-4s  %-12s  %-8s  %s\n", "check", "d", "stat", "residual",
                  "tol", "time_s");
    out << line;
    for (const auto &c : report.checks) {
        std::snprintf(line, sizeof(line), "%-26s %3zu  %-4s  %-12.3e  %-8.0e  %.4f\n", c.name.c_str(), c.d,
                      c.pass ? "pass" : "FAIL", c.residual, c.tolerance, c.wall_time_s);
        out << line;
    }
    out << "overall: " << (report.pass() ? "pass" : "FAIL") << " (seed " << report.seed << ")\n";
    return out.str();
}

}  // namespace weylkit
