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

#include "weylkit/cli.h"

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "weylkit/channels.h"
#include "weylkit/dilation.h"
#include "weylkit/errors.h"
#include "weylkit/serialize.h"
#include "weylkit/verify.h"
#include "weylkit/weyl.h"

namespace weylkit::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Format { kJson, kTable };

struct Common {
    std::string output = "-";
    std::string format = "json";
    std::vector<std::string> tol_overrides;

    Tolerances tolerances() const {
        Tolerances tol;
        for (const auto &item : tol_overrides) {
            auto eq = item.find('=');
            if (eq == std::string::npos) {
                throw UsageError("--tol expects name=value, got '" + item + "'");
            }
            std::string name = item.substr(0, eq);
            double value;
            try {
                size_t used;
                value = std::stod(item.substr(eq + 1), &used);
                if (used != item.size() - eq - 1) {
                    throw std::invalid_argument(item);
                }
            } catch (const std::exception &) {
                throw UsageError("--tol " + name + ": '" + item.substr(eq + 1) + "' is not a number");
            }
            if (!set_tolerance(tol, name, value)) {
                throw UsageError("--tol: unknown tolerance '" + name +
                                 "' or non-positive value (names: norm, herm, psd, jacobi, cptp, prune)");
            }
        }
        return tol;
    }

    Format fmt() const { return format == "table" ? Format::kTable : Format::kJson; }
};

void add_common(CLI::App *cmd, Common &common) {
    cmd->add_option("-o,--output", common.output, "Output path, '-' for standard output");
    cmd->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"json", "table"}));
    cmd->add_option("--tol", common.tol_overrides, "Tolerance override name=value (repeatable)");
}

void check_dim(size_t d) {
    if (d < kMinDim || d > kMaxDim) {
        throw UsageError("d must be in [" + std::to_string(kMinDim) + ", " + std::to_string(kMaxDim) + "], got " +
                         std::to_string(d));
    }
}

io::Json load(const std::string &path) {
    try {
        return io::parse(io::read_text(path));
    } catch (const ParseError &e) {
        throw ParseError(path + ": " + e.what());
    }
}

template <typename F>
auto with_path(const std::string &path, F &&f) {
    try {
        return f();
    } catch (const ParseError &e) {
        throw ParseError(path + ": " + e.what());
    }
}

std::string complex_cell(Complex z) {
    std::string re = io::format_number(z.real());
    double im = z.imag();
    if (im == 0) {
        return re;
    }
    std::string ims = io::format_number(std::abs(im));
    return re + (im < 0 ? "-" : "+") + ims + "i";
}

std::string matrix_table(const ComplexMatrix &m) {
    std::vector<std::string> cells;
    size_t width = 0;
    for (const auto &z : m.entries()) {
        cells.push_back(complex_cell(z));
        width = std::max(width, cells.back().size());
    }
    std::string out;
    for (size_t r = 0; r < m.rows(); r++) {
        for (size_t c = 0; c < m.cols(); c++) {
            const auto &cell = cells[r * m.cols() + c];
            if (c > 0) {
                out += "  ";
            }
            out.append(width - cell.size(), ' ');
            out += cell;
        }
        out += "\n";
    }
    return out;
}

std::string summary_table(const io::Json &summary) {
    std::string out;
    for (auto it = summary.begin(); it != summary.end(); ++it) {
        out += "# " + it.key() + ": ";
        if (it->is_number_float()) {
            out += io::format_number(it->get<double>());
        } else if (it->is_array()) {
            io::Json copy = *it;
            std::string s = io::dump(copy);
            s.pop_back();
            out += s;
        } else {
            out += it->dump();
        }
        out += "\n";
    }
    return out;
}

void emit(const std::string &path, const std::string &text, std::ostream &out) {
    if (path == "-") {
        out << text;
        out.flush();
    } else {
        io::write_text(path, text);
    }
}

/// Matrix artifact with an optional summary block.
void emit_matrix(const Common &c, const ComplexMatrix &m, const io::Json &summary, std::ostream &out) {
    if (c.fmt() == Format::kTable) {
        emit(c.output, summary_table(summary) + matrix_table(m), out);
        return;
    }
    io::Json doc = io::to_json(m);
    if (!summary.empty()) {
        doc["summary"] = summary;
    }
    emit(c.output, io::dump(doc), out);
}

// ---------------------------------------------------------------------------

struct BasisArgs {
    Common common;
    size_t d = 0;
    std::optional<int64_t> l;
    std::optional<int64_t> k;
};

int cmd_basis(const BasisArgs &a, std::ostream &out) {
    check_dim(a.d);
    std::vector<WeylIndex> indices;
    for (size_t l = 0; l < a.d; l++) {
        for (size_t k = 0; k < a.d; k++) {
            WeylIndex idx(a.d, static_cast<int64_t>(l), static_cast<int64_t>(k));
            if ((a.l && mod_d(*a.l, a.d) != l) || (a.k && mod_d(*a.k, a.d) != k)) {
                continue;
            }
            indices.push_back(idx);
        }
    }
    if (a.l && a.k) {
        emit_matrix(a.common, weyl_element(indices.front()), io::Json::object(), out);
        return kSuccess;
    }
    if (a.common.fmt() == Format::kTable) {
        std::string text;
        for (const auto &idx : indices) {
            text += "# X_" + std::to_string(idx.l()) + " Z_" + std::to_string(idx.k()) + "\n";
            text += matrix_table(weyl_element(idx));
        }
        emit(a.common.output, text, out);
        return kSuccess;
    }
    io::Json elements = io::Json::array();
    for (const auto &idx : indices) {
        io::Json e = io::Json::object();
        e["l"] = idx.l();
        e["k"] = idx.k();
        e["matrix"] = io::to_json(weyl_element(idx));
        elements.push_back(std::move(e));
    }
    io::Json doc = io::Json::object();
    doc["d"] = a.d;
    doc["order"] = "l-major";
    doc["elements"] = std::move(elements);
    emit(a.common.output, io::dump(doc), out);
    return kSuccess;
}

struct DecomposeArgs {
    Common common;
    std::string input;
    std::optional<size_t> d;
};

int cmd_decompose(const DecomposeArgs &a, std::ostream &out) {
    auto m = with_path(a.input, [&] { return io::matrix_from_json(load(a.input)); });
    if (!m.is_square()) {
        throw UsageError(a.input + ": expected a square matrix, got " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()));
    }
    if (a.d && *a.d != m.rows()) {
        throw UsageError(a.input + ": matrix is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                         " but --d " + std::to_string(*a.d) + " was given");
    }
    check_dim(m.rows());
    auto table = decompose(m);
    double residual = frobenius_distance(reconstruct(table), m);
    if (a.common.fmt() == Format::kTable) {
        std::string text = "# roundtrip_residual: " + io::format_number(residual) + "\n";
        for (size_t l = 0; l < table.d(); l++) {
            for (size_t k = 0; k < table.d(); k++) {
                text += std::to_string(l) + " " + std::to_string(k) + "  " + complex_cell(table(l, k)) + "\n";
            }
        }
        emit(a.common.output, text, out);
        return kSuccess;
    }
    io::Json doc = io::to_json(table);
    io::Json meta = io::Json::object();
    meta["roundtrip_residual"] = residual;
    doc["metadata"] = std::move(meta);
    emit(a.common.output, io::dump(doc), out);
    return kSuccess;
}

struct ReconstructArgs {
    Common common;
    std::string input;
};

int cmd_reconstruct(const ReconstructArgs &a, std::ostream &out) {
    auto table = with_path(a.input, [&] { return io::coefficients_from_json(load(a.input)); });
    check_dim(table.d());
    emit_matrix(a.common, reconstruct(table), io::Json::object(), out);
    return kSuccess;
}

struct DilateArgs {
    Common common;
    std::string gamma;
    std::string state;
    bool density = false;
    bool terms = false;
};

int cmd_dilate(const DilateArgs &a, std::ostream &out, std::ostream &err) {
    Tolerances tol = a.common.tolerances();
    auto g = with_path(a.gamma, [&] { return io::gamma_from_json(load(a.gamma), tol); });
    check_dim(g.d());
    auto state = with_path(a.state, [&] { return io::matrix_from_json(load(a.state)); });
    size_t d = g.d();

    io::Json summary = io::Json::object();
    summary["d"] = d;
    if (a.terms) {
        io::Json norms = io::Json::array();
        for (size_t l = 0; l < d; l++) {
            for (size_t k = 0; k < d; k++) {
                norms.push_back(env_vector(g, l, k).norm());
            }
        }
        summary["env_term_norms"] = std::move(norms);
    }

    if (!a.density) {
        if (state.cols() != 1 || state.rows() != d) {
            throw UsageError(a.state + ": expected a " + std::to_string(d) + "x1 state vector, got " +
                             std::to_string(state.rows()) + "x" + std::to_string(state.cols()));
        }
        Ket psi(state.col(0), tol);
        auto joint = evolve_pure(psi, g);
        summary["input_norm"] = psi.vec().norm();
        summary["output_norm"] = joint.vec.norm();
        emit_matrix(a.common, ComplexMatrix::column(joint.vec), summary, out);
        return kSuccess;
    }

    if (d > kDensityWarnDim) {
        err << "warning: joint density for d=" << d << " has " << (d * d * d) << "^2 entries\n";
    }
    std::optional<DensityMatrix> rho;
    if (state.cols() == 1 && state.rows() == d) {
        rho = DensityMatrix::pure(Ket(state.col(0), tol));
    } else if (state.rows() == d && state.cols() == d) {
        rho = DensityMatrix(state, tol);
    } else {
        throw UsageError(a.state + ": expected a " + std::to_string(d) + "x" + std::to_string(d) +
                         " density matrix or a " + std::to_string(d) + "x1 state vector");
    }
    auto joint = evolve_density(*rho, g);
    Complex tr = trace(joint);
    summary["trace"] = tr.real();
    summary["hermitian_deficit"] = hermitian_deficit(joint);
    emit_matrix(a.common, joint, summary, out);
    return kSuccess;
}

struct ChannelArgs {
    Common common;
    std::string gamma;
    std::string weights;
    std::string channel;
    std::string rho;
};

struct LoadedChannel {
    QuantumChannel ch;
    std::string source;
};

LoadedChannel load_channel(const ChannelArgs &a, const Tolerances &tol, bool allow_channel_file) {
    int sources = !a.gamma.empty() + !a.weights.empty() + (allow_channel_file && !a.channel.empty());
    if (sources != 1) {
        throw UsageError(allow_channel_file ? "give exactly one of --gamma, --weights, --channel"
                                            : "give exactly one of --gamma, --weights");
    }
    if (!a.gamma.empty()) {
        auto g = with_path(a.gamma, [&] { return io::gamma_from_json(load(a.gamma), tol); });
        check_dim(g.d());
        return {channel_from_dilation(g, tol), "gamma"};
    }
    if (!a.weights.empty()) {
        auto w = with_path(a.weights, [&] { return io::weights_from_json(load(a.weights), tol); });
        check_dim(w.d());
        return {weyl_channel(w), "weights"};
    }
    auto ch = with_path(a.channel, [&] { return io::channel_from_json(load(a.channel)); });
    check_dim(ch.d());
    return {std::move(ch), "channel"};
}

int cmd_channel(const ChannelArgs &a, std::ostream &out) {
    Tolerances tol = a.common.tolerances();
    auto [ch, source] = load_channel(a, tol, false);
    auto report = is_trace_preserving(ch, tol);
    if (!report.trace_preserving) {
        std::ostringstream ss;
        ss << "channel is not trace preserving (deficit " << report.deficit << ")";
        throw ValidationError(ss.str());
    }
    auto rho_m = with_path(a.rho, [&] { return io::matrix_from_json(load(a.rho)); });
    if (rho_m.rows() != ch.d() || rho_m.cols() != ch.d()) {
        throw UsageError(a.rho + ": expected a " + std::to_string(ch.d()) + "x" + std::to_string(ch.d()) +
                         " density matrix");
    }
    DensityMatrix rho(std::move(rho_m), tol);
    auto result = apply_channel(ch, rho, tol);
    io::Json summary = io::Json::object();
    summary["source"] = source;
    summary["d"] = ch.d();
    summary["kraus_count"] = ch.size();
    summary["trace_preservation_deficit"] = report.deficit;
    summary["unital_deficit"] = report.unital_deficit;
    emit_matrix(a.common, result.mat(), summary, out);
    return kSuccess;
}

int cmd_choi(const ChannelArgs &a, std::ostream &out) {
    Tolerances tol = a.common.tolerances();
    auto [ch, source] = load_channel(a, tol, true);
    auto choi = choi_matrix(ch);
    if (a.common.fmt() == Format::kTable) {
        emit(a.common.output, "# convention: column-stacking\n" + matrix_table(choi.mat), out);
        return kSuccess;
    }
    emit(a.common.output, io::dump(io::to_json(choi)), out);
    return kSuccess;
}

struct VerifyArgs {
    Common common;
    std::vector<size_t> dims;
    uint64_t seed = random::kDefaultSeed;
    bool fault = false;
    bool no_timing = false;
};

int cmd_verify(const VerifyArgs &a, std::ostream &out) {
    if (a.dims.empty()) {
        throw UsageError("verify: --d needs at least one dimension");
    }
    for (size_t d : a.dims) {
        check_dim(d);
    }
    VerifyOptions options;
    options.seed = a.seed;
    options.tol = a.common.tolerances();
    options.inject_phase_fault = a.fault;
    options.include_timing = !a.no_timing;
    auto report = run_verify(a.dims, options);
    if (a.common.fmt() == Format::kTable) {
        emit(a.common.output, to_table(report), out);
    } else {
        emit(a.common.output, io::dump(to_json(report, options.include_timing)), out);
    }
    return report.pass() ? kSuccess : kVerificationFailure;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Weyl-Heisenberg operator basis, dilations and Kraus channels on C^d", "weylkit"};
    app.require_subcommand(1);

    BasisArgs basis;
    auto *c_basis = app.add_subcommand("basis", "Emit X_l Z_k matrices (l outer, k inner)");
    c_basis->add_option("--d", basis.d, "Dimension")->required();
    c_basis->add_option("--l", basis.l, "Shift index filter");
    c_basis->add_option("--k", basis.k, "Clock index filter");
    add_common(c_basis, basis.common);

    DecomposeArgs dec;
    auto *c_dec = app.add_subcommand("decompose", "Coefficients xi_{l,k} of a d x d matrix");
    c_dec->add_option("input,-i,--input", dec.input, "Matrix file ('-' for stdin)")->required();
    c_dec->add_option("--d", dec.d, "Expected dimension");
    add_common(c_dec, dec.common);

    ReconstructArgs rec;
    auto *c_rec = app.add_subcommand("reconstruct", "Matrix from a coefficient table");
    c_rec->add_option("input,-i,--input", rec.input, "Coefficient file ('-' for stdin)")->required();
    add_common(c_rec, rec.common);

    DilateArgs dil;
    auto *c_dil = app.add_subcommand("dilate", "Evolve a state through the system-environment isometry");
    c_dil->add_option("--gamma", dil.gamma, "Gamma amplitude file")->required();
    c_dil->add_option("--state", dil.state, "State vector (d x 1) or density matrix (d x d) file")->required();
    c_dil->add_flag("--density", dil.density, "Emit the d^3 x d^3 joint density V rho V^dagger");
    c_dil->add_flag("--terms", dil.terms, "Add the norms of the environment vectors v_lk to the summary");
    add_common(c_dil, dil.common);

    ChannelArgs chan;
    auto *c_chan = app.add_subcommand("channel", "Apply a dilation or Weyl channel to a density matrix");
    c_chan->add_option("--gamma", chan.gamma, "Gamma amplitude file");
    c_chan->add_option("--weights", chan.weights, "Weyl weight file");
    c_chan->add_option("--rho", chan.rho, "Density matrix file")->required();
    add_common(c_chan, chan.common);

    ChannelArgs choi;
    auto *c_choi = app.add_subcommand("choi", "Choi matrix of a channel");
    c_choi->add_option("--gamma", choi.gamma, "Gamma amplitude file");
    c_choi->add_option("--weights", choi.weights, "Weyl weight file");
    c_choi->add_option("--channel", choi.channel, "Kraus channel file");
    add_common(c_choi, choi.common);

    VerifyArgs ver;
    auto *c_ver = app.add_subcommand("verify", "Run the invariant suite");
    c_ver->add_option("--d", ver.dims, "Comma-separated dimensions")->delimiter(',')->required();
    c_ver->add_option("--seed", ver.seed, "Random seed");
    c_ver->add_flag("--no-timing", ver.no_timing, "Omit wall times from the JSON report");
    c_ver->add_flag("--inject-phase-fault", ver.fault, "")->group("");
    add_common(c_ver, ver.common);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        app.exit(e, err, err);
        return kUsageError;
    }

    try {
        if (c_basis->parsed()) {
            return cmd_basis(basis, out);
        }
        if (c_dec->parsed()) {
            return cmd_decompose(dec, out);
        }
        if (c_rec->parsed()) {
            return cmd_reconstruct(rec, out);
        }
        if (c_dil->parsed()) {
            return cmd_dilate(dil, out, err);
        }
        if (c_chan->parsed()) {
            return cmd_channel(chan, out);
        }
        if (c_choi->parsed()) {
            return cmd_choi(choi, out);
        }
        if (c_ver->parsed()) {
            return cmd_verify(ver, out);
        }
    } catch (const UsageError &e) {
        err << "usage error: " << e.what() << "\n";
        return kUsageError;
    } catch (const ParseError &e) {
        err << "parse error: " << e.what() << "\n";
        return kUsageError;
    } catch (const ShapeError &e) {
        err << "shape error: " << e.what() << "\n";
        return kUsageError;
    } catch (const DomainError &e) {
        err << "domain error: " << e.what() << "\n";
        return kDomainError;
    } catch (const ValidationError &e) {
        err << "validation error: " << e.what() << "\n";
        return kDomainError;
    } catch (const InternalConsistencyError &e) {
        err << "consistency error: " << e.what() << "\n";
        return kDomainError;
    }
    return kUsageError;
}

}  // namespace weylkit::cli
