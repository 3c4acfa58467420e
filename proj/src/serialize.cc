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

#include "weylkit/serialize.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "weylkit/errors.h"

namespace weylkit::io {

namespace {

bool is_scalar_array(const Json &j) {
    if (!j.is_array()) {
        return false;
    }
    for (const auto &e : j) {
        if (e.is_structured()) {
            return false;
        }
    }
    return true;
}

void dump_into(const Json &j, std::string &out, int indent) {
    switch (j.type()) {
        case Json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += "{\n";
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) {
                    out += ",\n";
                }
                first = false;
                out.append(indent + 2, ' ');
                out += Json(it.key()).dump();
                out += ": ";
                dump_into(it.value(), out, indent + 2);
            }
            out += "\n";
            out.append(indent, ' ');
            out += "}";
            return;
        }
        case Json::value_t::array: {
            if (is_scalar_array(j)) {
                out += "[";
                for (size_t i = 0; i < j.size(); i++) {
                    if (i > 0) {
                        out += ", ";
                    }
                    dump_into(j[i], out, indent);
                }
                out += "]";
                return;
            }
            out += "[\n";
            for (size_t i = 0; i < j.size(); i++) {
                if (i > 0) {
                    out += ",\n";
                }
                out.append(indent + 2, ' ');
                dump_into(j[i], out, indent + 2);
            }
            out += "\n";
            out.append(indent, ' ');
            out += "]";
            return;
        }
        case Json::value_t::number_float:
            out += format_number(j.get<double>());
            return;
        default:
            out += j.dump();
            return;
    }
}

Json complex_json(Complex z) {
    return Json::array({z.real(), z.imag()});
}

const Json &field(const Json &doc, const char *name) {
    if (!doc.is_object()) {
        throw ParseError("expected a JSON object at top level");
    }
    auto it = doc.find(name);
    if (it == doc.end()) {
        throw ParseError(std::string("missing field '") + name + "'");
    }
    return *it;
}

size_t positive_int_field(const Json &doc, const char *name) {
    const Json &j = field(doc, name);
    if (!j.is_number_integer() || j.get<int64_t>() <= 0) {
        throw ParseError(std::string("field '") + name + "': expected a positive integer, got " + j.dump());
    }
    return j.get<size_t>();
}

double number_at(const Json &j, const std::string &where) {
    if (!j.is_number()) {
        throw ParseError("field '" + where + "': expected a number, got " + j.dump());
    }
    double x = j.get<double>();
    if (!std::isfinite(x)) {
        throw ParseError("field '" + where + "': non-finite number");
    }
    return x;
}

std::vector<Complex> complex_array(const Json &doc, const char *name, size_t expected) {
    const Json &arr = field(doc, name);
    if (!arr.is_array()) {
        throw ParseError(std::string("field '") + name + "': expected an array of [re, im] pairs");
    }
    if (arr.size() != expected) {
        throw ParseError(std::string("field '") + name + "': expected " + std::to_string(expected) +
                         " entries, got " + std::to_string(arr.size()));
    }
    std::vector<Complex> out;
    out.reserve(expected);
    for (size_t i = 0; i < arr.size(); i++) {
        std::string where = std::string(name) + "[" + std::to_string(i) + "]";
        const Json &e = arr[i];
        if (!e.is_array() || e.size() != 2) {
            throw ParseError("field '" + where + "': expected [re, im], got " + e.dump());
        }
        out.emplace_back(number_at(e[0], where + "[0]"), number_at(e[1], where + "[1]"));
    }
    return out;
}

void require_order(const Json &doc) {
    auto it = doc.find("order");
    if (it != doc.end() && *it != "l-major") {
        throw ParseError("field 'order': only \"l-major\" is supported, got " + it->dump());
    }
}

}  // namespace

std::string format_number(double x) {
    if (x == 0) {
        return "0";
    }
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string dump(const Json &doc) {
    std::string out;
    dump_into(doc, out, 0);
    out += "\n";
    return out;
}

Json parse(std::string_view text) {
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error &e) {
        // nlohmann reports "... at line L, column C: ..." in what().
        throw ParseError(e.what());
    }
}

// ---------------------------------------------------------------------------

Json to_json(const ComplexMatrix &m) {
    Json entries = Json::array();
    for (const auto &z : m.entries()) {
        entries.push_back(complex_json(z));
    }
    Json doc = Json::object();
    doc["rows"] = m.rows();
    doc["cols"] = m.cols();
    doc["entries"] = std::move(entries);
    return doc;
}

Json to_json(const ComplexVector &v) {
    return to_json(ComplexMatrix::column(v));
}

Json to_json(const CoefficientTable &t) {
    Json xi = Json::array();
    for (const auto &z : t.entries()) {
        xi.push_back(complex_json(z));
    }
    Json doc = Json::object();
    doc["d"] = t.d();
    doc["order"] = "l-major";
    doc["xi"] = std::move(xi);
    return doc;
}

Json to_json(const GammaTable &g) {
    Json gamma = Json::array();
    for (const auto &z : g.entries()) {
        gamma.push_back(complex_json(z));
    }
    Json doc = Json::object();
    doc["d"] = g.d();
    doc["gamma"] = std::move(gamma);
    return doc;
}

Json to_json(const WeylWeights &w) {
    Json doc = Json::object();
    doc["d"] = w.d();
    doc["order"] = "l-major";
    doc["p"] = w.entries();
    return doc;
}

Json to_json(const QuantumChannel &ch) {
    Json kraus = Json::array();
    for (const auto &e : ch.kraus()) {
        kraus.push_back(to_json(e));
    }
    Json doc = Json::object();
    doc["d"] = ch.d();
    doc["kraus"] = std::move(kraus);
    return doc;
}

Json to_json(const ChoiMatrix &j) {
    Json doc = Json::object();
    doc["convention"] = "column-stacking";
    doc["d"] = j.d;
    Json mat = to_json(j.mat);
    for (auto it = mat.begin(); it != mat.end(); ++it) {
        doc[it.key()] = std::move(it.value());
    }
    return doc;
}

ComplexMatrix matrix_from_json(const Json &doc) {
    size_t rows = positive_int_field(doc, "rows");
    size_t cols = positive_int_field(doc, "cols");
    return ComplexMatrix(rows, cols, complex_array(doc, "entries", rows * cols));
}

CoefficientTable coefficients_from_json(const Json &doc) {
    size_t d = positive_int_field(doc, "d");
    if (d < 2) {
        throw ParseError("field 'd': must be >= 2");
    }
    require_order(doc);
    return CoefficientTable(d, complex_array(doc, "xi", d * d));
}

GammaTable gamma_from_json(const Json &doc, const Tolerances &tol) {
    size_t d = positive_int_field(doc, "d");
    if (d < 2) {
        throw ParseError("field 'd': must be >= 2");
    }
    return GammaTable(d, complex_array(doc, "gamma", d * d), tol);
}

WeylWeights weights_from_json(const Json &doc, const Tolerances &tol) {
    size_t d = positive_int_field(doc, "d");
    if (d < 2) {
        throw ParseError("field 'd': must be >= 2");
    }
    require_order(doc);
    const Json &arr = field(doc, "p");
    if (!arr.is_array() || arr.size() != d * d) {
        throw ParseError("field 'p': expected an array of " + std::to_string(d * d) + " numbers");
    }
    std::vector<double> p;
    p.reserve(d * d);
    for (size_t i = 0; i < arr.size(); i++) {
        p.push_back(number_at(arr[i], "p[" + std::to_string(i) + "]"));
    }
    return WeylWeights(d, std::move(p), tol);
}

QuantumChannel channel_from_json(const Json &doc) {
    size_t d = positive_int_field(doc, "d");
    const Json &arr = field(doc, "kraus");
    if (!arr.is_array() || arr.empty()) {
        throw ParseError("field 'kraus': expected a nonempty array of matrices");
    }
    std::vector<ComplexMatrix> kraus;
    for (size_t m = 0; m < arr.size(); m++) {
        ComplexMatrix e;
        try {
            e = matrix_from_json(arr[m]);
        } catch (const ParseError &err) {
            throw ParseError("kraus[" + std::to_string(m) + "]: " + err.what());
        }
        if (e.rows() != d || e.cols() != d) {
            throw ParseError("kraus[" + std::to_string(m) + "]: expected a " + std::to_string(d) + "x" +
                             std::to_string(d) + " matrix");
        }
        kraus.push_back(std::move(e));
    }
    return QuantumChannel(std::move(kraus));
}

// ---------------------------------------------------------------------------

std::string read_text(const std::string &path) {
    if (path == "-") {
        return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text(const std::string &path, std::string_view text) {
    if (path == "-") {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ParseError("cannot open '" + path + "' for writing");
    }
    out << text;
}

}  // namespace weylkit::io
