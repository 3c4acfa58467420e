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

#ifndef WEYLKIT_SERIALIZE_H
#define WEYLKIT_SERIALIZE_H

#include <string>
#include <string_view>

#include "json.hpp"
#include "weylkit/channels.h"
#include "weylkit/dilation.h"
#include "weylkit/numerics.h"
#include "weylkit/weyl.h"

// JSON file formats. Complex numbers are [re, im] pairs; all arrays are
// row-major, (l outer, k inner) or (a outer, b inner) as noted.
//
//   matrix:       {"rows": R, "cols": C, "entries": [[re, im], ...]}
//   coefficients: {"d": d, "order": "l-major", "xi": [[re, im], ...]}
//   gamma:        {"d": d, "gamma": [[re, im], ...]}
//   weights:      {"d": d, "order": "l-major", "p": [p, ...]}
//   channel:      {"d": d, "kraus": [matrix, ...]}
//   choi:         matrix plus {"convention": "column-stacking", "d": d}
//
// Writers emit doubles with 17 significant digits and normalize -0 to 0, so
// equal values always produce identical bytes. Readers ignore unknown keys.
namespace weylkit::io {

using Json = nlohmann::ordered_json;

/// Deterministic rendering of `doc`, two-space indented, trailing newline.
/// Arrays of scalars are kept on one line.
std::string dump(const Json &doc);

/// %.17g with -0 mapped to 0.
std::string format_number(double x);

/// Throws ParseError carrying the line and column of the syntax error.
Json parse(std::string_view text);

Json to_json(const ComplexMatrix &m);
Json to_json(const ComplexVector &v);
Json to_json(const CoefficientTable &t);
Json to_json(const GammaTable &g);
Json to_json(const WeylWeights &w);
Json to_json(const QuantumChannel &ch);
Json to_json(const ChoiMatrix &j);

/// Field-level problems throw ParseError naming the field.
ComplexMatrix matrix_from_json(const Json &doc);
CoefficientTable coefficients_from_json(const Json &doc);
/// Amplitudes are parsed before validation, so a normalization failure throws
/// ValidationError (with the per-column report) rather than ParseError.
GammaTable gamma_from_json(const Json &doc, const Tolerances &tol = {});
WeylWeights weights_from_json(const Json &doc, const Tolerances &tol = {});
QuantumChannel channel_from_json(const Json &doc);

/// Reads a file, or standard input for "-". Throws ParseError if unreadable.
std::string read_text(const std::string &path);
/// Writes a file, or standard output for "-".
void write_text(const std::string &path, std::string_view text);

}  // namespace weylkit::io

#endif  // WEYLKIT_SERIALIZE_H
