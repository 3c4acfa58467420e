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
#include <numbers>

#include "gtest/gtest.h"
#include "weylkit/errors.h"
#include "weylkit/random.h"

using namespace weylkit;

namespace {

std::string error_of(const std::function<void()> &f) {
    try {
        f();
    } catch (const std::exception &e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST(format_number, seventeen_digits) {
    EXPECT_EQ(io::format_number(0.1), "0.10000000000000001");
    EXPECT_EQ(io::format_number(1.0), "1");
    EXPECT_EQ(io::format_number(-0.0), "0");
    EXPECT_EQ(io::format_number(std::numbers::pi), "3.1415926535897931");
    EXPECT_EQ(io::format_number(1e-300), "1e-300");
    EXPECT_EQ(io::format_number(2.0 / 3.0), "0.66666666666666663");
}

TEST(dump, layout) {
    io::Json doc = io::to_json(ComplexMatrix{{1, Complex(0, -0.5)}, {-0.0, 2}});
    EXPECT_EQ(io::dump(doc),
              "{\n"
              "  \"rows\": 2,\n"
              "  \"cols\": 2,\n"
              "  \"entries\": [\n"
              "    [1, 0],\n"
              "    [0, -0.5],\n"
              "    [0, 0],\n"
              "    [2, 0]\n"
              "  ]\n"
              "}\n");
}

TEST(dump, weights_layout) {
    EXPECT_EQ(io::dump(io::to_json(WeylWeights(2, {0.25, 0.25, 0.5, 0}))),
              "{\n  \"d\": 2,\n  \"order\": \"l-major\",\n  \"p\": [0.25, 0.25, 0.5, 0]\n}\n");
}

TEST(round_trip, matrices_are_bit_exact) {
    random::Rng rng(71);
    for (int trial = 0; trial < 20; trial++) {
        auto m = random::matrix(3, 4, rng);
        auto text = io::dump(io::to_json(m));
        auto back = io::matrix_from_json(io::parse(text));
        EXPECT_EQ(back, m);
        EXPECT_EQ(io::dump(io::to_json(back)), text);
    }
}

TEST(round_trip, tables_and_channels) {
    random::Rng rng(72);
    auto xi = decompose(random::matrix(3, 3, rng));
    auto xi_back = io::coefficients_from_json(io::parse(io::dump(io::to_json(xi))));
    EXPECT_EQ(xi_back.max_abs_difference(xi), 0);

    auto g = random::gamma(3, rng);
    auto g_back = io::gamma_from_json(io::parse(io::dump(io::to_json(g))));
    EXPECT_EQ(g_back.entries(), g.entries());

    auto ch = channel_from_dilation(g);
    auto ch_back = io::channel_from_json(io::parse(io::dump(io::to_json(ch))));
    ASSERT_EQ(ch_back.size(), ch.size());
    for (size_t m = 0; m < ch.size(); m++) {
        EXPECT_EQ(ch_back.kraus()[m], ch.kraus()[m]);
    }

    auto w = WeylWeights(2, {0.1, 0.2, 0.3, 0.4});
    EXPECT_EQ(io::weights_from_json(io::parse(io::dump(io::to_json(w)))).entries(), w.entries());
}

TEST(choi_json, carries_convention_and_dimension) {
    auto doc = io::to_json(choi_matrix(weyl_channel(WeylWeights::uniform(2))));
    EXPECT_EQ(doc["convention"], "column-stacking");
    EXPECT_EQ(doc["d"], 2);
    EXPECT_EQ(doc["rows"], 4);
    EXPECT_EQ(io::matrix_from_json(doc).rows(), 4u);
}

TEST(parse, reports_line_and_column) {
    auto msg = error_of([] { io::parse("{\n  \"rows\": 2,\n  \"cols\": ]\n}"); });
    EXPECT_NE(msg.find("line 3"), std::string::npos) << msg;
    EXPECT_NE(msg.find("column"), std::string::npos) << msg;
    EXPECT_THROW(io::parse(""), ParseError);
}

TEST(readers, name_the_bad_field) {
    auto bad_entry = io::parse(R"({"rows": 1, "cols": 2, "entries": [[1, 0], [1]]})");
    EXPECT_EQ(error_of([&] { io::matrix_from_json(bad_entry); }), "field 'entries[1]': expected [re, im], got [1]");

    auto short_entries = io::parse(R"({"rows": 2, "cols": 2, "entries": [[1, 0]]})");
    EXPECT_EQ(error_of([&] { io::matrix_from_json(short_entries); }), "field 'entries': expected 4 entries, got 1");

    auto missing = io::parse(R"({"rows": 2, "entries": []})");
    EXPECT_EQ(error_of([&] { io::matrix_from_json(missing); }), "missing field 'cols'");

    auto bad_rows = io::parse(R"({"rows": -1, "cols": 2, "entries": []})");
    EXPECT_THROW(io::matrix_from_json(bad_rows), ParseError);

    auto str_number = io::parse(R"({"rows": 1, "cols": 1, "entries": [["1", 0]]})");
    EXPECT_EQ(error_of([&] { io::matrix_from_json(str_number); }),
              "field 'entries[0][0]': expected a number, got \"1\"");

    auto bad_order = io::parse(R"({"d": 2, "order": "k-major", "xi": [[1,0],[0,0],[0,0],[0,0]]})");
    EXPECT_THROW(io::coefficients_from_json(bad_order), ParseError);

    EXPECT_EQ(error_of([] { io::matrix_from_json(io::parse("[1, 2]")); }), "expected a JSON object at top level");
}

TEST(readers, gamma_normalization_is_validation_not_parse) {
    auto doc = io::parse(R"({"d": 2, "gamma": [[1, 0], [1, 0], [0, 0], [0, 0]]})");
    // Column b=0 holds gamma_{0,0}=1 and gamma_{1,0}=0; column b=1 holds 1 and 0.
    EXPECT_NO_THROW(io::gamma_from_json(doc));
    auto heavy = io::parse(R"({"d": 2, "gamma": [[1, 0], [1, 0], [1, 0], [0, 0]]})");
    auto msg = error_of([&] { io::gamma_from_json(heavy); });
    EXPECT_NE(msg.find("column b=0"), std::string::npos) << msg;
    EXPECT_THROW(io::gamma_from_json(heavy), ValidationError);
}

TEST(readers, channel_kraus_shape) {
    auto doc = io::parse(R"({"d": 2, "kraus": [{"rows": 1, "cols": 1, "entries": [[1, 0]]}]})");
    EXPECT_EQ(error_of([&] { io::channel_from_json(doc); }), "kraus[0]: expected a 2x2 matrix");
}

TEST(readers, weights_domain) {
    auto doc = io::parse(R"({"d": 2, "p": [0.5, 0.5, 0.5, -0.5]})");
    EXPECT_THROW(io::weights_from_json(doc), DomainError);
}

TEST(files, missing_file) {
    EXPECT_THROW(io::read_text("/nonexistent/weylkit.json"), ParseError);
}
