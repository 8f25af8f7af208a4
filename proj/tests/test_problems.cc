// Copyright 2026 The tsow Authors
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

#include <gtest/gtest.h>

#include <optional>
#include <set>

#include "tsow/error.h"
#include "tsow/oracle_problem.h"
#include "tsow/problem_io.h"

namespace tsow {
namespace {

using nlohmann::json;

std::optional<Error> error_of(auto &&fn) {
    try {
        fn();
    } catch (const Error &e) {
        return e;
    }
    return std::nullopt;
}

json xor2_doc() {
    return json::parse(R"({
      "name": "xor2",
      "setting_width": 2,
      "settings": ["00", "01", "10", "11"],
      "domain": ["0", "1"],
      "answers": {"00": ["0", "0"], "01": ["0", "1"], "10": ["1", "0"], "0x3": ["1", "1"]},
      "solutions": {"00": "0", "01": "1", "10": "1", "11": "0"},
      "encoding": "table"
    })");
}

TEST(Builtins, GroverIsIndicator) {
    ProblemPtr p = make_grover(2);
    EXPECT_EQ(p->name(), "grover");
    EXPECT_EQ(p->sigma().size(), 4u);
    for (const Bits &b : p->sigma()) {
        EXPECT_EQ(p->solution(b), b);
        for (const Bits &a : p->domain()) {
            EXPECT_EQ(p->answer(b, a).value, a == b ? 1u : 0u);
        }
    }
}

TEST(Builtins, DeutschJozsaPromise) {
    ProblemPtr p = make_deutsch_jozsa(2);
    ASSERT_EQ(p->sigma().size(), 8u);
    EXPECT_EQ(p->encoding(), Encoding::kTable);
    int constant = 0;
    for (const Bits &b : p->sigma()) {
        const int ones = __builtin_popcountll(b.value);
        ASSERT_TRUE(ones == 0 || ones == 4 || ones == 2) << b.str();
        const bool is_constant = ones != 2;
        constant += is_constant;
        EXPECT_EQ(p->solution(b).value, is_constant ? 0u : 1u);
        for (size_t a = 0; a < 4; ++a) {
            EXPECT_EQ(p->answer_at(p->setting_index(b), a), b.at(static_cast<int>(a)) ? 1u : 0u);
        }
    }
    EXPECT_EQ(constant, 2);
    EXPECT_EQ(make_deutsch_jozsa(3)->sigma().size(), 72u);
}

TEST(Builtins, BernsteinVaziraniIsInnerProduct) {
    ProblemPtr p = make_bernstein_vazirani(3);
    for (const Bits &b : p->sigma()) {
        for (const Bits &a : p->domain()) {
            EXPECT_EQ(p->answer(b, a).value, static_cast<uint64_t>(parity(a.value & b.value)));
        }
    }
}

// Brute force over all 256 tables {0,1}^2 -> {0,1}^2.
TEST(Builtins, SimonMatchesBruteForce) {
    ProblemPtr p = make_simon(2);
    std::set<uint64_t> expected;
    for (uint64_t t = 0; t < 256; ++t) {
        auto f = [&](uint64_t x) { return (t >> (2 * (3 - x))) & 3; };
        for (uint64_t period = 1; period < 4; ++period) {
            bool ok = true;
            for (uint64_t x = 0; x < 4; ++x) {
                for (uint64_t y = 0; y < 4; ++y) {
                    ok = ok && ((f(x) == f(y)) == (x == y || (x ^ y) == period));
                }
            }
            if (ok) {
                expected.insert(t);
                EXPECT_EQ(p->solution(Bits(t, 8)).value, period);
            }
        }
    }
    ASSERT_EQ(p->sigma().size(), expected.size());
    EXPECT_EQ(expected.size(), 36u);
    EXPECT_EQ(make_simon(3)->sigma().size(), 11760u);
}

TEST(Builtins, SizeLimits) {
    EXPECT_EQ(error_of([] { make_grover(13); })->code(), ErrorCode::kSizeLimit);
    EXPECT_EQ(error_of([] { make_grover(0); })->code(), ErrorCode::kSizeLimit);
    EXPECT_EQ(error_of([] { make_deutsch_jozsa(4); })->code(), ErrorCode::kSizeLimit);
    EXPECT_EQ(error_of([] { make_bernstein_vazirani(11); })->code(), ErrorCode::kSizeLimit);
    EXPECT_EQ(error_of([] { make_simon(4); })->code(), ErrorCode::kSizeLimit);
}

TEST(Builtins, LookupErrors) {
    ProblemPtr p = make_grover(2);
    EXPECT_EQ(error_of([&] { p->answer(Bits::parse("011"), Bits::parse("01")); })->code(),
              ErrorCode::kInvalidSubset);
    EXPECT_EQ(error_of([&] { p->answer(Bits::parse("01"), Bits::parse("111")); })->code(), ErrorCode::kConfig);
}

TEST(Restrict, KeepsMapsOnSubset) {
    ProblemPtr p = make_grover(2);
    ReducedProblem r = restrict_problem(p, SettingSet{"01", "11"});
    ProblemPtr q = r.as_problem();
    EXPECT_EQ(q->sigma(), (SettingSet{"01", "11"}));
    for (const Bits &b : q->sigma()) {
        for (const Bits &a : q->domain()) {
            EXPECT_EQ(q->answer(b, a), p->answer(b, a));
        }
    }
    EXPECT_EQ(error_of([&] { restrict_problem(p, SettingSet{}); })->code(), ErrorCode::kInvalidSubset);
    EXPECT_EQ(error_of([&] { restrict_problem(p, SettingSet{"011"}); })->code(), ErrorCode::kInvalidSubset);
}

TEST(ProblemIo, LoadsHexKeysAndTables) {
    ProblemPtr p = problem_from_json(xor2_doc());
    EXPECT_EQ(p->name(), "xor2");
    EXPECT_EQ(p->sigma().size(), 4u);
    EXPECT_EQ(p->answer(Bits::parse("11"), Bits::parse("1")).value, 1u);
    EXPECT_EQ(p->solution(Bits::parse("10")).value, 1u);
}

TEST(ProblemIo, RoundTripsThroughJson) {
    for (ProblemPtr p : {make_grover(2), make_deutsch_jozsa(2), problem_from_json(xor2_doc())}) {
        ProblemPtr q = problem_from_json(problem_to_json(*p));
        ASSERT_EQ(q->sigma(), p->sigma());
        EXPECT_EQ(q->encoding(), p->encoding());
        for (size_t i = 0; i < p->sigma().size(); ++i) {
            EXPECT_EQ(q->solution_at(i), p->solution_at(i));
            for (size_t a = 0; a < p->domain().size(); ++a) {
                EXPECT_EQ(q->answer_at(i, a), p->answer_at(i, a));
            }
        }
    }
}

struct BadDoc {
    const char *key;
    json patch;
};

TEST(ProblemIo, ErrorsNameTheOffendingKey) {
    const std::vector<BadDoc> cases = {
        {"setting_width", {{"setting_width", 0}}},
        {"encoding", {{"encoding", "dense"}}},
        {"settings", {{"settings", json::array()}}},
        {"domain", {{"domain", json::array()}}},
        {"answers[\"01\"]", {{"answers", {{"00", {"0", "0"}}, {"01", {"0"}}}}}},
        {"solutions[\"10\"]", {{"solutions", {{"10", nullptr}}}}},
        {"not the concatenated table", {{"answers", {{"0x3", {"1", "0"}}}}}},
        {"duplicate setting key", {{"answers", {{"11", {"1", "1"}}}}}},
    };
    for (const BadDoc &c : cases) {
        json doc = xor2_doc();
        doc.merge_patch(c.patch);
        auto e = error_of([&] { problem_from_json(doc); });
        ASSERT_TRUE(e.has_value()) << c.key;
        EXPECT_EQ(e->code(), ErrorCode::kInvalidProblem) << c.key;
        EXPECT_NE(e->detail().find(c.key), std::string::npos) << e->detail();
    }
    json missing = xor2_doc();
    missing.erase("name");
    EXPECT_NE(error_of([&] { problem_from_json(missing); })->detail().find("name"), std::string::npos);
}

TEST(ProblemIo, FileErrors) {
    EXPECT_EQ(error_of([] { load_problem_file("/nonexistent/problem.json"); })->code(), ErrorCode::kConfig);
}

}  // namespace
}  // namespace tsow
