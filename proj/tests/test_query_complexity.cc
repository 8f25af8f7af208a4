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

#include "oracles.h"
#include "tsow/error.h"
#include "tsow/query_complexity.h"
#include "tsow/verification.h"

namespace tsow {
namespace {

ErrorCode code_of(auto &&fn) {
    try {
        fn();
    } catch (const Error &e) {
        return e.code();
    }
    ADD_FAILURE() << "no error thrown";
    return ErrorCode::kConfig;
}

std::set<size_t> index_set(const OracleProblem &p, const SettingSet &s) {
    std::set<size_t> out;
    for (const Bits &b : s) out.insert(p.setting_index(b));
    return out;
}

TEST(SettingMask, BasicOps) {
    SettingMask m(70);
    m.set(3);
    m.set(69);
    EXPECT_EQ(m.count(), 2u);
    EXPECT_TRUE(m.test(69));
    EXPECT_EQ(m.indices(), (std::vector<size_t>{3, 69}));
    EXPECT_TRUE(m.is_subset_of(SettingMask::full(70)));
    EXPECT_TRUE((m & SettingMask(70)).empty());
    EXPECT_EQ(code_of([] { SettingMask::of(*make_grover(2), SettingSet{"011"}); }), ErrorCode::kInvalidSubset);
}

TEST(MemoTable, WriteOnce) {
    MemoTable memo;
    SettingMask k(4);
    k.set(1);
    memo.insert(k, 2);
    memo.insert(k, 2);
    EXPECT_EQ(memo.find(k), 2);
    EXPECT_EQ(code_of([&] { memo.insert(k, 3); }), ErrorCode::kUndetermined);
}

TEST(DecisionTree, GroverNeedsAllButOne) {
    for (int n = 1; n <= 4; ++n) {
        ProblemPtr p = make_grover(n);
        const int expected = (1 << n) - 1;
        EXPECT_EQ(dt_depth(p, p->sigma()), expected) << "N=" << (1 << n);
        EXPECT_EQ(oracle::DtOracle(*p).depth_of_all(), expected);
    }
}

TEST(DecisionTree, KnownFullDepths) {
    EXPECT_EQ(dt_depth(make_deutsch_jozsa(1), make_deutsch_jozsa(1)->sigma()), 2);
    EXPECT_EQ(dt_depth(make_deutsch_jozsa(2), make_deutsch_jozsa(2)->sigma()), 3);
    EXPECT_EQ(dt_depth(make_deutsch_jozsa(3), make_deutsch_jozsa(3)->sigma()), 5);
    EXPECT_EQ(dt_depth(make_bernstein_vazirani(3), make_bernstein_vazirani(3)->sigma()), 3);
    EXPECT_EQ(dt_depth(make_simon(2), make_simon(2)->sigma()), 3);
}

TEST(DecisionTree, MatchesIndependentOracle) {
    for (ProblemPtr p : {make_deutsch_jozsa(3), make_simon(2), make_bernstein_vazirani(4)}) {
        EXPECT_EQ(dt_depth(p, p->sigma()), oracle::DtOracle(*p).depth_of_all()) << p->name();
    }
}

TEST(DecisionTree, AdvancedCellsOfTheWorkedExamples) {
    ProblemPtr g = make_grover(2);
    EXPECT_EQ(dt_depth(g, SettingSet{"01", "11"}), 1);
    EXPECT_EQ(dt_depth(g, SettingSet{"01"}), 0);
    ProblemPtr dj = make_deutsch_jozsa(2);
    EXPECT_EQ(dt_depth(dj, SettingSet{"0000", "0011"}), 1);
    EXPECT_EQ(dt_depth(dj, SettingSet{"0011", "1111"}), 1);
    EXPECT_EQ(dt_depth(restrict_problem(dj, SettingSet{"0000", "0011", "1111"})), 2);
}

// Every subset of dj(2) and grover(2), against the std::set oracle.
TEST(DecisionTree, AllSubsetsAgreeWithOracle) {
    for (ProblemPtr p : {make_grover(2), make_deutsch_jozsa(2)}) {
        oracle::DtOracle ref(*p);
        DecisionTreeSolver solver(p);
        const size_t count = p->sigma().size();
        for (uint64_t bits = 1; bits < (uint64_t{1} << count); ++bits) {
            SettingMask m(count);
            std::set<size_t> s;
            for (size_t i = 0; i < count; ++i) {
                if ((bits >> i) & 1) {
                    m.set(i);
                    s.insert(i);
                }
            }
            EXPECT_EQ(solver.depth(m), ref.depth(s));
        }
    }
}

TEST(DecisionTree, AuditOnSmallProblems) {
    for (ProblemPtr p : {make_grover(2), make_deutsch_jozsa(2)}) {
        const DtAudit audit = audit_decision_trees(p);
        EXPECT_EQ(audit.subsets, (1 << p->sigma().size()) - 1);
        EXPECT_TRUE(audit.memo_matches_plain);
        EXPECT_TRUE(audit.monotone);
        EXPECT_TRUE(audit.replay_sound);
    }
    EXPECT_EQ(code_of([] { audit_decision_trees(make_grover(4)); }), ErrorCode::kSizeLimit);
}

TEST(DecisionTree, PruningDoesNotChangeDepth) {
    ProblemPtr p = make_deutsch_jozsa(3);
    DecisionTreeSolver pruned(p, {.branch_and_bound = true});
    DecisionTreeSolver exhaustive(p, {.branch_and_bound = false});
    EXPECT_EQ(pruned.depth(p->sigma()), exhaustive.depth(p->sigma()));
}

TEST(DecisionTree, ReplayFollowsThePlan) {
    ProblemPtr p = make_grover(3);
    const QueryPlan plan = dt_strategy(p, p->sigma());
    EXPECT_EQ(plan.depth, 7);
    int worst = 0;
    for (const Bits &b : p->sigma()) {
        const ReplayOutcome r = replay(plan, *p, b);
        EXPECT_EQ(r.solution, b);
        worst = std::max(worst, r.queries);
    }
    EXPECT_EQ(worst, 7);
    const auto j = plan_to_json(plan);
    EXPECT_EQ(j["depth"], 7);
    EXPECT_FALSE(plan_to_text(plan).empty());
}

TEST(DecisionTree, Errors) {
    ProblemPtr p = make_grover(2);
    DecisionTreeSolver solver(p);
    EXPECT_EQ(code_of([&] { solver.depth(SettingMask(4)); }), ErrorCode::kInvalidSubset);

    // Two settings with different solutions and identical answers.
    OracleProblem::Tables t;
    t.name = "blind";
    t.sigma = SettingSet{"0", "1"};
    t.domain = {Bits::parse("0")};
    t.answer_width = 1;
    t.answer = [](size_t, size_t) { return uint64_t{0}; };
    t.solutions = {Bits::parse("0"), Bits::parse("1")};
    ProblemPtr blind = std::make_shared<const OracleProblem>(std::move(t));
    EXPECT_EQ(code_of([&] { dt_depth(blind, blind->sigma()); }), ErrorCode::kUndetermined);

    ProblemPtr big = make_grover(6);
    DecisionTreeSolver capped(big, {.memo_budget = 1000});
    EXPECT_EQ(code_of([&] { capped.depth(big->sigma()); }), ErrorCode::kSearchBudgetExceeded);
}

TEST(DecisionTree, SingleSolution) {
    ProblemPtr dj = make_deutsch_jozsa(2);
    EXPECT_TRUE(single_solution(*dj, SettingMask::of(*dj, SettingSet{"0011", "0101"})));
    EXPECT_FALSE(single_solution(*dj, SettingMask::of(*dj, SettingSet{"0000", "0101"})));
    EXPECT_EQ(dt_depth_plain(*dj, SettingMask::of(*dj, SettingSet{"0000", "0101"})),
              oracle::DtOracle(*dj).depth(index_set(*dj, SettingSet{"0000", "0101"})));
}

}  // namespace
}  // namespace tsow
