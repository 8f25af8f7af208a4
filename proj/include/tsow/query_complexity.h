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

#ifndef TSOW_QUERY_COMPLEXITY_H
#define TSOW_QUERY_COMPLEXITY_H

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "json.hpp"
#include "tsow/oracle_problem.h"

namespace tsow {

/// Subset of a problem's sigma as a bitset over the canonical ordering.
class SettingMask {
   public:
    SettingMask() = default;
    explicit SettingMask(size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}
    static SettingMask full(size_t universe);
    /// Throws kInvalidSubset if a member is not in sigma.
    static SettingMask of(const OracleProblem &problem, const SettingSet &subset);

    void set(size_t i) { words_[i / 64] |= uint64_t{1} << (i % 64); }
    bool test(size_t i) const { return (words_[i / 64] >> (i % 64)) & 1; }
    size_t count() const;
    bool empty() const;
    size_t universe() const { return universe_; }
    bool is_subset_of(const SettingMask &other) const;
    SettingMask operator&(const SettingMask &other) const;
    std::vector<size_t> indices() const;
    SettingSet to_set(const OracleProblem &problem) const;

    bool operator==(const SettingMask &) const = default;
    size_t hash() const;

   private:
    size_t universe_ = 0;
    std::vector<uint64_t> words_;
};

struct SettingMaskHash {
    size_t operator()(const SettingMask &m) const { return m.hash(); }
};

/// Canonical subset -> decision-tree depth. Entries are write-once; inserting
/// an existing key with the same depth is a no-op.
class MemoTable {
   public:
    std::optional<int> find(const SettingMask &key) const;
    /// Throws kUndetermined (an internal contract breach) if the key already
    /// holds a different depth.
    void insert(const SettingMask &key, int depth);
    size_t size() const { return table_.size(); }

   private:
    std::unordered_map<SettingMask, int, SettingMaskHash> table_;
};

/// Witness tree for a decision-tree depth: internal nodes query an argument
/// and branch on the answer; leaves carry the determined solution.
struct QueryPlan {
    struct Node {
        std::optional<Bits> query;     // empty at leaves
        std::optional<Bits> solution;  // set at leaves
        std::vector<Bits> answers;     // branch labels, ascending
        std::vector<Node> children;
    };
    Node root;
    int depth = 0;
};

struct DtOptions {
    /// Abandon an argument once its running worst case can't beat the
    /// incumbent. Result-invariant.
    bool branch_and_bound = true;
    /// Memo entries allowed before kSearchBudgetExceeded.
    size_t memo_budget = 4'000'000;
};

/// Worst-case deterministic query complexity under the promise b in subset:
/// depth(S) = 0 if S has one solution, otherwise the minimum over arguments
/// that split S of 1 + max over the answer classes.
class DecisionTreeSolver {
   public:
    explicit DecisionTreeSolver(ProblemPtr problem, DtOptions options = {});

    /// kInvalidSubset on empty subsets, kUndetermined if no argument splits
    /// an unresolved subset.
    int depth(const SettingMask &subset);
    int depth(const SettingSet &subset);
    QueryPlan strategy(const SettingMask &subset);
    QueryPlan strategy(const SettingSet &subset);

    const OracleProblem &problem() const { return *problem_; }
    const MemoTable &memo() const { return memo_; }

   private:
    int solve(const SettingMask &subset);
    QueryPlan::Node build(const SettingMask &subset);

    ProblemPtr problem_;
    DtOptions options_;
    MemoTable memo_;
};

int dt_depth(const ProblemPtr &problem, const SettingSet &subset);
int dt_depth(const ReducedProblem &reduced);
QueryPlan dt_strategy(const ProblemPtr &problem, const SettingSet &subset);

/// Plain minimax: no memo, no pruning. Exponential; the test oracle for the
/// memoized solver.
int dt_depth_plain(const OracleProblem &problem, const SettingMask &subset);

/// Whether every setting in `subset` shares one solution.
bool single_solution(const OracleProblem &problem, const SettingMask &subset);

struct ReplayOutcome {
    Bits solution;
    int queries = 0;
};

/// Runs the plan against the oracle for `setting`.
ReplayOutcome replay(const QueryPlan &plan, const OracleProblem &problem, const Bits &setting);

std::string plan_to_text(const QueryPlan &plan);
nlohmann::ordered_json plan_to_json(const QueryPlan &plan);

}  // namespace tsow

#endif
