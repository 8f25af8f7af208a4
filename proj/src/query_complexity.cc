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

#include "tsow/query_complexity.h"

#include <algorithm>
#include <climits>
#include <sstream>

#include "tsow/error.h"

namespace tsow {

SettingMask SettingMask::full(size_t universe) {
    SettingMask m(universe);
    for (size_t i = 0; i < universe; ++i) {
        m.set(i);
    }
    return m;
}

SettingMask SettingMask::of(const OracleProblem &problem, const SettingSet &subset) {
    SettingMask m(problem.sigma().size());
    for (const Bits &b : subset) {
        m.set(problem.setting_index(b));
    }
    return m;
}

size_t SettingMask::count() const {
    size_t total = 0;
    for (uint64_t w : words_) {
        total += static_cast<size_t>(__builtin_popcountll(w));
    }
    return total;
}

bool SettingMask::empty() const {
    return std::all_of(words_.begin(), words_.end(), [](uint64_t w) { return w == 0; });
}

bool SettingMask::is_subset_of(const SettingMask &other) const {
    for (size_t i = 0; i < words_.size(); ++i) {
        if (words_[i] & ~other.words_[i]) {
            return false;
        }
    }
    return true;
}

SettingMask SettingMask::operator&(const SettingMask &other) const {
    SettingMask out(universe_);
    for (size_t i = 0; i < words_.size(); ++i) {
        out.words_[i] = words_[i] & other.words_[i];
    }
    return out;
}

std::vector<size_t> SettingMask::indices() const {
    std::vector<size_t> out;
    for (size_t w = 0; w < words_.size(); ++w) {
        uint64_t bits = words_[w];
        while (bits) {
            out.push_back(w * 64 + static_cast<size_t>(__builtin_ctzll(bits)));
            bits &= bits - 1;
        }
    }
    return out;
}

SettingSet SettingMask::to_set(const OracleProblem &problem) const {
    std::vector<Bits> members;
    for (size_t i : indices()) {
        members.push_back(problem.sigma()[i]);
    }
    return SettingSet(std::move(members));
}

size_t SettingMask::hash() const {
    uint64_t h = 0x9e3779b97f4a7c15ULL ^ universe_;
    for (uint64_t w : words_) {
        h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<size_t>(h);
}

std::optional<int> MemoTable::find(const SettingMask &key) const {
    auto it = table_.find(key);
    if (it == table_.end()) {
        return std::nullopt;
    }
    return it->second;
}

void MemoTable::insert(const SettingMask &key, int depth) {
    auto [it, inserted] = table_.emplace(key, depth);
    if (!inserted && it->second != depth) {
        throw Error(ErrorCode::kUndetermined, "memo entry rewritten with a different depth");
    }
}

bool single_solution(const OracleProblem &problem, const SettingMask &subset) {
    std::optional<Bits> first;
    for (size_t i : subset.indices()) {
        const Bits &s = problem.solution_at(i);
        if (!first) {
            first = s;
        } else if (s != *first) {
            return false;
        }
    }
    return true;
}

namespace {

using Classes = std::vector<std::pair<uint64_t, SettingMask>>;

/// Partition of `subset` by the answer to argument `ai`, ascending by answer.
Classes split(const OracleProblem &problem, const SettingMask &subset, size_t ai) {
    Classes classes;
    for (size_t si : subset.indices()) {
        uint64_t answer = problem.answer_at(si, ai);
        auto it = std::find_if(classes.begin(), classes.end(), [&](const auto &c) { return c.first == answer; });
        if (it == classes.end()) {
            classes.emplace_back(answer, SettingMask(subset.universe()));
            it = classes.end() - 1;
        }
        it->second.set(si);
    }
    std::sort(classes.begin(), classes.end(), [](const auto &x, const auto &y) { return x.first < y.first; });
    return classes;
}

void require_nonempty(const SettingMask &subset) {
    if (subset.empty()) {
        throw Error(ErrorCode::kInvalidSubset, "decision-tree depth of an empty subset");
    }
}

[[noreturn]] void undetermined(const OracleProblem &problem, const SettingMask &subset) {
    throw Error(ErrorCode::kUndetermined, problem.name() + ": no argument separates " +
                                              subset.to_set(problem).str() + " although solutions differ");
}

}  // namespace

DecisionTreeSolver::DecisionTreeSolver(ProblemPtr problem, DtOptions options)
    : problem_(std::move(problem)), options_(options) {}

int DecisionTreeSolver::depth(const SettingMask &subset) {
    require_nonempty(subset);
    return solve(subset);
}

int DecisionTreeSolver::depth(const SettingSet &subset) { return depth(SettingMask::of(*problem_, subset)); }

int DecisionTreeSolver::solve(const SettingMask &subset) {
    if (single_solution(*problem_, subset)) {
        return 0;
    }
    if (auto hit = memo_.find(subset)) {
        return *hit;
    }
    int best = INT_MAX;
    for (size_t ai = 0; ai < problem_->domain().size(); ++ai) {
        Classes classes = split(*problem_, subset, ai);
        if (classes.size() < 2) {
            continue;
        }
        // Largest classes first: they dominate the worst case, so pruning
        // triggers sooner.
        std::stable_sort(classes.begin(), classes.end(),
                         [](const auto &x, const auto &y) { return x.second.count() > y.second.count(); });
        int worst = 0;
        bool abandoned = false;
        for (const auto &[answer, cls] : classes) {
            if (options_.branch_and_bound && 1 + worst >= best) {
                abandoned = true;
                break;
            }
            worst = std::max(worst, solve(cls));
        }
        if (!abandoned) {
            best = std::min(best, 1 + worst);
        }
        if (options_.branch_and_bound && best == 1) {
            break;
        }
    }
    if (best == INT_MAX) {
        undetermined(*problem_, subset);
    }
    if (memo_.size() >= options_.memo_budget) {
        throw Error(ErrorCode::kSearchBudgetExceeded, problem_->name() + ": decision-tree memo exceeded " +
                                                          std::to_string(options_.memo_budget) + " entries");
    }
    memo_.insert(subset, best);
    return best;
}

QueryPlan DecisionTreeSolver::strategy(const SettingMask &subset) {
    QueryPlan plan;
    plan.depth = depth(subset);
    plan.root = build(subset);
    return plan;
}

QueryPlan DecisionTreeSolver::strategy(const SettingSet &subset) { return strategy(SettingMask::of(*problem_, subset)); }

QueryPlan::Node DecisionTreeSolver::build(const SettingMask &subset) {
    QueryPlan::Node node;
    if (single_solution(*problem_, subset)) {
        node.solution = problem_->solution_at(subset.indices().front());
        return node;
    }
    const int target = solve(subset);
    for (size_t ai = 0; ai < problem_->domain().size(); ++ai) {
        Classes classes = split(*problem_, subset, ai);
        if (classes.size() < 2) {
            continue;
        }
        int worst = 0;
        for (const auto &c : classes) {
            worst = std::max(worst, solve(c.second));
        }
        if (1 + worst != target) {
            continue;
        }
        node.query = problem_->domain()[ai];
        for (const auto &[answer, cls] : classes) {
            node.answers.emplace_back(answer, problem_->answer_width());
            node.children.push_back(build(cls));
        }
        return node;
    }
    undetermined(*problem_, subset);
}

int dt_depth(const ProblemPtr &problem, const SettingSet &subset) {
    DecisionTreeSolver solver(problem);
    return solver.depth(subset);
}

int dt_depth(const ReducedProblem &reduced) { return dt_depth(reduced.base, reduced.subset); }

QueryPlan dt_strategy(const ProblemPtr &problem, const SettingSet &subset) {
    DecisionTreeSolver solver(problem);
    return solver.strategy(subset);
}

int dt_depth_plain(const OracleProblem &problem, const SettingMask &subset) {
    require_nonempty(subset);
    if (single_solution(problem, subset)) {
        return 0;
    }
    int best = INT_MAX;
    for (size_t ai = 0; ai < problem.domain().size(); ++ai) {
        Classes classes = split(problem, subset, ai);
        if (classes.size() < 2) {
            continue;
        }
        int worst = 0;
        for (const auto &c : classes) {
            worst = std::max(worst, dt_depth_plain(problem, c.second));
        }
        best = std::min(best, 1 + worst);
    }
    if (best == INT_MAX) {
        undetermined(problem, subset);
    }
    return best;
}

ReplayOutcome replay(const QueryPlan &plan, const OracleProblem &problem, const Bits &setting) {
    ReplayOutcome out;
    const QueryPlan::Node *node = &plan.root;
    while (node->query) {
        Bits answer = problem.answer(setting, *node->query);
        ++out.queries;
        auto it = std::find(node->answers.begin(), node->answers.end(), answer);
        if (it == node->answers.end()) {
            throw Error(ErrorCode::kUndetermined, "plan has no branch for answer " + answer.str() + " of setting " +
                                                      setting.str());
        }
        node = &node->children[static_cast<size_t>(it - node->answers.begin())];
    }
    out.solution = *node->solution;
    return out;
}

namespace {

void text_node(std::ostringstream &out, const QueryPlan::Node &node, int indent) {
    const std::string pad(static_cast<size_t>(indent) * 2, ' ');
    if (!node.query) {
        out << pad << "solution " << node.solution->str() << "\n";
        return;
    }
    out << pad << "query " << node.query->str() << "\n";
    for (size_t i = 0; i < node.children.size(); ++i) {
        out << pad << "  answer " << node.answers[i].str() << ":\n";
        text_node(out, node.children[i], indent + 2);
    }
}

nlohmann::ordered_json json_node(const QueryPlan::Node &node) {
    nlohmann::ordered_json j;
    if (!node.query) {
        j["solution"] = node.solution->str();
        return j;
    }
    j["query"] = node.query->str();
    nlohmann::ordered_json branches = nlohmann::ordered_json::array();
    for (size_t i = 0; i < node.children.size(); ++i) {
        branches.push_back({{"answer", node.answers[i].str()}, {"node", json_node(node.children[i])}});
    }
    j["branches"] = branches;
    return j;
}

}  // namespace

std::string plan_to_text(const QueryPlan &plan) {
    std::ostringstream out;
    out << "depth " << plan.depth << "\n";
    text_node(out, plan.root, 0);
    return out.str();
}

nlohmann::ordered_json plan_to_json(const QueryPlan &plan) {
    return {{"depth", plan.depth}, {"root", json_node(plan.root)}};
}

}  // namespace tsow
