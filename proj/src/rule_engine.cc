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

#include "tsow/rule_engine.h"

#include <algorithm>
#include <set>

#include "tsow/error.h"
#include "tsow/query_complexity.h"

namespace tsow {

std::string_view family_name(Family family) {
    switch (family) {
        case Family::kGrover:
            return "grover";
        case Family::kDeutschJozsa:
            return "deutsch-jozsa";
        case Family::kBernsteinVazirani:
            return "bernstein-vazirani";
        case Family::kSimon:
            return "simon";
        case Family::kCustom:
            return "custom";
    }
    return "custom";
}

Family parse_family(std::string_view text) {
    if (text == "grover") return Family::kGrover;
    if (text == "dj" || text == "deutsch-jozsa") return Family::kDeutschJozsa;
    if (text == "bv" || text == "bernstein-vazirani") return Family::kBernsteinVazirani;
    if (text == "simon") return Family::kSimon;
    throw Error(ErrorCode::kConfig, "unknown problem '" + std::string(text) +
                                        "' (expected grover, dj, bv, simon or --problem-file)");
}

Workload make_workload(Family family, int n) {
    switch (family) {
        case Family::kGrover:
            return {family, n, make_grover(n)};
        case Family::kDeutschJozsa:
            return {family, n, make_deutsch_jozsa(n)};
        case Family::kBernsteinVazirani:
            return {family, n, make_bernstein_vazirani(n)};
        case Family::kSimon:
            return {family, n, make_simon(n)};
        case Family::kCustom:
            break;
    }
    throw Error(ErrorCode::kConfig, "custom problems come from --problem-file");
}

Workload custom_workload(ProblemPtr problem) {
    const int n = problem->argument_width();
    return {Family::kCustom, n, std::move(problem)};
}

AlgorithmUnitary build_algorithm(const Workload &w) {
    switch (w.family) {
        case Family::kGrover:
            return w.n == 2 ? build_grover(2) : build_grover_long(w.n);
        case Family::kDeutschJozsa:
            return build_deutsch_jozsa(w.n);
        case Family::kBernsteinVazirani:
            return build_bernstein_vazirani(w.n);
        case Family::kSimon:
            if (w.n == 2) {
                return build_simon(2);
            }
            throw Error(ErrorCode::kModeNotSupported,
                        "simon n=" + std::to_string(w.n) + " runs only through the fixed-setting controller");
        case Family::kCustom:
            break;
    }
    throw Error(ErrorCode::kModeNotSupported, w.problem->name() + ": no quantum algorithm for custom problems");
}

PredictionReport predict(const Workload &w, const PredictOptions &options) {
    const OracleProblem &problem = *w.problem;
    PredictionReport report;
    report.problem = problem.name();
    report.n = w.n;
    report.mode = options.mode;
    report.near_even = options.pairs.near_even;
    report.exploratory = w.exploratory();
    if (report.exploratory) {
        report.notes.push_back("exploratory: no worked example to reproduce; the verdict is an output");
    }
    if (w.family == Family::kSimon) {
        report.notes.push_back("simon: the quantum side is a sampling controller, not a single certain run");
    }

    DecisionTreeSolver solver(w.problem, {.branch_and_bound = true, .memo_budget = options.memo_budget});
    for (SettingInstances &s : enumerate_all_instances(problem, options.mode, options.pairs)) {
        SettingPrediction sp;
        sp.setting = s.setting;
        if (s.no_valid_pair()) {
            report.no_valid_pair.push_back(s.setting);
        }
        for (CellEntry &entry : s.cells) {
            const int depth = solver.depth(entry.cell);
            sp.instances.push_back({std::move(entry.cell), std::move(entry.representative), depth});
            sp.prediction = std::max(sp.prediction.value_or(0), depth);
        }
        sp.agreement = std::all_of(sp.instances.begin(), sp.instances.end(),
                                   [&](const InstanceDepth &d) { return d.depth == sp.instances.front().depth; });
        if (sp.prediction) {
            report.global_prediction = std::max(report.global_prediction.value_or(0), *sp.prediction);
        }
        report.all_agree = report.all_agree && sp.agreement;
        report.settings.push_back(std::move(sp));
    }
    if (!report.no_valid_pair.empty()) {
        report.notes.push_back(std::to_string(report.no_valid_pair.size()) + " setting(s) without a valid pair");
    }
    if (!report.all_agree) {
        report.notes.push_back("instances of one setting disagree; the prediction is their maximum");
    }
    return report;
}

namespace {

std::string describe(const Error &e) { return e.what(); }

void simulate_simon(const Workload &w, const CompareOptions &options, ComparisonRow &row) {
    Rng rng(options.seed);
    int correct = 0;
    int max_runs = 0;
    for (const Bits &b : w.problem->sigma()) {
        const SimonRun run = run_simon(w.problem, b, rng);
        max_runs = std::max(max_runs, run.queries_used);
        correct += run.period == w.problem->solution(b) ? 1 : 0;
    }
    row.simulated_quantum_queries = max_runs;
    row.simulated_success = double(correct) / double(w.problem->sigma().size());
    row.annotations.push_back("simon: quantum count is the largest number of one-query runs over all settings (seed " +
                              std::to_string(options.seed) + ")");
    if (w.n == 2) {
        const RunResult r = run_relativized(w.problem, build_simon(2), CanonicalPolicy::kReport);
        if (!r.canonical) {
            row.annotations.push_back("OUTPUT_NOT_CANONICAL: a single run does not leave (b, s(b)) in B and A");
        }
    }
}

}  // namespace

ComparisonRow compare(const Workload &w, const CompareOptions &options) {
    ComparisonRow row;
    row.problem = w.problem->name();
    row.n = w.n;
    row.exploratory = w.exploratory();
    if (row.exploratory) {
        row.annotations.push_back("exploratory: the rule's verdict here is not checked against a worked example");
    }

    try {
        DecisionTreeSolver solver(w.problem, {.branch_and_bound = true, .memo_budget = options.classical_budget});
        row.classical_depth = solver.depth(SettingMask::full(w.problem->sigma().size()));
    } catch (const Error &e) {
        if (e.code() != ErrorCode::kSearchBudgetExceeded) throw;
        row.annotations.push_back("classical_depth: " + describe(e));
    }

    try {
        const PredictionReport p = predict(w, options.predict);
        row.predicted_quantum = p.global_prediction;
        if (!p.no_valid_pair.empty()) {
            row.annotations.push_back("predicted_quantum: " + std::to_string(p.no_valid_pair.size()) +
                                      " setting(s) without a valid pair");
        }
        if (!p.all_agree) {
            row.annotations.push_back("predicted_quantum: instances disagree; maximum reported");
        }
    } catch (const Error &e) {
        const ErrorCode c = e.code();
        if (c != ErrorCode::kSizeLimit && c != ErrorCode::kModeNotSupported && c != ErrorCode::kSearchBudgetExceeded) {
            throw;
        }
        row.annotations.push_back("predicted_quantum: " + describe(e));
    }

    if (w.family == Family::kSimon) {
        simulate_simon(w, options, row);
        return row;
    }
    try {
        const RunResult r = run_relativized(w.problem, build_algorithm(w), CanonicalPolicy::kReport);
        row.simulated_quantum_queries = r.queries_used;
        row.simulated_success = r.min_success();
        if (!r.canonical) {
            row.annotations.push_back("OUTPUT_NOT_CANONICAL: measured (B, A) distribution differs from (b, s(b))");
        }
    } catch (const Error &e) {
        if (e.code() != ErrorCode::kSizeLimit && e.code() != ErrorCode::kModeNotSupported) throw;
        row.annotations.push_back("simulated_quantum_queries: " + describe(e));
    }
    return row;
}

std::vector<Workload> default_workloads() {
    return {make_workload(Family::kGrover, 2),            make_workload(Family::kGrover, 4),
            make_workload(Family::kGrover, 6),            make_workload(Family::kDeutschJozsa, 1),
            make_workload(Family::kDeutschJozsa, 2),      make_workload(Family::kDeutschJozsa, 3),
            make_workload(Family::kBernsteinVazirani, 2), make_workload(Family::kBernsteinVazirani, 4),
            make_workload(Family::kSimon, 2)};
}

namespace {

/// Function value stored in table entry `entry` of a Simon setting.
uint64_t entry_value(const Bits &table, int n, int entry) {
    uint64_t v = 0;
    for (int k = 0; k < n; ++k) {
        v = (v << 1) | static_cast<uint64_t>(table.at(entry * n + k));
    }
    return v;
}

std::vector<int> entry_positions(const std::vector<int> &entries, int n) {
    std::vector<int> out;
    for (int e : entries) {
        for (int k = 0; k < n; ++k) {
            out.push_back(e * n + k);
        }
    }
    return out;
}

bool has_repeat(const Bits &table, int n, const std::vector<int> &entries) {
    std::set<uint64_t> seen;
    for (int e : entries) {
        if (!seen.insert(entry_value(table, n, e)).second) {
            return true;
        }
    }
    return false;
}

}  // namespace

SimonProbeReport simon_advanced_knowledge_probe(int n) {
    if (n != 2) {
        throw Error(ErrorCode::kSizeLimit, "the simon probe runs at n=2 only");
    }
    const Workload w = make_workload(Family::kSimon, n);
    const OracleProblem &problem = *w.problem;
    const int entries = 1 << n;
    const int width = problem.setting_width();

    // Entry-aligned halves: half the table entries against the rest.
    std::vector<std::pair<std::vector<int>, std::vector<int>>> halves;
    for (uint32_t m = 0; m < (1u << entries); ++m) {
        if (__builtin_popcount(m) != entries / 2) continue;
        std::vector<int> first, second;
        for (int e = 0; e < entries; ++e) {
            ((m >> (entries - 1 - e)) & 1 ? first : second).push_back(e);
        }
        halves.emplace_back(first, second);
    }
    std::sort(halves.begin(), halves.end());

    SimonProbeReport report;
    report.n = n;
    DecisionTreeSolver solver(w.problem);
    for (SettingInstances &s : enumerate_all_instances(problem, MeasurementMode::kCoordinate)) {
        ProbeSetting ps;
        ps.setting = s.setting;
        ps.period = problem.solution(s.setting);
        for (CellEntry &entry : s.cells) {
            const SettingMask mask = SettingMask::of(problem, entry.cell);
            ProbeCell cell{std::move(entry.cell), std::move(entry.representative), solver.depth(mask),
                           dt_depth_plain(problem, mask)};
            report.depths_match_plain = report.depths_match_plain && cell.depth == cell.plain_depth;
            ps.has_depth_one = ps.has_depth_one || cell.depth == 1;
            ps.cells.push_back(std::move(cell));
        }
        for (const auto &[first, second] : halves) {
            AlignedHalf half{coordinate_pair(width, entry_positions(first, n), entry_positions(second, n))};
            half.repeated_value = has_repeat(s.setting, n, first) || has_repeat(s.setting, n, second);
            half.valid = is_valid_pair(problem, s.setting, half.pair).valid();
            ++report.aligned_checked;
            report.aligned_with_repeat += half.repeated_value ? 1 : 0;
            report.aligned_repeat_accepted += half.repeated_value && half.valid ? 1 : 0;
            report.aligned_clean_rejected += !half.repeated_value && !half.valid ? 1 : 0;
            ps.aligned.push_back(std::move(half));
        }
        report.settings_with_depth_one += ps.has_depth_one ? 1 : 0;
        report.settings.push_back(std::move(ps));
    }
    report.depth_one_everywhere = report.settings_with_depth_one == static_cast<int>(report.settings.size());
    return report;
}

}  // namespace tsow
