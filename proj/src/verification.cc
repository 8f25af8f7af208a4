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

#include "tsow/verification.h"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "tsow/error.h"
#include "tsow/query_complexity.h"

namespace tsow {
namespace {

std::string fmt(const char *format, double value) {
    char buf[96];
    std::snprintf(buf, sizeof buf, format, value);
    return buf;
}

CheckResult check(std::string name, bool passed, std::string detail) {
    return {std::move(name), passed, false, std::move(detail)};
}

CheckResult skipped(std::string name, std::string detail) { return {std::move(name), true, true, std::move(detail)}; }

bool solution_is_setting(const OracleProblem &problem, const RegisterLayout &layout) {
    if (layout.width(Register::kA) != problem.setting_width()) {
        return false;
    }
    for (size_t i = 0; i < problem.sigma().size(); ++i) {
        if (problem.solution_at(i).value != problem.sigma()[i].value) {
            return false;
        }
    }
    return true;
}

}  // namespace

StateVector random_state(const RegisterLayout &layout, Rng &rng) {
    std::vector<Amplitude> amps(layout.dimension());
    for (Amplitude &a : amps) {
        a = {2.0 * rng.uniform() - 1.0, 2.0 * rng.uniform() - 1.0};
    }
    return StateVector(layout, std::move(amps), false).normalized_copy();
}

double max_norm_drift(const AlgorithmUnitary &algo, int applications, Rng &rng) {
    StateVector state = random_state(algo.layout, rng);
    double worst = 0.0;
    for (int i = 0; i < applications && !algo.steps.empty(); ++i) {
        const double before = state.norm();
        algo.steps[rng.below(algo.steps.size())].op.apply(state);
        worst = std::max(worst, std::abs(state.norm() - before));
    }
    return worst;
}

std::optional<double> xor_involution_error(const ProblemPtr &problem, Rng &rng) {
    const int total = problem->setting_width() + problem->argument_width() + problem->answer_width();
    if (total > max_qubits()) {
        return std::nullopt;
    }
    const RegisterLayout layout(problem->setting_width(), problem->argument_width(), problem->answer_width());
    const StateVector psi = random_state(layout, rng);
    const StateVector twice = apply_xor_oracle(apply_xor_oracle(psi, problem, layout), problem, layout);
    return max_abs_difference(psi, twice);
}

double backward_forward_error(const AlgorithmUnitary &algo, Rng &rng) {
    const StateVector psi = random_state(algo.layout, rng);
    return max_abs_difference(psi, apply_backward(apply_forward(psi, algo), algo));
}

double b_mass_drift(const AlgorithmUnitary &algo, Rng &rng) {
    const StateVector psi = random_state(algo.layout, rng);
    const std::vector<double> before = psi.register_marginal(Register::kB);
    const std::vector<double> after = apply_forward(psi, algo).register_marginal(Register::kB);
    double worst = 0.0;
    for (size_t i = 0; i < before.size(); ++i) {
        worst = std::max(worst, std::abs(before[i] - after[i]));
    }
    return worst;
}

DtAudit audit_decision_trees(const ProblemPtr &problem) {
    const size_t count = problem->sigma().size();
    if (count > 12) {
        throw Error(ErrorCode::kSizeLimit, problem->name() + ": exhaustive subset audit needs |sigma| <= 12");
    }
    auto mask_of = [&](uint64_t bits) {
        SettingMask m(count);
        for (size_t i = 0; i < count; ++i) {
            if ((bits >> i) & 1) m.set(i);
        }
        return m;
    };
    DtAudit audit;
    DecisionTreeSolver solver(problem);
    std::vector<int> depth(size_t{1} << count, -1);
    for (uint64_t bits = 1; bits < (uint64_t{1} << count); ++bits) {
        const SettingMask mask = mask_of(bits);
        depth[bits] = solver.depth(mask);
        ++audit.subsets;
        audit.memo_matches_plain = audit.memo_matches_plain && depth[bits] == dt_depth_plain(*problem, mask);
        const QueryPlan plan = solver.strategy(mask);
        for (size_t i : mask.indices()) {
            const Bits &b = problem->sigma()[i];
            const ReplayOutcome r = replay(plan, *problem, b);
            audit.replay_sound = audit.replay_sound && r.solution == problem->solution(b) && r.queries <= plan.depth;
        }
    }
    // Subsets are visited in increasing order, so every superset is ready.
    for (uint64_t bits = 1; bits < (uint64_t{1} << count); ++bits) {
        for (size_t i = 0; i < count; ++i) {
            const uint64_t bigger = bits | (uint64_t{1} << i);
            audit.monotone = audit.monotone && depth[bits] <= depth[bigger];
        }
    }
    return audit;
}

bool VerificationReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult &c) { return c.passed; });
}

VerificationReport verify_workload(const Workload &w, const VerifyOptions &options) {
    VerificationReport report;
    report.problem = w.problem->name();
    report.n = w.n;
    report.mode = options.mode;
    const ProblemPtr &problem = w.problem;
    Rng rng(options.seed);

    if (w.family == Family::kSimon) {
        int recovered = 0;
        bool orthogonal = true;
        for (const Bits &b : problem->sigma()) {
            const SimonRun run = run_simon(problem, b, rng);
            recovered += run.period == problem->solution(b) ? 1 : 0;
            orthogonal = orthogonal && run.samples_orthogonal;
        }
        const int total = static_cast<int>(problem->sigma().size());
        report.checks.push_back(check("simon_controller", recovered == total && orthogonal,
                                      std::to_string(recovered) + "/" + std::to_string(total) +
                                          " periods recovered; samples orthogonal: " + (orthogonal ? "yes" : "no")));
        if (w.n != 2) {
            report.checks.push_back(skipped("circuit_checks", "simon runs with B empty beyond n=2"));
            return report;
        }
    }

    const AlgorithmUnitary algo = build_algorithm(w);
    if (w.family != Family::kSimon) {
        const RunResult r = run_relativized(problem, algo, CanonicalPolicy::kReport);
        report.checks.push_back(check("relativized_output", r.canonical && r.min_success() >= 1.0 - kStateTolerance,
                                      std::to_string(r.queries_used) + " queries, min success " +
                                          fmt("%.12g", r.min_success()) + ", outcome fidelity " +
                                          fmt("%.12g", r.outcome_fidelity)));
    }

    // Every valid pair of every setting: instance assertion and round trip.
    const bool on_a = solution_is_setting(*problem, algo.layout);
    int instances = 0;
    double worst_bob = 1.0;
    std::string instance_failure;
    for (const SettingInstances &s : enumerate_all_instances(*problem, options.mode, options.pairs)) {
        for (const SharingPair &pair : s.valid_pairs) {
            try {
                make_instance(problem, algo, pair, s.setting);
                ++instances;
            } catch (const Error &e) {
                if (e.code() != ErrorCode::kInstanceMismatch) throw;
                if (instance_failure.empty()) instance_failure = e.what();
            }
            worst_bob = std::min(worst_bob, bob_invariance_check(problem, algo, pair, s.setting));
            if (on_a) {
                worst_bob =
                    std::min(worst_bob, bob_invariance_check(problem, algo, pair, s.setting, Register::kA));
            }
        }
    }
    report.checks.push_back(check("instances", instance_failure.empty(),
                                  instance_failure.empty() ? std::to_string(instances) + " instances match their cell"
                                                           : instance_failure));
    report.checks.push_back(check("bob_invariance", worst_bob >= 1.0 - kStateTolerance,
                                  "min fidelity " + fmt("%.12g", worst_bob) + (on_a ? " (final share on B and A)" : "")));

    report.rebuild = rebuild_check(problem, algo, options.mode, options.pairs);
    const std::string rebuild_detail = std::string("support: ") + (report.rebuild->support_ok ? "yes" : "no") +
                                       ", proportional: " + (report.rebuild->proportional ? "yes" : "no") +
                                       ", fidelity " + fmt("%.12g", report.rebuild->fidelity);
    if (w.family == Family::kSimon) {
        // A single Simon run is not canonical, so its support is not asserted.
        report.checks.push_back(skipped("rebuild_support", rebuild_detail + " (not asserted for simon)"));
    } else {
        report.checks.push_back(check("rebuild_support", report.rebuild->support_ok, rebuild_detail));
    }

    const double drift = max_norm_drift(algo, options.applications, rng);
    report.checks.push_back(check("norm_drift", drift <= kNormDriftTolerance, "max " + fmt("%.3g", drift)));
    if (const auto err = xor_involution_error(problem, rng)) {
        report.checks.push_back(check("xor_involution", *err <= kStateTolerance, "max " + fmt("%.3g", *err)));
    } else {
        report.checks.push_back(skipped("xor_involution", "oracle layout exceeds the qubit cap"));
    }
    const double bf = backward_forward_error(algo, rng);
    report.checks.push_back(check("backward_forward", bf <= kStateTolerance, "max " + fmt("%.3g", bf)));
    const double mass = b_mass_drift(algo, rng);
    report.checks.push_back(check("b_mass_invariance", mass <= kStateTolerance, "max " + fmt("%.3g", mass)));

    if (problem->sigma().size() <= 8) {
        const DtAudit audit = audit_decision_trees(problem);
        report.checks.push_back(check("decision_trees",
                                      audit.memo_matches_plain && audit.monotone && audit.replay_sound,
                                      std::to_string(audit.subsets) + " subsets; memo=plain " +
                                          (audit.memo_matches_plain ? "yes" : "no") + ", monotone " +
                                          (audit.monotone ? "yes" : "no") + ", replay " +
                                          (audit.replay_sound ? "yes" : "no")));
    } else {
        report.checks.push_back(skipped("decision_trees", "exhaustive audit runs for |sigma| <= 8"));
    }
    return report;
}

}  // namespace tsow
