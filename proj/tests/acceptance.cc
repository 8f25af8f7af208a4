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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.h"
#include "tsow/cli.h"
#include "tsow/error.h"
#include "tsow/query_complexity.h"
#include "tsow/report.h"
#include "tsow/rule_engine.h"
#include "tsow/verification.h"

namespace tsow {
namespace {

constexpr double kExact = 1e-9;
constexpr double kLongSuccess = 1e-6;

/// Collects the evidence for one criterion; the first failed expectation
/// names itself in the summary line.
class Criterion {
   public:
    void expect(bool ok, const std::string &what) {
        if (!ok && failure_.empty()) failure_ = what;
    }
    void note(const std::string &text) { notes_ += (notes_.empty() ? "" : "; ") + text; }
    bool passed() const { return failure_.empty(); }
    std::string summary() const { return passed() ? notes_ : "failed: " + failure_ + (notes_.empty() ? "" : " | " + notes_); }

   private:
    std::string failure_;
    std::string notes_;
};

std::string fixed(double v, int digits = 12) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

std::vector<SettingSet> cells_of(const SettingInstances &s) {
    std::vector<SettingSet> out;
    for (const CellEntry &c : s.cells) out.push_back(c.cell);
    return out;
}

void grover_four(Criterion &c) {
    const AlgorithmUnitary algo = build_grover(2);
    double worst = 1.0;
    for (const Bits &b : algo.problem->sigma()) {
        const RunResult r = run_extended(algo.problem, algo, b);
        c.expect(r.queries_used == 1, "queries at b=" + b.str());
        worst = std::min(worst, r.per_setting_success.at(0).probability);
    }
    c.expect(std::abs(worst - 1.0) <= kExact, "success " + fixed(worst));
    const int classical = dt_depth(algo.problem, algo.problem->sigma());
    c.expect(classical == 3, "classical depth " + std::to_string(classical));
    c.note("quantum queries 1, min success " + fixed(worst) + ", classical depth " + std::to_string(classical));
}

void grover_linear_cells(Criterion &c) {
    const Workload w = make_workload(Family::kGrover, 2);
    const auto all = enumerate_all_instances(*w.problem, MeasurementMode::kGf2Linear);
    for (const SettingInstances &s : all) {
        c.expect(s.cells.size() == 3, "cell count at b=" + s.setting.str());
        if (s.setting.str() == "01") {
            c.expect(cells_of(s) == std::vector<SettingSet>{{"00", "01"}, {"01", "10"}, {"01", "11"}},
                     "cells at b=01");
        }
    }
    const PredictionReport p = predict(w, {.mode = MeasurementMode::kGf2Linear});
    const ComparisonRow row = compare(w, {.predict = {.mode = MeasurementMode::kGf2Linear}});
    c.expect(p.global_prediction == 1, "prediction");
    c.expect(row.simulated_quantum_queries == 1, "simulated count");
    c.note("3 cells at every setting; b=01: {01,11} {00,01} {01,10}; prediction " +
           std::to_string(p.global_prediction.value_or(-1)) + " = simulated " +
           std::to_string(row.simulated_quantum_queries.value_or(-1)));
}

void bob_invariance(Criterion &c) {
    int pairs = 0;
    double worst = 1.0;
    for (const AlgorithmUnitary &algo : {build_grover(2), build_deutsch_jozsa(2)}) {
        for (const SettingInstances &s : enumerate_all_instances(*algo.problem, MeasurementMode::kCoordinate)) {
            for (const SharingPair &pair : s.valid_pairs) {
                worst = std::min(worst, bob_invariance_check(algo.problem, algo, pair, s.setting));
                ++pairs;
            }
        }
    }
    c.expect(pairs > 0, "no valid pairs");
    c.expect(worst >= 1.0 - kExact, "fidelity " + fixed(worst));
    c.note(std::to_string(pairs) + " (pair, setting) round trips, min fidelity " + fixed(worst));
}

void instance_construction(Criterion &c) {
    const AlgorithmUnitary algo = build_grover(2);
    const SymmetrizationInstance inst =
        make_instance(algo.problem, algo, coordinate_pair(2, {0}, {1}), Bits::parse("01"));
    // (|01> + |11>)|00> / sqrt 2, written out by hand.
    std::vector<Amplitude> amps(algo.layout.dimension());
    amps[0b01'00] = M_SQRT1_2;
    amps[0b11'00] = M_SQRT1_2;
    const StateVector expected(algo.layout, amps, true);
    const double f = fidelity(inst.instance_input, expected);
    c.expect(f >= 1.0 - kExact, "fidelity " + fixed(f));
    c.note("pair [0]|[1] at b=01, fidelity " + fixed(f));
}

void rebuild(Criterion &c) {
    const AlgorithmUnitary g = build_grover(2);
    const RebuildReport rg = rebuild_check(g.problem, g, MeasurementMode::kGf2Linear);
    c.expect(rg.proportional && rg.fidelity >= 1.0 - kExact, "grover rebuild fidelity " + fixed(rg.fidelity));
    const AlgorithmUnitary dj = build_deutsch_jozsa(2);
    const RebuildReport rd = rebuild_check(dj.problem, dj, MeasurementMode::kCoordinate);
    c.expect(rd.support_ok, "dj support");
    const std::vector<double> ref = oracle::incidence_weights(*dj.problem, false);
    double err = 0.0;
    for (size_t i = 0; i < ref.size(); ++i) err = std::max(err, std::abs(rd.weights.at(i) - ref[i]));
    c.expect(err <= kExact, "dj weights differ from incidence oracle by " + fixed(err));
    std::string weights;
    for (double w : rd.weights) weights += (weights.empty() ? "" : " ") + fixed(w, 6);
    c.note("grover gf2 fidelity " + fixed(rg.fidelity) + "; dj support ok, proportional " +
           (rd.proportional ? "yes" : "no") + ", weights [" + weights + "]");
}

void deutsch_jozsa(Criterion &c) {
    const Workload w = make_workload(Family::kDeutschJozsa, 2);
    const AlgorithmUnitary algo = build_algorithm(w);
    double worst = 1.0;
    for (const Bits &b : w.problem->sigma()) {
        const RunResult r = run_extended(w.problem, algo, b);
        c.expect(r.queries_used == 1, "queries at b=" + b.str());
        worst = std::min(worst, r.per_setting_success.at(0).probability);
    }
    c.expect(w.problem->sigma().size() == 8, "settings");
    c.expect(std::abs(worst - 1.0) <= kExact, "success " + fixed(worst));
    const int classical = dt_depth(w.problem, w.problem->sigma());
    c.expect(classical == 3, "classical depth " + std::to_string(classical));
    const SettingInstances s = enumerate_instances(*w.problem, Bits::parse("0011"), MeasurementMode::kCoordinate);
    c.expect(cells_of(s) == std::vector<SettingSet>{{"0000", "0011"}, {"0011", "1111"}}, "cells at b=0011");
    const PredictionReport p = predict(w);
    c.expect(p.global_prediction == 1, "prediction");
    c.note("8 settings, 1 query, min success " + fixed(worst) + ", classical " + std::to_string(classical) +
           ", b=0011 cells {0000,0011} {0011,1111}, prediction " + std::to_string(p.global_prediction.value_or(-1)));
}

void grover_scaling(Criterion &c) {
    for (int n : {2, 4, 6}) {
        const auto start = std::chrono::steady_clock::now();
        const Workload w = make_workload(Family::kGrover, n);
        const int target = (1 << (n / 2)) - 1;
        const PredictionReport p = predict(w);
        c.expect(p.global_prediction == target, "prediction at n=" + std::to_string(n));
        const AlgorithmUnitary algo = build_algorithm(w);
        const RunResult r = run_relativized(w.problem, algo);
        c.expect(r.min_success() >= 1.0 - kLongSuccess, "success at n=" + std::to_string(n));
        c.expect(r.queries_used <= 2 * target && 2 * r.queries_used >= target, "query order at n=" + std::to_string(n));
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        c.expect(seconds < 60.0, "runtime at n=" + std::to_string(n));
        c.note("n=" + std::to_string(n) + ": prediction " + std::to_string(p.global_prediction.value_or(-1)) +
               ", simulated " + std::to_string(r.queries_used) + " queries, success " + fixed(r.min_success()) +
               ", " + fixed(seconds, 3) + " s");
    }
}

void simon(Criterion &c) {
    ProblemPtr problem = make_simon(2);
    Rng rng(0);
    int recovered = 0;
    bool orthogonal = true;
    for (const Bits &b : problem->sigma()) {
        const SimonRun run = run_simon(problem, b, rng);
        recovered += run.period == problem->solution(b);
        for (const Bits &y : run.samples) orthogonal = orthogonal && parity(y.value & run.period.value) == 0;
    }
    c.expect(orthogonal, "a sample is not orthogonal to the period");
    c.expect(recovered == 36, "recovered " + std::to_string(recovered) + "/36");
    const SimonProbeReport probe = simon_advanced_knowledge_probe(2);
    c.expect(probe.depths_match_plain, "probe depths differ from plain recomputation");
    oracle::DtOracle ref(*problem);
    bool oracle_match = true;
    for (const ProbeSetting &s : probe.settings) {
        for (const ProbeCell &cell : s.cells) {
            std::set<size_t> idx;
            for (const Bits &b : cell.cell) idx.insert(problem->setting_index(b));
            oracle_match = oracle_match && cell.depth == ref.depth(idx) && cell.depth == cell.plain_depth;
        }
    }
    c.expect(oracle_match, "probe depths differ from the test oracle");
    c.note("36/36 periods at seed 0, samples orthogonal; depth-1 instances at " +
           std::to_string(probe.settings_with_depth_one) + "/36 settings (single-evaluation claim " +
           (probe.depth_one_everywhere ? "present" : "absent") + " for every setting)");
}

void property_suite(Criterion &c) {
    Rng rng(0);
    double drift = 0, involution = 0, round_trip = 0, mass = 0;
    for (const AlgorithmUnitary &algo : {build_grover(2), build_deutsch_jozsa(2), build_grover_long(4)}) {
        drift = std::max(drift, max_norm_drift(algo, 100, rng));
        involution = std::max(involution, xor_involution_error(algo.problem, rng).value_or(1.0));
        round_trip = std::max(round_trip, backward_forward_error(algo, rng));
        mass = std::max(mass, b_mass_drift(algo, rng));
    }
    c.expect(drift <= 1e-12, "norm drift " + fixed(drift, 3));
    c.expect(involution <= kExact, "xor involution " + fixed(involution, 3));
    c.expect(round_trip <= kExact, "backward-forward " + fixed(round_trip, 3));
    c.expect(mass <= kExact, "B mass " + fixed(mass, 3));
    int subsets = 0;
    for (ProblemPtr p : {make_grover(2), make_deutsch_jozsa(2)}) {
        const DtAudit a = audit_decision_trees(p);
        c.expect(a.monotone && a.replay_sound && a.memo_matches_plain, "dt audit on " + p->name());
        subsets += a.subsets;
    }
    c.note("drift " + fixed(drift, 3) + ", involution " + fixed(involution, 3) + ", round trip " +
           fixed(round_trip, 3) + ", B mass " + fixed(mass, 3) + ", " + std::to_string(subsets) +
           " subsets monotone and replay-sound");
}

void determinism(Criterion &c) {
    const char *argv[] = {"tsow", "compare", "all", "--format", "json"};
    std::ostringstream out1, err1, out2, err2;
    const int rc1 = run_cli(5, argv, out1, err1);
    const int rc2 = run_cli(5, argv, out2, err2);
    c.expect(rc1 == 0 && rc2 == 0, "compare exit codes " + std::to_string(rc1) + ", " + std::to_string(rc2));
    c.expect(!out1.str().empty() && out1.str() == out2.str(), "outputs differ");
    c.note("two `compare all` runs, " + std::to_string(out1.str().size()) + " identical bytes");
}

}  // namespace
}  // namespace tsow

int main() {
    using tsow::Criterion;
    const std::vector<std::pair<const char *, std::function<void(Criterion &)>>> criteria = {
        {"grover N=4 one query, classical 3", tsow::grover_four},
        {"grover gf2-linear instances", tsow::grover_linear_cells},
        {"bob invariance", tsow::bob_invariance},
        {"instance construction", tsow::instance_construction},
        {"rebuild", tsow::rebuild},
        {"deutsch-jozsa n=2", tsow::deutsch_jozsa},
        {"grover scaling", tsow::grover_scaling},
        {"simon n=2", tsow::simon},
        {"property suite", tsow::property_suite},
        {"determinism", tsow::determinism},
    };
    int failures = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        Criterion c;
        try {
            criteria[i].second(c);
        } catch (const std::exception &e) {
            c.expect(false, std::string("exception: ") + e.what());
        }
        failures += !c.passed();
        std::printf("%s %2zu %s: %s\n", c.passed() ? "PASS" : "FAIL", i + 1, criteria[i].first, c.summary().c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
