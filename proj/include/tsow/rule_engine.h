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

#ifndef TSOW_RULE_ENGINE_H
#define TSOW_RULE_ENGINE_H

#include <optional>
#include <string>
#include <vector>

#include "tsow/algorithms.h"
#include "tsow/symmetrization.h"

namespace tsow {

enum class Family { kGrover, kDeutschJozsa, kBernsteinVazirani, kSimon, kCustom };

std::string_view family_name(Family family);
/// "grover", "dj" / "deutsch-jozsa", "bv" / "bernstein-vazirani", "simon".
/// Throws kConfig.
Family parse_family(std::string_view text);

/// A problem together with what is known about where it came from.
struct Workload {
    Family family = Family::kCustom;
    int n = 0;
    ProblemPtr problem;

    /// The rule is applied to this problem without a worked example to check
    /// against; its verdict is an output, not a reproduction.
    bool exploratory() const { return family == Family::kBernsteinVazirani || family == Family::kCustom; }
};

Workload make_workload(Family family, int n);
Workload custom_workload(ProblemPtr problem);

/// The circuit run for the workload: plain Grover at n = 2, the calibrated
/// variant otherwise; kModeNotSupported for custom problems and for Simon
/// beyond n = 2 (which runs through the fixed-setting controller).
AlgorithmUnitary build_algorithm(const Workload &workload);

struct InstanceDepth {
    SettingSet cell;
    SharingPair representative;
    int depth = 0;
};

struct SettingPrediction {
    Bits setting;
    std::vector<InstanceDepth> instances;
    std::optional<int> prediction;  // max over instances; empty without a valid pair
    bool agreement = true;          // all instance depths equal
};

struct PredictionReport {
    std::string problem;
    int n = 0;
    MeasurementMode mode = MeasurementMode::kCoordinate;
    bool near_even = false;
    bool exploratory = false;
    std::vector<SettingPrediction> settings;
    std::optional<int> global_prediction;  // max over settings with an instance
    bool all_agree = true;
    std::vector<Bits> no_valid_pair;
    std::vector<std::string> notes;
};

struct PredictOptions {
    MeasurementMode mode = MeasurementMode::kCoordinate;
    PairOptions pairs;
    size_t memo_budget = 4'000'000;
};

/// Advanced-knowledge rule: for each setting and each distinct advanced cell,
/// the decision-tree depth of the problem restricted to that cell.
PredictionReport predict(const Workload &workload, const PredictOptions &options = {});

struct ComparisonRow {
    std::string problem;
    int n = 0;
    std::optional<int> classical_depth;
    std::optional<int> predicted_quantum;
    std::optional<int> simulated_quantum_queries;  // empty when no circuit runs
    std::optional<double> simulated_success;
    bool exploratory = false;
    std::vector<std::string> annotations;
};

struct CompareOptions {
    PredictOptions predict;
    uint64_t seed = 0;
    /// Memo budget for the full-sigma classical depth.
    size_t classical_budget = 250'000;
};

/// Classical depth of the full problem, the rule's prediction and the
/// simulated query count. Failures of any column become annotations.
ComparisonRow compare(const Workload &workload, const CompareOptions &options = {});

/// Workloads behind `compare all`.
std::vector<Workload> default_workloads();

struct ProbeCell {
    SettingSet cell;
    SharingPair representative;
    int depth = 0;
    int plain_depth = 0;  // recomputed without memo or pruning
};

struct AlignedHalf {
    SharingPair pair;
    bool repeated_value = false;  // some half holds one function value twice
    bool valid = false;
};

struct ProbeSetting {
    Bits setting;
    Bits period;
    std::vector<ProbeCell> cells;
    std::vector<AlignedHalf> aligned;
    bool has_depth_one = false;
};

struct SimonProbeReport {
    int n = 0;
    std::vector<ProbeSetting> settings;
    int settings_with_depth_one = 0;
    bool depth_one_everywhere = false;  // a depth-1 instance exists for every setting
    bool depths_match_plain = true;
    int aligned_checked = 0;
    int aligned_with_repeat = 0;
    int aligned_repeat_accepted = 0;  // repeated-value halves that passed validity
    int aligned_clean_rejected = 0;   // repetition-free halves that failed validity
};

/// Coordinate pairs over Simon's function table at n = 2 (kSizeLimit
/// otherwise), their advanced cells and reduced depths, with the
/// entry-aligned halves cross-checked against the repeated-value condition.
SimonProbeReport simon_advanced_knowledge_probe(int n);

}  // namespace tsow

#endif
