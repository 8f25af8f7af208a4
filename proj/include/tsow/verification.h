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

#ifndef TSOW_VERIFICATION_H
#define TSOW_VERIFICATION_H

#include <optional>
#include <string>
#include <vector>

#include "tsow/rule_engine.h"

namespace tsow {

/// Random unit vector; components uniform in [-1, 1]^2 before normalizing.
StateVector random_state(const RegisterLayout &layout, Rng &rng);

/// Largest | ||U psi|| - ||psi|| | over `applications` randomly chosen steps
/// of `algo`, applied in sequence to a random state.
double max_norm_drift(const AlgorithmUnitary &algo, int applications, Rng &rng);

/// Max amplitude error of applying the xor oracle twice to a random state.
/// Empty when the oracle layout would exceed the qubit cap.
std::optional<double> xor_involution_error(const ProblemPtr &problem, Rng &rng);

/// Max amplitude error of backward(forward(psi)) against psi.
double backward_forward_error(const AlgorithmUnitary &algo, Rng &rng);

/// Max change of any per-setting B mass under forward propagation.
double b_mass_drift(const AlgorithmUnitary &algo, Rng &rng);

struct DtAudit {
    int subsets = 0;
    bool memo_matches_plain = true;
    bool monotone = true;
    bool replay_sound = true;
};

/// Exhaustive over every nonempty subset of sigma (|sigma| <= 12, else
/// kSizeLimit): memoized vs plain depth, monotonicity under adding one
/// setting, and replay of each extracted plan.
DtAudit audit_decision_trees(const ProblemPtr &problem);

struct CheckResult {
    std::string name;
    bool passed = false;
    bool skipped = false;
    std::string detail;
};

struct VerificationReport {
    std::string problem;
    int n = 0;
    MeasurementMode mode = MeasurementMode::kCoordinate;
    std::vector<CheckResult> checks;
    std::optional<RebuildReport> rebuild;

    bool passed() const;
};

struct VerifyOptions {
    MeasurementMode mode = MeasurementMode::kCoordinate;
    PairOptions pairs;
    uint64_t seed = 0;
    int applications = 100;
};

/// Instance assertions, Bob invariance, rebuild, the state-vector property
/// suite and (for small sigma) the decision-tree audit.
VerificationReport verify_workload(const Workload &workload, const VerifyOptions &options = {});

}  // namespace tsow

#endif
