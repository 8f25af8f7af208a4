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

#ifndef TSOW_SYMMETRIZATION_H
#define TSOW_SYMMETRIZATION_H

#include <memory>
#include <string>
#include <vector>

#include "tsow/measurement.h"
#include "tsow/operators.h"

namespace tsow {

/// Two partial measurements of B sharing the selection of the outcome: spec1
/// is the initial share, spec2 the final share brought into the initial state.
struct SharingPair {
    MeasurementSpec spec1;
    MeasurementSpec spec2;
    MeasurementMode mode = MeasurementMode::kCoordinate;

    SharingPair swapped() const { return {spec2, spec1, mode}; }
    /// "[0,1]|[2,3]" or "{10}|{01}".
    std::string str() const;
    bool operator==(const SharingPair &) const = default;
};

struct PairOptions {
    /// Accept shares whose sizes differ by one (odd setting widths). Evenness
    /// then tolerates contributions differing by up to one bit.
    bool near_even = false;
};

/// Checks the structural invariants of `pair` (both on B, same width,
/// disjoint and jointly complete, equal sizes); throws kInvalidPair.
void validate_pair(const SharingPair &pair, const PairOptions &options = {});

SharingPair coordinate_pair(int width, std::vector<int> positions1, std::vector<int> positions2,
                            const PairOptions &options = {});
SharingPair gf2_pair(int width, std::vector<uint64_t> functionals1, std::vector<uint64_t> functionals2,
                     const PairOptions &options = {});

struct Contribution {
    SettingSet cell;  // settings agreeing with b on the spec's outcome
    double bits = 0.0;
};

/// c = log2 |s(sigma)| - log2 |s(cell)|.
Contribution contribution(const OracleProblem &problem, const Bits &setting, const MeasurementSpec &spec);

struct ValidityReport {
    double c1 = 0.0;
    double c2 = 0.0;
    double c12 = 0.0;
    bool even = false;
    bool non_redundant = false;
    bool jointly_determining = false;
    bool setting_even = false;

    bool valid() const { return even && non_redundant && jointly_determining && setting_even; }
};

ValidityReport is_valid_pair(const OracleProblem &problem, const Bits &setting, const SharingPair &pair,
                             const PairOptions &options = {});

/// Every well-formed ordered pair for the problem's setting width. gf2-linear
/// needs a compact encoding (else kModeNotSupported) and width <= 4 (else
/// kSizeLimit); coordinate mode needs width <= 16.
std::vector<SharingPair> candidate_pairs(const OracleProblem &problem, MeasurementMode mode,
                                         const PairOptions &options = {});

struct CellEntry {
    SettingSet cell;
    SharingPair representative;  // first valid pair yielding this cell
    int pair_count = 0;
};

/// Valid pairs for one setting, in candidate order, and their distinct
/// advanced cells (the final share's cell), sorted.
struct SettingInstances {
    Bits setting;
    std::vector<SharingPair> valid_pairs;
    std::vector<CellEntry> cells;

    bool no_valid_pair() const { return valid_pairs.empty(); }
};

SettingInstances enumerate_instances(const OracleProblem &problem, const Bits &setting, MeasurementMode mode,
                                     const PairOptions &options = {});
/// Same result for every setting in sigma order, sharing the per-spec work.
std::vector<SettingInstances> enumerate_all_instances(const OracleProblem &problem, MeasurementMode mode,
                                                      const PairOptions &options = {});

struct SymmetrizationInstance {
    SharingPair pair;
    Bits setting;
    SettingSet cell;
    Register final_register = Register::kB;
    StateVector instance_input{RegisterLayout{}};
    StateVector instance_output{RegisterLayout{}};
    double input_fidelity = 0.0;  // against the cell superposition
};

/// Forward-propagates the full superposition, projects the final share
/// (evaluated on `setting`) on `final_register`, and propagates back. The
/// result must equal the cell superposition within 1e-9, else
/// kInstanceMismatch. Measuring the final share on A requires s(b) = b.
SymmetrizationInstance make_instance(const ProblemPtr &problem, const AlgorithmUnitary &algo, const SharingPair &pair,
                                     const Bits &setting, Register final_register = Register::kB);

/// Project the initial share, forward, project the final share, backward;
/// fidelity of the result against |b>_B |0>_A |0>_W.
double bob_invariance_check(const ProblemPtr &problem, const AlgorithmUnitary &algo, const SharingPair &pair,
                            const Bits &setting, Register final_register = Register::kB);

struct RebuildReport {
    bool support_ok = false;
    bool proportional = false;
    double fidelity = 0.0;        // summed outputs vs the forward-propagated full input
    std::vector<double> weights;  // per-setting mass of the sum, sigma order, sums to 1
    std::vector<Bits> no_valid_pair;
    int instance_count = 0;
};

/// Sums the normalized instance outputs over every setting and each of its
/// distinct advanced cells.
RebuildReport rebuild_check(const ProblemPtr &problem, const AlgorithmUnitary &algo, MeasurementMode mode,
                            const PairOptions &options = {});

}  // namespace tsow

#endif
