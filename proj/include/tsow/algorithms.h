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

#ifndef TSOW_ALGORITHMS_H
#define TSOW_ALGORITHMS_H

#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "tsow/operators.h"

namespace tsow {

/// Seedable generator used for every random choice (Bob's setting, Simon
/// samples). Draws are platform independent.
class Rng {
   public:
    static constexpr const char *kName = "mt19937_64";

    explicit Rng(uint64_t seed) : seed_(seed), engine_(seed) {}

    uint64_t seed() const { return seed_; }
    /// Uniform in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    /// Uniform in [0, n).
    uint64_t below(uint64_t n);

   private:
    uint64_t seed_;
    std::mt19937_64 engine_;
};

/// Grover with N = 4: one phase query, then inversion about the mean.
/// Any n other than 2 throws kUseLongVariant.
AlgorithmUnitary build_grover(int n);

/// Phase-matched Grover: the oracle phase and the diffusion phase are both
/// `phase`, and `iterations` rounds reach the marked item with certainty.
struct LongParameters {
    int n = 0;
    double theta = 0.0;  // arcsin(2^{-n/2})
    int iterations = 0;
    double phase = 0.0;
    double model_success = 0.0;  // success predicted by the 2-D rotation model
};

/// Smallest iteration count admitting a zero-failure phase, found by a grid
/// scan over [0, pi] refined by golden-section search. Deterministic.
/// Throws kCalibrationFailed if no count up to the search limit qualifies.
LongParameters calibrate_long(int n);

/// Success probability of `iterations` phase-matched rounds, from the
/// two-dimensional (marked, unmarked-uniform) reduction.
double long_model_success(int n, int iterations, double phase);

/// Builds the calibrated circuit and checks success >= 1 - 1e-6 for every
/// setting on the full statevector. 2 <= n <= 8.
AlgorithmUnitary build_grover_long(int n);
AlgorithmUnitary build_grover_long(int n, const LongParameters &params);

/// One xor query between Hadamard layers, then a query-free step writing
/// [argument register != 0] into A. Layout: B = 2^n, A = 1, W = n + 1.
AlgorithmUnitary build_deutsch_jozsa(int n);

/// One xor query with the answer qubit in |->; A ends holding b.
AlgorithmUnitary build_bernstein_vazirani(int n);

/// The one-query Simon circuit with B as control (n = 2 fits the qubit cap).
AlgorithmUnitary build_simon(int n);
/// The same circuit bound to one setting; register B is empty.
AlgorithmUnitary build_simon_fixed(const ProblemPtr &simon, const Bits &setting);

struct SettingSuccess {
    Bits setting;
    double probability = 0.0;
};

struct RunResult {
    StateVector output_state{RegisterLayout{}};
    int queries_used = 0;
    int repetitions = 1;
    std::optional<Bits> sampled_solution;
    std::vector<SettingSuccess> per_setting_success;

    /// |<out|canonical>|^2 with canonical = sum_b |b>|s(b)>|0>_W.
    double coherent_fidelity = 0.0;
    /// Classical fidelity of the (B, A) outcome distribution against the
    /// canonical one; this is what the canonical-form check asserts.
    double outcome_fidelity = 0.0;
    /// Whether W is back to |0> on every branch.
    bool workspace_clean = false;
    bool canonical = false;

    double min_success() const;
};

enum class CanonicalPolicy { kThrow, kReport };

/// Forward-propagates the superposed input and checks that measuring B and A
/// yields (b, s(b)) with b uniform. With kThrow a failed check raises
/// kOutputNotCanonical; with kReport the result carries `canonical = false`.
RunResult run_relativized(const ProblemPtr &problem, const AlgorithmUnitary &algo,
                          CanonicalPolicy policy = CanonicalPolicy::kThrow);

/// Bob measures B first (outcome `setting`), then Alice runs the unitary.
RunResult run_extended(const ProblemPtr &problem, const AlgorithmUnitary &algo, const Bits &setting);

/// Probability of each A value on the branch B = setting of `state`.
std::vector<double> a_distribution(const StateVector &state, const Bits &setting);

struct SimonRun {
    Bits setting;
    Bits period;
    std::vector<Bits> samples;
    int queries_used = 0;
    bool samples_orthogonal = true;  // every y satisfied y . p = 0
};

/// Repeats the one-query circuit, sampling y from register A, until the
/// samples span an (n-1)-dimensional space, then solves for the period.
/// Throws kSamplingStall after 64 n runs without convergence.
SimonRun run_simon(const ProblemPtr &simon, const Bits &setting, Rng &rng);
/// Picks Bob's setting with `rng`, then runs the controller.
RunResult run_simon(int n, uint64_t seed);

/// Uniformly random member of sigma.
Bits choose_setting(const OracleProblem &problem, Rng &rng);

/// Basis of {x : y . x = 0 for all y in vectors}.
std::vector<Bits> gf2_solve(const std::vector<Bits> &vectors, int width);

}  // namespace tsow

#endif
