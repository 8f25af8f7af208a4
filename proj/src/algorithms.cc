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

#include "tsow/algorithms.h"

#include <algorithm>
#include <cmath>

#include "tsow/error.h"
#include "tsow/gf2.h"
#include "tsow/measurement.h"

namespace tsow {

namespace {

void hadamard_layer(std::vector<Step> &steps, Slice s) {
    for (int q = s.offset; q < s.offset + s.width; ++q) {
        steps.push_back({hadamard(q), false});
    }
}

std::vector<Amplitude> uniform_axis(int width) {
    const size_t dim = size_t{1} << width;
    return std::vector<Amplitude>(dim, Amplitude(1.0 / std::sqrt(static_cast<double>(dim)), 0.0));
}

/// -(I + (e^{i phase} - 1)|s><s|) on A, s uniform. phase = pi gives the usual
/// inversion about the mean 2|s><s| - I.
Step diffusion(Slice a, double phase) {
    return {LinearOperator(ReflectionOp{a, uniform_axis(a.width), std::polar(1.0, phase), -1.0, "diffusion"}), false};
}

void require_range(int n, int lo, int hi, const char *what) {
    if (n < lo || n > hi) {
        throw Error(ErrorCode::kSizeLimit, std::string(what) + " requires " + std::to_string(lo) + " <= n <= " +
                                               std::to_string(hi) + ", got " + std::to_string(n));
    }
}

}  // namespace

uint64_t Rng::below(uint64_t n) {
    // Rejection sampling keeps the draw exact and platform independent.
    const uint64_t limit = (~uint64_t{0} / n) * n;
    uint64_t x;
    do {
        x = engine_();
    } while (x >= limit);
    return x % n;
}

AlgorithmUnitary build_grover(int n) {
    if (n != 2) {
        throw Error(ErrorCode::kUseLongVariant, "plain Grover is exact only for N = 4; use the phase-matched variant");
    }
    ProblemPtr problem = make_grover(n);
    AlgorithmUnitary algo{"grover", RegisterLayout(n, n, 0), problem, {}};
    const Slice a = algo.layout.slice(Register::kA);
    hadamard_layer(algo.steps, a);
    algo.steps.push_back({make_phase_oracle(problem, algo.layout, a, M_PI), true});
    algo.steps.push_back(diffusion(a, M_PI));
    return algo;
}

double long_model_success(int n, int iterations, double phase) {
    // Basis (marked, unmarked-uniform); the start vector is s.
    const double beta = std::asin(std::sqrt(std::ldexp(1.0, -n)));
    const Amplitude s0 = std::sin(beta);
    const Amplitude s1 = std::cos(beta);
    const Amplitude kick = std::polar(1.0, phase);
    Amplitude v0 = s0;
    Amplitude v1 = s1;
    for (int j = 0; j < iterations; ++j) {
        v0 *= kick;
        Amplitude overlap = std::conj(s0) * v0 + std::conj(s1) * v1;
        v0 = -(v0 + (kick - 1.0) * overlap * s0);
        v1 = -(v1 + (kick - 1.0) * overlap * s1);
    }
    return std::norm(v0);
}

LongParameters calibrate_long(int n) {
    require_range(n, 2, 12, "phase-matched grover");
    constexpr int kGrid = 4096;
    constexpr double kAccept = 1e-10;
    const double theta = std::asin(std::sqrt(std::ldexp(1.0, -n)));
    const int limit = static_cast<int>(std::ceil(M_PI / (4.0 * theta))) + 4;

    for (int iterations = 1; iterations <= limit; ++iterations) {
        int best_k = 0;
        double best = -1.0;
        for (int k = 0; k <= kGrid; ++k) {
            double p = long_model_success(n, iterations, M_PI * k / kGrid);
            if (p > best) {
                best = p;
                best_k = k;
            }
        }
        // Golden-section refinement on the bracketing grid cells.
        const double step = M_PI / kGrid;
        double lo = std::max(0.0, M_PI * best_k / kGrid - step);
        double hi = std::min(M_PI, M_PI * best_k / kGrid + step);
        const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
        double x1 = hi - ratio * (hi - lo);
        double x2 = lo + ratio * (hi - lo);
        double f1 = long_model_success(n, iterations, x1);
        double f2 = long_model_success(n, iterations, x2);
        for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
            if (f1 < f2) {
                lo = x1;
                x1 = x2;
                f1 = f2;
                x2 = lo + ratio * (hi - lo);
                f2 = long_model_success(n, iterations, x2);
            } else {
                hi = x2;
                x2 = x1;
                f2 = f1;
                x1 = hi - ratio * (hi - lo);
                f1 = long_model_success(n, iterations, x1);
            }
        }
        double phase = 0.5 * (lo + hi);
        double success = long_model_success(n, iterations, phase);
        if (best > success) {
            phase = M_PI * best_k / kGrid;
            success = best;
        }
        if (1.0 - success <= kAccept) {
            return LongParameters{n, theta, iterations, phase, success};
        }
    }
    throw Error(ErrorCode::kCalibrationFailed, "no zero-failure phase found for n = " + std::to_string(n));
}

AlgorithmUnitary build_grover_long(int n) { return build_grover_long(n, calibrate_long(n)); }

AlgorithmUnitary build_grover_long(int n, const LongParameters &params) {
    require_range(n, 2, 8, "phase-matched grover");
    ProblemPtr problem = make_grover(n);
    AlgorithmUnitary algo{"grover-long", RegisterLayout(n, n, 0), problem, {}};
    const Slice a = algo.layout.slice(Register::kA);
    hadamard_layer(algo.steps, a);
    for (int j = 0; j < params.iterations; ++j) {
        algo.steps.push_back({make_phase_oracle(problem, algo.layout, a, params.phase), true});
        algo.steps.push_back(diffusion(a, params.phase));
    }
    RunResult check = run_relativized(problem, algo, CanonicalPolicy::kReport);
    if (check.min_success() < 1.0 - 1e-6) {
        throw Error(ErrorCode::kCalibrationFailed, "calibrated circuit reaches only " +
                                                       std::to_string(check.min_success()) + " at n = " +
                                                       std::to_string(n));
    }
    return algo;
}

AlgorithmUnitary build_deutsch_jozsa(int n) {
    require_range(n, 1, 3, "deutsch-jozsa");
    ProblemPtr problem = make_deutsch_jozsa(n);
    AlgorithmUnitary algo{"deutsch-jozsa", RegisterLayout(1 << n, 1, n + 1), problem, {}};
    const Slice argument{1, n};
    const int ancilla = 0;
    const int solution_qubit = algo.layout.slice(Register::kA).offset;

    algo.steps.push_back({pauli_x(ancilla), false});
    algo.steps.push_back({hadamard(ancilla), false});
    hadamard_layer(algo.steps, argument);
    algo.steps.push_back({make_xor_oracle(problem, algo.layout, argument, Slice{ancilla, 1}), true});
    hadamard_layer(algo.steps, argument);
    algo.steps.push_back({hadamard(ancilla), false});
    algo.steps.push_back({pauli_x(ancilla), false});

    // Flip the solution qubit when the argument register is nonzero.
    std::vector<int> targets{solution_qubit};
    for (int q = argument.offset + argument.width - 1; q >= argument.offset; --q) {
        targets.push_back(q);
    }
    std::vector<uint64_t> table(size_t{1} << (n + 1));
    for (uint64_t local = 0; local < table.size(); ++local) {
        const uint64_t arg = local & low_mask(n);
        table[local] = arg != 0 ? local ^ (uint64_t{1} << n) : local;
    }
    algo.steps.push_back({LinearOperator(PermutationOp{targets, table, "or-into-solution"}), false});
    return algo;
}

AlgorithmUnitary build_bernstein_vazirani(int n) {
    require_range(n, 1, 8, "bernstein-vazirani");
    ProblemPtr problem = make_bernstein_vazirani(n);
    AlgorithmUnitary algo{"bernstein-vazirani", RegisterLayout(n, n, 1), problem, {}};
    const Slice a = algo.layout.slice(Register::kA);
    algo.steps.push_back({pauli_x(0), false});
    algo.steps.push_back({hadamard(0), false});
    hadamard_layer(algo.steps, a);
    algo.steps.push_back({make_xor_oracle(problem, algo.layout, a, Slice{0, 1}), true});
    hadamard_layer(algo.steps, a);
    algo.steps.push_back({hadamard(0), false});
    algo.steps.push_back({pauli_x(0), false});
    return algo;
}

namespace {

AlgorithmUnitary simon_circuit(const ProblemPtr &problem, RegisterLayout layout, std::optional<Bits> fixed) {
    const int n = problem->argument_width();
    AlgorithmUnitary algo{"simon", layout, problem, {}};
    const Slice a = layout.slice(Register::kA);
    hadamard_layer(algo.steps, a);
    algo.steps.push_back({make_xor_oracle(problem, layout, a, Slice{0, n}, std::move(fixed)), true});
    hadamard_layer(algo.steps, a);
    return algo;
}

}  // namespace

AlgorithmUnitary build_simon(int n) {
    ProblemPtr problem = make_simon(n);
    return simon_circuit(problem, RegisterLayout(problem->setting_width(), n, n), std::nullopt);
}

AlgorithmUnitary build_simon_fixed(const ProblemPtr &simon, const Bits &setting) {
    const int n = simon->argument_width();
    simon->setting_index(setting);
    return simon_circuit(simon, RegisterLayout(0, n, n), setting);
}

double RunResult::min_success() const {
    double worst = 1.0;
    for (const auto &s : per_setting_success) {
        worst = std::min(worst, s.probability);
    }
    return worst;
}

std::vector<double> a_distribution(const StateVector &state, const Bits &setting) {
    const RegisterLayout &layout = state.layout();
    const Slice b = layout.slice(Register::kB);
    const Slice a = layout.slice(Register::kA);
    std::vector<double> out(size_t{1} << a.width, 0.0);
    double total = 0.0;
    for (uint64_t i = 0; i < state.size(); ++i) {
        if (b.width > 0 && b.extract(i) != setting.value) {
            continue;
        }
        double p = std::norm(state[i]);
        out[a.extract(i)] += p;
        total += p;
    }
    if (total > 0.0) {
        for (double &p : out) {
            p /= total;
        }
    }
    return out;
}

namespace {

void check_binding(const ProblemPtr &problem, const AlgorithmUnitary &algo) {
    if (!algo.problem || algo.problem->sigma() != problem->sigma() ||
        algo.problem->solution_width() != problem->solution_width()) {
        throw Error(ErrorCode::kLayoutMismatch, "algorithm " + algo.name + " was not built for " + problem->name());
    }
    if (algo.layout.a_qubits != problem->solution_width()) {
        throw Error(ErrorCode::kLayoutMismatch, "register A must hold exactly the solution");
    }
}

}  // namespace

RunResult run_relativized(const ProblemPtr &problem, const AlgorithmUnitary &algo, CanonicalPolicy policy) {
    check_binding(problem, algo);
    const RegisterLayout &layout = algo.layout;
    StateVector output = apply_forward(init_superposed_input(*problem, layout), algo);

    RunResult result;
    result.queries_used = algo.query_count();

    const Slice b_slice = layout.slice(Register::kB);
    const Slice a_slice = layout.slice(Register::kA);
    const Slice w_slice = layout.slice(Register::kW);
    const double weight = 1.0 / static_cast<double>(problem->sigma().size());

    // Joint (B, A) distribution, per-branch success and workspace residue.
    std::vector<double> joint(size_t{1} << (b_slice.width + a_slice.width), 0.0);
    double w_residue = 0.0;
    Amplitude overlap = 0.0;
    const double canonical_amp = std::sqrt(weight);
    for (uint64_t i = 0; i < output.size(); ++i) {
        const double p = std::norm(output[i]);
        joint[i >> w_slice.width] += p;
        if (w_slice.extract(i) != 0) {
            w_residue += p;
            continue;
        }
        auto si = problem->sigma().index_of(Bits(b_slice.extract(i), b_slice.width));
        if (si && problem->solution_at(*si).value == a_slice.extract(i)) {
            overlap += canonical_amp * output[i];
        }
    }

    double bhattacharyya = 0.0;
    for (size_t si = 0; si < problem->sigma().size(); ++si) {
        const Bits &b = problem->sigma()[si];
        const uint64_t key = (b.value << a_slice.width) | problem->solution_at(si).value;
        bhattacharyya += std::sqrt(joint[key] * weight);
        double branch = 0.0;
        for (uint64_t a = 0; a < (uint64_t{1} << a_slice.width); ++a) {
            branch += joint[(b.value << a_slice.width) | a];
        }
        result.per_setting_success.push_back({b, branch > 0.0 ? joint[key] / branch : 0.0});
    }
    result.outcome_fidelity = std::min(1.0, bhattacharyya * bhattacharyya);
    result.coherent_fidelity = std::min(1.0, std::norm(overlap) / output.norm_squared());
    result.workspace_clean = w_residue <= kStateTolerance;
    result.canonical = result.outcome_fidelity >= 1.0 - kStateTolerance;
    result.output_state = std::move(output);

    if (!result.canonical && policy == CanonicalPolicy::kThrow) {
        throw Error(ErrorCode::kOutputNotCanonical,
                    algo.name + ": output is not sum_b |b>|s(b)> (outcome fidelity " +
                        std::to_string(result.outcome_fidelity) + ")");
    }
    return result;
}

RunResult run_extended(const ProblemPtr &problem, const AlgorithmUnitary &algo, const Bits &setting) {
    check_binding(problem, algo);
    const size_t si = problem->setting_index(setting);
    StateVector input = init_superposed_input(*problem, algo.layout);
    // Bob's measurement of B selects `setting`.
    auto spec = MeasurementSpec::full(Register::kB, algo.layout.b_qubits);
    auto [projected, probability] = project(input, spec, spec.label(setting));
    (void)probability;
    StateVector output = apply_forward(projected.normalized_copy(), algo);

    RunResult result;
    result.queries_used = algo.query_count();
    std::vector<double> dist = a_distribution(output, setting);
    double success = dist[problem->solution_at(si).value];
    result.per_setting_success.push_back({setting, success});
    result.outcome_fidelity = success;
    result.canonical = success >= 1.0 - kStateTolerance;
    result.output_state = std::move(output);
    return result;
}

Bits choose_setting(const OracleProblem &problem, Rng &rng) {
    return problem.sigma()[static_cast<size_t>(rng.below(problem.sigma().size()))];
}

std::vector<Bits> gf2_solve(const std::vector<Bits> &vectors, int width) {
    std::vector<uint64_t> raw;
    for (const Bits &v : vectors) {
        if (v.width != width) {
            throw Error(ErrorCode::kLengthMismatch, "gf2_solve: vector width mismatch");
        }
        raw.push_back(v.value);
    }
    std::vector<Bits> out;
    for (uint64_t x : gf2::nullspace(raw, width)) {
        out.emplace_back(x, width);
    }
    return out;
}

SimonRun run_simon(const ProblemPtr &simon, const Bits &setting, Rng &rng) {
    const int n = simon->argument_width();
    const Bits truth = simon->solution(setting);
    AlgorithmUnitary algo = build_simon_fixed(simon, setting);
    StateVector output = apply_forward(StateVector(algo.layout), algo);
    const std::vector<double> dist = output.register_marginal(Register::kA);

    SimonRun run{setting, Bits(0, n), {}, 0, true};
    std::vector<uint64_t> span;
    const int max_runs = 64 * n;
    while (run.queries_used < max_runs) {
        double u = rng.uniform();
        uint64_t y = 0;
        for (; y + 1 < dist.size(); ++y) {
            if (u < dist[y]) {
                break;
            }
            u -= dist[y];
        }
        ++run.queries_used;
        run.samples.emplace_back(y, n);
        run.samples_orthogonal = run.samples_orthogonal && parity(y & truth.value) == 0;
        span.push_back(y);
        if (gf2::rank(span) == n - 1) {
            std::vector<uint64_t> kernel = gf2::nullspace(span, n);
            run.period = Bits(kernel.front(), n);
            return run;
        }
    }
    throw Error(ErrorCode::kSamplingStall, "no period after " + std::to_string(max_runs) + " runs for setting " +
                                               setting.str());
}

RunResult run_simon(int n, uint64_t seed) {
    ProblemPtr simon = make_simon(n);
    Rng rng(seed);
    Bits setting = choose_setting(*simon, rng);
    SimonRun run = run_simon(simon, setting, rng);
    RunResult result;
    result.queries_used = run.queries_used;
    result.repetitions = run.queries_used;
    result.sampled_solution = run.period;
    result.per_setting_success.push_back({setting, run.period == simon->solution(setting) ? 1.0 : 0.0});
    return result;
}

}  // namespace tsow
