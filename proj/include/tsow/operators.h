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

#ifndef TSOW_OPERATORS_H
#define TSOW_OPERATORS_H

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tsow/state_vector.h"

namespace tsow {

/// k-qubit matrix (row-major, 2^k x 2^k) on the listed global qubit
/// positions. targets[0] is the most significant bit of the local index.
struct DenseOp {
    std::vector<int> targets;
    std::vector<Amplitude> matrix;
    std::string label;
};

/// Multiplies |b>|a> by exp(i * angle * f_b(a)). The setting is read from
/// register B unless `fixed_setting` binds the oracle to one b (B unused).
/// Arguments outside the domain, and B values outside sigma, are left alone.
struct PhaseOracleOp {
    ProblemPtr problem;
    Slice argument;
    Slice setting;
    double angle = 0.0;
    std::optional<Bits> fixed_setting;
};

/// |b>|a>|w> -> |b>|a>|w xor f_b(a)> on the `answer` slice.
struct XorOracleOp {
    ProblemPtr problem;
    Slice argument;
    Slice answer;
    Slice setting;
    std::optional<Bits> fixed_setting;
};

/// Classical reversible map on the listed qubits: local index i -> table[i].
struct PermutationOp {
    std::vector<int> targets;
    std::vector<uint64_t> table;
    std::string label;
};

/// global * (I + (phase - 1) |axis><axis|) on one slice.
struct ReflectionOp {
    Slice target;
    std::vector<Amplitude> axis;
    Amplitude phase = -1.0;
    Amplitude global = 1.0;
    std::string label;
};

enum class OperatorKind { kDenseOnSubset, kDiagonalPhase, kBasisPermutation, kReflection };

/// A unitary acting on a StateVector.
class LinearOperator {
   public:
    using Variant = std::variant<DenseOp, PhaseOracleOp, XorOracleOp, PermutationOp, ReflectionOp>;

    /// Validates the payload: dense matrices must satisfy O^dag O = I within
    /// 1e-9 (kNotUnitary otherwise), permutation tables must be bijective,
    /// reflection axes unit-norm and phases unimodular.
    explicit LinearOperator(Variant op);

    OperatorKind kind() const;
    bool unitary() const { return true; }
    /// True for the two oracle kinds.
    bool is_oracle() const;
    std::string describe() const;

    /// Applies in place. Throws kLayoutMismatch if a slice lies outside the
    /// state's qubits.
    void apply(StateVector &state) const;
    LinearOperator adjoint() const;

    /// Whether the operator can move amplitude between different B values
    /// or act non-trivially on B alone (oracles read B but never change it).
    bool touches_register(const RegisterLayout &layout, Register r) const;

    const Variant &payload() const { return op_; }

   private:
    Variant op_;
};

/// An operator plus the query tag used for counting function evaluations.
struct Step {
    LinearOperator op;
    bool query = false;
};

LinearOperator hadamard(int qubit);
LinearOperator pauli_x(int qubit);

/// Unitary part of an algorithm. Register B is a passive control.
struct AlgorithmUnitary {
    std::string name;
    RegisterLayout layout;
    ProblemPtr problem;
    std::vector<Step> steps;

    int query_count() const;
};

/// Forward applies the steps in order; backward applies adjoints in reverse.
/// Both throw kLayoutMismatch if the layout differs from the state's.
StateVector apply_forward(const StateVector &state, const AlgorithmUnitary &algo);
StateVector apply_backward(const StateVector &state, const AlgorithmUnitary &algo);

/// Xor oracle with the argument in A and the answer in the low bits of W.
StateVector apply_xor_oracle(const StateVector &state, const ProblemPtr &problem, const RegisterLayout &layout);
/// Phase oracle (angle pi) with the argument in A. kPhaseNeedsBinary unless
/// the answer width is 1.
StateVector apply_phase_oracle(const StateVector &state, const ProblemPtr &problem, const RegisterLayout &layout);

/// Oracle operators over explicit slices, validated against the problem.
LinearOperator make_xor_oracle(const ProblemPtr &problem, const RegisterLayout &layout, Slice argument, Slice answer,
                               std::optional<Bits> fixed_setting = std::nullopt);
LinearOperator make_phase_oracle(const ProblemPtr &problem, const RegisterLayout &layout, Slice argument,
                                 double angle, std::optional<Bits> fixed_setting = std::nullopt);

}  // namespace tsow

#endif
