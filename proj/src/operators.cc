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

#include "tsow/operators.h"

#include <algorithm>
#include <cmath>

#include "tsow/error.h"

namespace tsow {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

uint64_t targets_mask(const std::vector<int> &targets) {
    uint64_t m = 0;
    for (int t : targets) {
        m |= uint64_t{1} << t;
    }
    return m;
}

void check_targets(const std::vector<int> &targets, const char *what) {
    std::vector<int> sorted = targets;
    std::sort(sorted.begin(), sorted.end());
    if (targets.empty() || sorted.front() < 0 || sorted.back() > 62 ||
        std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw Error(ErrorCode::kLayoutMismatch, std::string(what) + ": bad target list");
    }
}

uint64_t support(const LinearOperator::Variant &op) {
    return std::visit(Overloaded{
                          [](const DenseOp &d) { return targets_mask(d.targets); },
                          [](const PhaseOracleOp &p) { return p.argument.mask(); },
                          [](const XorOracleOp &x) { return x.argument.mask() | x.answer.mask(); },
                          [](const PermutationOp &p) { return targets_mask(p.targets); },
                          [](const ReflectionOp &r) { return r.target.mask(); },
                      },
                      op);
}

uint64_t read_mask(const LinearOperator::Variant &op) {
    return std::visit(Overloaded{
                          [](const PhaseOracleOp &p) { return p.fixed_setting ? 0 : p.setting.mask(); },
                          [](const XorOracleOp &x) { return x.fixed_setting ? 0 : x.setting.mask(); },
                          [](const auto &) -> uint64_t { return 0; },
                      },
                      op);
}

/// Gathers the 2^k amplitudes addressed by `targets` around each base index
/// and hands them to `fn` for in-place update.
template <class Fn>
void for_each_block(StateVector &state, const std::vector<int> &targets, Fn &&fn) {
    const size_t k = targets.size();
    const uint64_t mask = targets_mask(targets);
    std::vector<uint64_t> offsets(size_t{1} << k);
    for (uint64_t local = 0; local < offsets.size(); ++local) {
        uint64_t off = 0;
        for (size_t j = 0; j < k; ++j) {
            if (local & (uint64_t{1} << (k - 1 - j))) {
                off |= uint64_t{1} << targets[j];
            }
        }
        offsets[local] = off;
    }
    std::vector<Amplitude> block(offsets.size());
    auto amps = state.mutable_amplitudes();
    for (uint64_t base = 0; base < amps.size(); ++base) {
        if (base & mask) {
            continue;
        }
        for (size_t i = 0; i < offsets.size(); ++i) {
            block[i] = amps[base | offsets[i]];
        }
        fn(block);
        for (size_t i = 0; i < offsets.size(); ++i) {
            amps[base | offsets[i]] = block[i];
        }
    }
}

/// Setting index for the B value at `index`, cached across runs of equal B.
class SettingLookup {
   public:
    SettingLookup(const OracleProblem &problem, Slice setting, const std::optional<Bits> &fixed)
        : problem_(problem), setting_(setting) {
        if (fixed) {
            fixed_ = problem.setting_index(*fixed);
        }
    }

    std::optional<size_t> at(uint64_t index) {
        if (fixed_) {
            return fixed_;
        }
        uint64_t b = setting_.extract(index);
        if (!valid_ || b != last_b_) {
            last_b_ = b;
            valid_ = true;
            last_ = problem_.sigma().index_of(Bits(b, setting_.width));
        }
        return last_;
    }

   private:
    const OracleProblem &problem_;
    Slice setting_;
    std::optional<size_t> fixed_;
    bool valid_ = false;
    uint64_t last_b_ = 0;
    std::optional<size_t> last_;
};

void apply_dense(StateVector &state, const DenseOp &op) {
    const size_t dim = size_t{1} << op.targets.size();
    std::vector<Amplitude> out(dim);
    for_each_block(state, op.targets, [&](std::vector<Amplitude> &block) {
        for (size_t r = 0; r < dim; ++r) {
            Amplitude acc = 0.0;
            for (size_t c = 0; c < dim; ++c) {
                acc += op.matrix[r * dim + c] * block[c];
            }
            out[r] = acc;
        }
        block = out;
    });
}

void apply_phase_oracle_op(StateVector &state, const PhaseOracleOp &op) {
    SettingLookup lookup(*op.problem, op.setting, op.fixed_setting);
    const Amplitude kick = std::polar(1.0, op.angle);
    auto amps = state.mutable_amplitudes();
    for (uint64_t i = 0; i < amps.size(); ++i) {
        if (amps[i] == 0.0) {
            continue;
        }
        auto si = lookup.at(i);
        if (!si) {
            continue;
        }
        auto ai = op.problem->domain_index_of(op.argument.extract(i));
        if (ai && op.problem->answer_at(*si, *ai) != 0) {
            amps[i] *= kick;
        }
    }
}

void apply_xor_oracle_op(StateVector &state, const XorOracleOp &op) {
    SettingLookup lookup(*op.problem, op.setting, op.fixed_setting);
    auto amps = state.mutable_amplitudes();
    for (uint64_t i = 0; i < amps.size(); ++i) {
        auto si = lookup.at(i);
        if (!si) {
            continue;
        }
        auto ai = op.problem->domain_index_of(op.argument.extract(i));
        if (!ai) {
            continue;
        }
        uint64_t j = i ^ (op.problem->answer_at(*si, *ai) << op.answer.offset);
        if (j > i) {
            std::swap(amps[i], amps[j]);
        }
    }
}

void apply_permutation(StateVector &state, const PermutationOp &op) {
    std::vector<Amplitude> out(op.table.size());
    for_each_block(state, op.targets, [&](std::vector<Amplitude> &block) {
        for (size_t i = 0; i < op.table.size(); ++i) {
            out[op.table[i]] = block[i];
        }
        block = out;
    });
}

void apply_reflection(StateVector &state, const ReflectionOp &op) {
    auto amps = state.mutable_amplitudes();
    const uint64_t mask = op.target.mask();
    const Amplitude scale = op.phase - 1.0;
    for (uint64_t base = 0; base < amps.size(); ++base) {
        if (base & mask) {
            continue;
        }
        Amplitude overlap = 0.0;
        for (uint64_t j = 0; j < op.axis.size(); ++j) {
            overlap += std::conj(op.axis[j]) * amps[base | (j << op.target.offset)];
        }
        for (uint64_t j = 0; j < op.axis.size(); ++j) {
            Amplitude &x = amps[base | (j << op.target.offset)];
            x = op.global * (x + scale * overlap * op.axis[j]);
        }
    }
}

}  // namespace

LinearOperator::LinearOperator(Variant op) : op_(std::move(op)) {
    std::visit(Overloaded{
                   [](const DenseOp &d) {
                       check_targets(d.targets, "dense operator");
                       const size_t dim = size_t{1} << d.targets.size();
                       if (d.matrix.size() != dim * dim) {
                           throw Error(ErrorCode::kLayoutMismatch, "dense operator matrix has wrong size");
                       }
                       for (size_t r = 0; r < dim; ++r) {
                           for (size_t c = 0; c < dim; ++c) {
                               Amplitude dot = 0.0;
                               for (size_t k = 0; k < dim; ++k) {
                                   dot += std::conj(d.matrix[k * dim + r]) * d.matrix[k * dim + c];
                               }
                               if (std::abs(dot - (r == c ? 1.0 : 0.0)) > kStateTolerance) {
                                   throw Error(ErrorCode::kNotUnitary, "dense operator '" + d.label + "' is not unitary");
                               }
                           }
                       }
                   },
                   [](const PhaseOracleOp &p) {
                       if (!p.problem || p.problem->answer_width() != 1) {
                           throw Error(ErrorCode::kPhaseNeedsBinary, "phase oracle needs a 1-bit answer");
                       }
                   },
                   [](const XorOracleOp &x) {
                       if (!x.problem) {
                           throw Error(ErrorCode::kLayoutMismatch, "xor oracle without a problem");
                       }
                       if ((x.argument.mask() & x.answer.mask()) || (x.answer.mask() & read_mask(x))) {
                           throw Error(ErrorCode::kLayoutMismatch, "xor oracle answer overlaps its inputs");
                       }
                   },
                   [](const PermutationOp &p) {
                       check_targets(p.targets, "permutation");
                       std::vector<bool> hit(p.table.size(), false);
                       if (p.table.size() != (size_t{1} << p.targets.size())) {
                           throw Error(ErrorCode::kNotUnitary, "permutation table has wrong size");
                       }
                       for (uint64_t v : p.table) {
                           if (v >= hit.size() || hit[v]) {
                               throw Error(ErrorCode::kNotUnitary, "permutation '" + p.label + "' is not bijective");
                           }
                           hit[v] = true;
                       }
                   },
                   [](const ReflectionOp &r) {
                       if (r.axis.size() != (size_t{1} << r.target.width)) {
                           throw Error(ErrorCode::kLayoutMismatch, "reflection axis has wrong length");
                       }
                       double n = 0.0;
                       for (const Amplitude &a : r.axis) {
                           n += std::norm(a);
                       }
                       if (std::abs(n - 1.0) > kStateTolerance || std::abs(std::abs(r.phase) - 1.0) > kStateTolerance ||
                           std::abs(std::abs(r.global) - 1.0) > kStateTolerance) {
                           throw Error(ErrorCode::kNotUnitary, "reflection '" + r.label + "' is not unitary");
                       }
                   },
               },
               op_);
}

OperatorKind LinearOperator::kind() const {
    return std::visit(Overloaded{
                          [](const DenseOp &) { return OperatorKind::kDenseOnSubset; },
                          [](const PhaseOracleOp &) { return OperatorKind::kDiagonalPhase; },
                          [](const XorOracleOp &) { return OperatorKind::kBasisPermutation; },
                          [](const PermutationOp &) { return OperatorKind::kBasisPermutation; },
                          [](const ReflectionOp &) { return OperatorKind::kReflection; },
                      },
                      op_);
}

bool LinearOperator::is_oracle() const {
    return std::holds_alternative<PhaseOracleOp>(op_) || std::holds_alternative<XorOracleOp>(op_);
}

std::string LinearOperator::describe() const {
    return std::visit(Overloaded{
                          [](const DenseOp &d) { return "dense:" + d.label; },
                          [](const PhaseOracleOp &p) { return "phase-oracle:" + std::to_string(p.angle); },
                          [](const XorOracleOp &) { return std::string("xor-oracle"); },
                          [](const PermutationOp &p) { return "permutation:" + p.label; },
                          [](const ReflectionOp &r) { return "reflection:" + r.label; },
                      },
                      op_);
}

void LinearOperator::apply(StateVector &state) const {
    const uint64_t needed = support(op_) | read_mask(op_);
    if (needed & ~low_mask(state.layout().total())) {
        throw Error(ErrorCode::kLayoutMismatch, describe() + " addresses qubits outside the state");
    }
    std::visit(Overloaded{
                   [&](const DenseOp &d) { apply_dense(state, d); },
                   [&](const PhaseOracleOp &p) { apply_phase_oracle_op(state, p); },
                   [&](const XorOracleOp &x) { apply_xor_oracle_op(state, x); },
                   [&](const PermutationOp &p) { apply_permutation(state, p); },
                   [&](const ReflectionOp &r) { apply_reflection(state, r); },
               },
               op_);
}

LinearOperator LinearOperator::adjoint() const {
    return std::visit(Overloaded{
                          [](const DenseOp &d) {
                              DenseOp out = d;
                              const size_t dim = size_t{1} << d.targets.size();
                              for (size_t r = 0; r < dim; ++r) {
                                  for (size_t c = 0; c < dim; ++c) {
                                      out.matrix[r * dim + c] = std::conj(d.matrix[c * dim + r]);
                                  }
                              }
                              return LinearOperator(out);
                          },
                          [](const PhaseOracleOp &p) {
                              PhaseOracleOp out = p;
                              out.angle = -p.angle;
                              return LinearOperator(out);
                          },
                          [](const XorOracleOp &x) { return LinearOperator(x); },
                          [](const PermutationOp &p) {
                              PermutationOp out = p;
                              for (size_t i = 0; i < p.table.size(); ++i) {
                                  out.table[p.table[i]] = i;
                              }
                              return LinearOperator(out);
                          },
                          [](const ReflectionOp &r) {
                              ReflectionOp out = r;
                              out.phase = std::conj(r.phase);
                              out.global = std::conj(r.global);
                              return LinearOperator(out);
                          },
                      },
                      op_);
}

bool LinearOperator::touches_register(const RegisterLayout &layout, Register r) const {
    return (support(op_) & layout.slice(r).mask()) != 0;
}

LinearOperator hadamard(int qubit) {
    const double h = 1.0 / std::sqrt(2.0);
    return LinearOperator(DenseOp{{qubit}, {h, h, h, -h}, "H"});
}

LinearOperator pauli_x(int qubit) { return LinearOperator(PermutationOp{{qubit}, {1, 0}, "X"}); }

int AlgorithmUnitary::query_count() const {
    return static_cast<int>(std::count_if(steps.begin(), steps.end(), [](const Step &s) { return s.query; }));
}

StateVector apply_forward(const StateVector &state, const AlgorithmUnitary &algo) {
    if (state.layout() != algo.layout) {
        throw Error(ErrorCode::kLayoutMismatch, "state layout does not match algorithm " + algo.name);
    }
    StateVector out = state;
    for (const Step &s : algo.steps) {
        s.op.apply(out);
    }
    return out;
}

StateVector apply_backward(const StateVector &state, const AlgorithmUnitary &algo) {
    if (state.layout() != algo.layout) {
        throw Error(ErrorCode::kLayoutMismatch, "state layout does not match algorithm " + algo.name);
    }
    StateVector out = state;
    for (auto it = algo.steps.rbegin(); it != algo.steps.rend(); ++it) {
        it->op.adjoint().apply(out);
    }
    return out;
}

LinearOperator make_xor_oracle(const ProblemPtr &problem, const RegisterLayout &layout, Slice argument, Slice answer,
                               std::optional<Bits> fixed_setting) {
    if (argument.width != problem->argument_width()) {
        throw Error(ErrorCode::kLayoutMismatch, "argument slice width " + std::to_string(argument.width) +
                                                    " != argument width " +
                                                    std::to_string(problem->argument_width()));
    }
    if (answer.width < problem->answer_width()) {
        throw Error(ErrorCode::kLayoutMismatch, "answer slice narrower than the answer width");
    }
    answer.width = problem->answer_width();
    Slice setting = layout.slice(Register::kB);
    if (!fixed_setting && setting.width != problem->setting_width()) {
        throw Error(ErrorCode::kLayoutMismatch, "register B does not hold a setting");
    }
    return LinearOperator(XorOracleOp{problem, argument, answer, setting, std::move(fixed_setting)});
}

LinearOperator make_phase_oracle(const ProblemPtr &problem, const RegisterLayout &layout, Slice argument,
                                 double angle, std::optional<Bits> fixed_setting) {
    if (problem->answer_width() != 1) {
        throw Error(ErrorCode::kPhaseNeedsBinary, "phase oracle needs a 1-bit answer, " + problem->name() + " has " +
                                                      std::to_string(problem->answer_width()));
    }
    if (argument.width != problem->argument_width()) {
        throw Error(ErrorCode::kLayoutMismatch, "argument slice width does not match the problem");
    }
    Slice setting = layout.slice(Register::kB);
    if (!fixed_setting && setting.width != problem->setting_width()) {
        throw Error(ErrorCode::kLayoutMismatch, "register B does not hold a setting");
    }
    return LinearOperator(PhaseOracleOp{problem, argument, setting, angle, std::move(fixed_setting)});
}

StateVector apply_xor_oracle(const StateVector &state, const ProblemPtr &problem, const RegisterLayout &layout) {
    if (state.layout() != layout) {
        throw Error(ErrorCode::kLayoutMismatch, "state layout differs from the given layout");
    }
    if (layout.w_qubits < problem->answer_width()) {
        throw Error(ErrorCode::kLayoutMismatch, "W narrower than the answer width");
    }
    auto op = make_xor_oracle(problem, layout, layout.slice(Register::kA), Slice{0, problem->answer_width()});
    StateVector out = state;
    op.apply(out);
    return out;
}

StateVector apply_phase_oracle(const StateVector &state, const ProblemPtr &problem, const RegisterLayout &layout) {
    if (state.layout() != layout) {
        throw Error(ErrorCode::kLayoutMismatch, "state layout differs from the given layout");
    }
    auto op = make_phase_oracle(problem, layout, layout.slice(Register::kA), M_PI);
    StateVector out = state;
    op.apply(out);
    return out;
}

}  // namespace tsow
