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

#include "tsow/state_vector.h"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <string>

#include "tsow/error.h"

namespace tsow {

int max_qubits() {
    const char *env = std::getenv("TSOW_MAX_QUBITS");
    if (env == nullptr || *env == '\0') {
        return 24;
    }
    char *end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 1 || v > 30) {
        throw Error(ErrorCode::kConfig, std::string("TSOW_MAX_QUBITS must be an integer in [1, 30], got '") + env + "'");
    }
    return static_cast<int>(v);
}

RegisterLayout::RegisterLayout(int b, int a, int w) : b_qubits(b), a_qubits(a), w_qubits(w) {
    if (b < 0 || a < 0 || w < 0) {
        throw Error(ErrorCode::kLayoutMismatch, "negative register width");
    }
    if (total() > max_qubits()) {
        throw Error(ErrorCode::kLayoutMismatch, "layout needs " + std::to_string(total()) + " qubits, cap is " +
                                                    std::to_string(max_qubits()));
    }
}

Slice RegisterLayout::slice(Register r) const {
    switch (r) {
        case Register::kB: return {a_qubits + w_qubits, b_qubits};
        case Register::kA: return {w_qubits, a_qubits};
        case Register::kW: return {0, w_qubits};
    }
    return {};
}

StateVector::StateVector(const RegisterLayout &layout) : layout_(layout), amps_(layout.dimension()) {
    amps_[0] = 1.0;
}

StateVector::StateVector(const RegisterLayout &layout, std::vector<Amplitude> amplitudes, bool normalized)
    : layout_(layout), amps_(std::move(amplitudes)), normalized_(normalized) {
    if (amps_.size() != layout_.dimension()) {
        throw Error(ErrorCode::kLengthMismatch, "amplitude count " + std::to_string(amps_.size()) +
                                                    " does not match layout dimension " +
                                                    std::to_string(layout_.dimension()));
    }
    if (normalized_ && std::abs(norm() - 1.0) > kStateTolerance) {
        throw Error(ErrorCode::kLengthMismatch, "state flagged normalized has norm " + std::to_string(norm()));
    }
}

StateVector StateVector::basis(const RegisterLayout &layout, uint64_t b, uint64_t a, uint64_t w) {
    StateVector s(layout);
    s.amps_[0] = 0.0;
    s.amps_[s.index(b, a, w)] = 1.0;
    return s;
}

uint64_t StateVector::index(uint64_t b, uint64_t a, uint64_t w) const {
    if ((b & ~low_mask(layout_.b_qubits)) || (a & ~low_mask(layout_.a_qubits)) || (w & ~low_mask(layout_.w_qubits))) {
        throw Error(ErrorCode::kLayoutMismatch, "register value does not fit its register");
    }
    return (b << (layout_.a_qubits + layout_.w_qubits)) | (a << layout_.w_qubits) | w;
}

double StateVector::norm_squared() const {
    double total = 0;
    for (const Amplitude &x : amps_) {
        total += std::norm(x);
    }
    return total;
}

double StateVector::norm() const { return std::sqrt(norm_squared()); }

StateVector StateVector::normalized_copy() const {
    double n = norm();
    if (n == 0.0) {
        throw Error(ErrorCode::kLengthMismatch, "cannot normalize the zero vector");
    }
    StateVector out = *this;
    for (Amplitude &x : out.amps_) {
        x /= n;
    }
    out.normalized_ = true;
    return out;
}

std::vector<double> StateVector::register_marginal(Register r) const {
    Slice s = layout_.slice(r);
    std::vector<double> out(size_t{1} << s.width, 0.0);
    for (uint64_t i = 0; i < amps_.size(); ++i) {
        out[s.extract(i)] += std::norm(amps_[i]);
    }
    return out;
}

StateVector init_superposed_input(const OracleProblem &problem, const RegisterLayout &layout) {
    if (layout.b_qubits != problem.setting_width()) {
        throw Error(ErrorCode::kLayoutMismatch, "B register has " + std::to_string(layout.b_qubits) +
                                                    " qubits, settings need " +
                                                    std::to_string(problem.setting_width()));
    }
    if (layout.a_qubits < problem.solution_width()) {
        throw Error(ErrorCode::kLayoutMismatch, "A register narrower than the solution width");
    }
    return cell_superposition(problem.sigma(), layout);
}

StateVector cell_superposition(const SettingSet &cell, const RegisterLayout &layout) {
    if (cell.empty() || cell.width() != layout.b_qubits) {
        throw Error(ErrorCode::kLayoutMismatch, "cell does not fit register B");
    }
    std::vector<Amplitude> amps(layout.dimension());
    const double amp = 1.0 / std::sqrt(static_cast<double>(cell.size()));
    const int shift = layout.a_qubits + layout.w_qubits;
    for (const Bits &b : cell) {
        amps[b.value << shift] = amp;
    }
    return StateVector(layout, std::move(amps), true);
}

double fidelity(const StateVector &s1, const StateVector &s2) {
    if (s1.size() != s2.size()) {
        throw Error(ErrorCode::kLengthMismatch, "fidelity of states with " + std::to_string(s1.size()) + " and " +
                                                    std::to_string(s2.size()) + " amplitudes");
    }
    Amplitude overlap = 0.0;
    for (uint64_t i = 0; i < s1.size(); ++i) {
        overlap += std::conj(s1[i]) * s2[i];
    }
    double denom = s1.norm_squared() * s2.norm_squared();
    if (denom == 0.0) {
        return 0.0;
    }
    return std::min(1.0, std::norm(overlap) / denom);
}

double max_abs_difference(const StateVector &s1, const StateVector &s2) {
    if (s1.size() != s2.size()) {
        throw Error(ErrorCode::kLengthMismatch, "comparing states of different sizes");
    }
    double worst = 0.0;
    for (uint64_t i = 0; i < s1.size(); ++i) {
        worst = std::max(worst, std::abs(s1[i] - s2[i]));
    }
    return worst;
}

void dump_state(std::ostream &out, const StateVector &state) {
    const int total = state.layout().total();
    char buf[64];
    for (uint64_t i = 0; i < state.size(); ++i) {
        const Amplitude &x = state[i];
        if (std::abs(x) <= 1e-12) {
            continue;
        }
        out << Bits(i, total).str();
        // Components below 1e-15 are rounding residue; print them as 0.
        auto clean = [](double v) { return std::abs(v) < 1e-15 ? 0.0 : v; };
        std::snprintf(buf, sizeof buf, "\t%.15g\t%.15g\n", clean(x.real()), clean(x.imag()));
        out << buf;
    }
}

}  // namespace tsow
