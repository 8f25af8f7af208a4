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

#ifndef TSOW_STATE_VECTOR_H
#define TSOW_STATE_VECTOR_H

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "tsow/oracle_problem.h"

namespace tsow {

using Amplitude = std::complex<double>;

inline constexpr double kStateTolerance = 1e-9;
inline constexpr double kNormDriftTolerance = 1e-12;

/// Qubit cap for any layout. Defaults to 24; the TSOW_MAX_QUBITS environment
/// variable overrides it (must parse as an integer in [1, 30]).
int max_qubits();

enum class Register { kB, kA, kW };

/// Contiguous run of qubits in the global basis index. `offset` is the bit
/// position of the run's least significant qubit.
struct Slice {
    int offset = 0;
    int width = 0;

    uint64_t extract(uint64_t index) const { return (index >> offset) & low_mask(width); }
    uint64_t mask() const { return low_mask(width) << offset; }
    bool operator==(const Slice &) const = default;
};

/// Registers B (problem setting), A (argument / solution) and W (workspace).
/// Basis convention: B holds the most significant bits, then A, then W.
struct RegisterLayout {
    int b_qubits = 0;
    int a_qubits = 0;
    int w_qubits = 0;

    /// Throws kLayoutMismatch when negative or over max_qubits().
    RegisterLayout(int b, int a, int w);
    RegisterLayout() = default;

    int total() const { return b_qubits + a_qubits + w_qubits; }
    uint64_t dimension() const { return uint64_t{1} << total(); }
    Slice slice(Register r) const;
    int width(Register r) const { return slice(r).width; }

    bool operator==(const RegisterLayout &) const = default;
};

/// Dense complex amplitudes over B (x) A (x) W.
class StateVector {
   public:
    /// |0...0>.
    explicit StateVector(const RegisterLayout &layout);
    StateVector(const RegisterLayout &layout, std::vector<Amplitude> amplitudes, bool normalized);

    /// Computational basis state |b>_B |a>_A |w>_W.
    static StateVector basis(const RegisterLayout &layout, uint64_t b, uint64_t a, uint64_t w);

    const RegisterLayout &layout() const { return layout_; }
    std::span<const Amplitude> amplitudes() const { return amps_; }
    std::span<Amplitude> mutable_amplitudes() { return amps_; }
    const Amplitude &operator[](uint64_t i) const { return amps_[i]; }
    Amplitude &operator[](uint64_t i) { return amps_[i]; }
    uint64_t size() const { return amps_.size(); }

    bool normalized() const { return normalized_; }
    void set_normalized(bool flag) { normalized_ = flag; }

    double norm_squared() const;
    double norm() const;
    /// Returns a unit-norm copy. Throws kLengthMismatch on the zero vector.
    StateVector normalized_copy() const;

    uint64_t index(uint64_t b, uint64_t a, uint64_t w) const;

    /// Probability mass on each value of one register.
    std::vector<double> register_marginal(Register r) const;

   private:
    RegisterLayout layout_;
    std::vector<Amplitude> amps_;
    bool normalized_ = true;
};

/// (1/sqrt|sigma|) sum_b |b>_B |0>_A |0>_W. The B register must match the
/// setting width and A must hold the solution.
StateVector init_superposed_input(const OracleProblem &problem, const RegisterLayout &layout);

/// Uniform superposition over `cell` in B, zeros elsewhere.
StateVector cell_superposition(const SettingSet &cell, const RegisterLayout &layout);

/// |<s1|s2>|^2 after normalizing both. kLengthMismatch on different sizes.
double fidelity(const StateVector &s1, const StateVector &s2);

/// Max |s1_i - s2_i|.
double max_abs_difference(const StateVector &s1, const StateVector &s2);

/// One "bitstring<TAB>re<TAB>im" line per amplitude with |amp| > 1e-12,
/// in basis order. The bit string is B, then A, then W.
void dump_state(std::ostream &out, const StateVector &state);

}  // namespace tsow

#endif
