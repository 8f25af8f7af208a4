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

#ifndef TSOW_MEASUREMENT_H
#define TSOW_MEASUREMENT_H

#include <string>
#include <utility>
#include <vector>

#include "tsow/state_vector.h"

namespace tsow {

enum class MeasurementMode { kCoordinate, kGf2Linear };

std::string_view mode_name(MeasurementMode mode);
/// Accepts "coordinate" and "gf2-linear"; throws kConfig otherwise.
MeasurementMode parse_mode(std::string_view text);

/// A partial measurement of one register: a list of GF(2) functionals over the
/// register's bits. Coordinate measurements are the special case where every
/// functional reads a single position.
///
/// Functionals are stored as masks in value convention (bit j of the mask
/// pairs with bit j of the register value, so position p is bit width-1-p).
/// The outcome label packs functional i's parity into bit (k-1-i).
class MeasurementSpec {
   public:
    /// Reads the given positions (0 = leftmost). Positions are sorted; the
    /// label lists their bits left to right.
    static MeasurementSpec coordinate(Register reg, int register_width, std::vector<int> positions);
    /// Throws kInvalidPair if the functionals are linearly dependent or zero.
    static MeasurementSpec gf2_linear(Register reg, int register_width, std::vector<uint64_t> functionals);
    /// A spec reading every bit of the register.
    static MeasurementSpec full(Register reg, int register_width);

    Register reg() const { return reg_; }
    MeasurementMode mode() const { return mode_; }
    int register_width() const { return width_; }
    int rank() const { return static_cast<int>(functionals_.size()); }
    const std::vector<uint64_t> &functionals() const { return functionals_; }
    /// Positions for coordinate specs, ascending; empty for gf2 specs.
    const std::vector<int> &positions() const { return positions_; }

    uint64_t outcome_count() const { return uint64_t{1} << rank(); }
    uint64_t label(uint64_t register_value) const;
    uint64_t label(const Bits &bits) const { return label(bits.value); }

    /// The same functionals applied to a different register.
    MeasurementSpec retarget(Register reg, int register_width) const;

    /// "[0,1]" for coordinate specs, "{10,11}" (functionals as position
    /// strings) for gf2 specs.
    std::string str() const;

    bool operator==(const MeasurementSpec &) const = default;

   private:
    Register reg_ = Register::kB;
    MeasurementMode mode_ = MeasurementMode::kCoordinate;
    int width_ = 0;
    std::vector<uint64_t> functionals_;
    std::vector<int> positions_;
};

/// Zeros every amplitude whose label differs from `outcome`; returns the
/// unnormalized remainder and its squared norm (the Born probability when the
/// input is normalized). Throws kUnknownOutcome for labels out of range.
std::pair<StateVector, double> project(const StateVector &state, const MeasurementSpec &spec, uint64_t outcome);

}  // namespace tsow

#endif
