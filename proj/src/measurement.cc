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

#include "tsow/measurement.h"

#include <algorithm>

#include "tsow/error.h"
#include "tsow/gf2.h"

namespace tsow {

std::string_view mode_name(MeasurementMode mode) {
    return mode == MeasurementMode::kCoordinate ? "coordinate" : "gf2-linear";
}

MeasurementMode parse_mode(std::string_view text) {
    if (text == "coordinate") {
        return MeasurementMode::kCoordinate;
    }
    if (text == "gf2-linear" || text == "gf2") {
        return MeasurementMode::kGf2Linear;
    }
    throw Error(ErrorCode::kConfig, "unknown mode '" + std::string(text) + "' (coordinate | gf2-linear)");
}

MeasurementSpec MeasurementSpec::coordinate(Register reg, int register_width, std::vector<int> positions) {
    std::sort(positions.begin(), positions.end());
    if (std::adjacent_find(positions.begin(), positions.end()) != positions.end()) {
        throw Error(ErrorCode::kInvalidPair, "repeated position in coordinate measurement");
    }
    MeasurementSpec spec;
    spec.reg_ = reg;
    spec.mode_ = MeasurementMode::kCoordinate;
    spec.width_ = register_width;
    for (int p : positions) {
        if (p < 0 || p >= register_width) {
            throw Error(ErrorCode::kInvalidPair, "position " + std::to_string(p) + " outside register of width " +
                                                     std::to_string(register_width));
        }
        spec.functionals_.push_back(uint64_t{1} << (register_width - 1 - p));
    }
    spec.positions_ = std::move(positions);
    return spec;
}

MeasurementSpec MeasurementSpec::gf2_linear(Register reg, int register_width, std::vector<uint64_t> functionals) {
    for (uint64_t f : functionals) {
        if (f == 0 || (f & ~low_mask(register_width)) != 0) {
            throw Error(ErrorCode::kInvalidPair, "functional is zero or wider than the register");
        }
    }
    if (gf2::rank(functionals) != static_cast<int>(functionals.size())) {
        throw Error(ErrorCode::kInvalidPair, "functionals are linearly dependent");
    }
    MeasurementSpec spec;
    spec.reg_ = reg;
    spec.mode_ = MeasurementMode::kGf2Linear;
    spec.width_ = register_width;
    spec.functionals_ = std::move(functionals);
    return spec;
}

MeasurementSpec MeasurementSpec::full(Register reg, int register_width) {
    std::vector<int> all(static_cast<size_t>(register_width));
    for (int i = 0; i < register_width; ++i) {
        all[static_cast<size_t>(i)] = i;
    }
    return coordinate(reg, register_width, all);
}

uint64_t MeasurementSpec::label(uint64_t register_value) const {
    uint64_t out = 0;
    for (uint64_t f : functionals_) {
        out = (out << 1) | static_cast<uint64_t>(parity(f & register_value));
    }
    return out;
}

MeasurementSpec MeasurementSpec::retarget(Register reg, int register_width) const {
    if (register_width != width_) {
        throw Error(ErrorCode::kLayoutMismatch, "cannot retarget a measurement to a register of different width");
    }
    MeasurementSpec copy = *this;
    copy.reg_ = reg;
    return copy;
}

std::string MeasurementSpec::str() const {
    std::string out;
    if (mode_ == MeasurementMode::kCoordinate) {
        out = "[";
        for (size_t i = 0; i < positions_.size(); ++i) {
            out += (i ? "," : "") + std::to_string(positions_[i]);
        }
        return out + "]";
    }
    out = "{";
    for (size_t i = 0; i < functionals_.size(); ++i) {
        out += (i ? "," : "") + Bits(functionals_[i], width_).str();
    }
    return out + "}";
}

std::pair<StateVector, double> project(const StateVector &state, const MeasurementSpec &spec, uint64_t outcome) {
    if (outcome >= spec.outcome_count()) {
        throw Error(ErrorCode::kUnknownOutcome, "outcome " + std::to_string(outcome) + " is not a label of " +
                                                    spec.str());
    }
    const Slice slice = state.layout().slice(spec.reg());
    if (slice.width != spec.register_width()) {
        throw Error(ErrorCode::kLayoutMismatch, "measurement register width does not match the layout");
    }
    StateVector out = state;
    double probability = 0.0;
    auto amps = out.mutable_amplitudes();
    for (uint64_t i = 0; i < amps.size(); ++i) {
        if (spec.label(slice.extract(i)) != outcome) {
            amps[i] = 0.0;
        } else {
            probability += std::norm(amps[i]);
        }
    }
    out.set_normalized(false);
    return {std::move(out), probability};
}

}  // namespace tsow
