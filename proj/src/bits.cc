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

#include "tsow/bits.h"

#include <algorithm>

#include "tsow/error.h"

namespace tsow {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::kSizeLimit: return "SIZE_LIMIT";
        case ErrorCode::kInvalidSubset: return "INVALID_SUBSET";
        case ErrorCode::kInvalidProblem: return "INVALID_PROBLEM";
        case ErrorCode::kLayoutMismatch: return "LAYOUT_MISMATCH";
        case ErrorCode::kPhaseNeedsBinary: return "PHASE_NEEDS_BINARY";
        case ErrorCode::kUnknownOutcome: return "UNKNOWN_OUTCOME";
        case ErrorCode::kLengthMismatch: return "LENGTH_MISMATCH";
        case ErrorCode::kNotUnitary: return "NOT_UNITARY";
        case ErrorCode::kUseLongVariant: return "USE_LONG_VARIANT";
        case ErrorCode::kCalibrationFailed: return "CALIBRATION_FAILED";
        case ErrorCode::kSamplingStall: return "SAMPLING_STALL";
        case ErrorCode::kOutputNotCanonical: return "OUTPUT_NOT_CANONICAL";
        case ErrorCode::kInvalidPair: return "INVALID_PAIR";
        case ErrorCode::kInstanceMismatch: return "INSTANCE_MISMATCH";
        case ErrorCode::kNoValidPair: return "NO_VALID_PAIR";
        case ErrorCode::kModeNotSupported: return "MODE_NOT_SUPPORTED";
        case ErrorCode::kUndetermined: return "UNDETERMINED";
        case ErrorCode::kSearchBudgetExceeded: return "SEARCH_BUDGET_EXCEEDED";
        case ErrorCode::kConfig: return "CONFIG";
        case ErrorCode::kVerificationFailed: return "VERIFICATION_FAILED";
    }
    return "UNKNOWN";
}

Bits::Bits(uint64_t v, int w) : value(v), width(w) {
    if (w < 0 || w > 64) {
        throw Error(ErrorCode::kSizeLimit, "bit width " + std::to_string(w) + " outside [0, 64]");
    }
    if ((v & ~low_mask(w)) != 0) {
        throw Error(ErrorCode::kInvalidProblem, "value does not fit in " + std::to_string(w) + " bits");
    }
}

Bits Bits::parse(std::string_view text) {
    if (text.size() > 64) {
        throw Error(ErrorCode::kSizeLimit, "bit string longer than 64: '" + std::string(text) + "'");
    }
    uint64_t v = 0;
    for (char c : text) {
        if (c != '0' && c != '1') {
            throw Error(ErrorCode::kConfig, "not a bit string: '" + std::string(text) + "'");
        }
        v = (v << 1) | static_cast<uint64_t>(c == '1');
    }
    return Bits(v, static_cast<int>(text.size()));
}

Bits Bits::parse_with_width(std::string_view text, int width) {
    if (text.size() > 2 && (text.substr(0, 2) == "0x" || text.substr(0, 2) == "0X")) {
        uint64_t v = 0;
        auto digits = text.substr(2);
        if (digits.size() > 16) {
            throw Error(ErrorCode::kSizeLimit, "hex string too long: '" + std::string(text) + "'");
        }
        for (char c : digits) {
            int d;
            if (c >= '0' && c <= '9') {
                d = c - '0';
            } else if (c >= 'a' && c <= 'f') {
                d = c - 'a' + 10;
            } else if (c >= 'A' && c <= 'F') {
                d = c - 'A' + 10;
            } else {
                throw Error(ErrorCode::kConfig, "not a hex string: '" + std::string(text) + "'");
            }
            v = (v << 4) | static_cast<uint64_t>(d);
        }
        if ((v & ~low_mask(width)) != 0) {
            throw Error(ErrorCode::kConfig, "hex value '" + std::string(text) + "' exceeds width " +
                                                std::to_string(width));
        }
        return Bits(v, width);
    }
    Bits b = parse(text);
    if (b.width != width) {
        throw Error(ErrorCode::kConfig, "'" + std::string(text) + "' has width " + std::to_string(b.width) +
                                            ", expected " + std::to_string(width));
    }
    return b;
}

std::string Bits::str() const {
    std::string out(static_cast<size_t>(width), '0');
    for (int i = 0; i < width; ++i) {
        if (at(i)) {
            out[static_cast<size_t>(i)] = '1';
        }
    }
    return out;
}

SettingSet::SettingSet(std::vector<Bits> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    for (size_t i = 0; i < members_.size(); ++i) {
        if (members_[i].width != members_.front().width) {
            throw Error(ErrorCode::kInvalidProblem, "setting set mixes widths");
        }
        if (i > 0 && members_[i] == members_[i - 1]) {
            throw Error(ErrorCode::kInvalidProblem, "duplicate setting " + members_[i].str());
        }
    }
}

SettingSet::SettingSet(std::initializer_list<const char *> members) {
    std::vector<Bits> parsed;
    for (const char *m : members) {
        parsed.push_back(Bits::parse(m));
    }
    *this = SettingSet(std::move(parsed));
}

std::optional<size_t> SettingSet::index_of(const Bits &b) const {
    auto it = std::lower_bound(members_.begin(), members_.end(), b);
    if (it == members_.end() || *it != b) {
        return std::nullopt;
    }
    return static_cast<size_t>(it - members_.begin());
}

bool SettingSet::is_subset_of(const SettingSet &other) const {
    return std::includes(other.members_.begin(), other.members_.end(), members_.begin(), members_.end());
}

std::string SettingSet::str() const {
    std::string out = "{";
    for (size_t i = 0; i < members_.size(); ++i) {
        if (i > 0) {
            out += ",";
        }
        out += members_[i].str();
    }
    return out + "}";
}

}  // namespace tsow
