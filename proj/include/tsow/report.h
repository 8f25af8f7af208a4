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

#ifndef TSOW_REPORT_H
#define TSOW_REPORT_H

#include <string>
#include <vector>

#include "json.hpp"
#include "tsow/verification.h"

namespace tsow {

using Json = nlohmann::ordered_json;

inline constexpr const char *kSchema = "tsow/1";

/// {"schema": "tsow/1", "command": command}
Json envelope(std::string_view command);
/// The error object printed on every nonzero exit.
Json error_json(std::string_view code, std::string_view message);

Json to_json(const SettingSet &cell);
Json to_json(const PredictionReport &report);
Json to_json(const ComparisonRow &row);
Json to_json(const RebuildReport &report);
Json to_json(const VerificationReport &report);
Json to_json(const SimonProbeReport &report);

/// Quotes a CSV field when it holds a comma, quote or newline.
std::string csv_field(const std::string &text);
/// printf `%.12g`.
std::string format_double(double value);

std::string comparison_csv(const std::vector<ComparisonRow> &rows);
std::string comparison_table(const std::vector<ComparisonRow> &rows);
std::string prediction_csv(const PredictionReport &report);
std::string prediction_table(const PredictionReport &report);
std::string verification_csv(const VerificationReport &report);
std::string verification_table(const VerificationReport &report);
std::string probe_csv(const SimonProbeReport &report);
std::string probe_table(const SimonProbeReport &report);

}  // namespace tsow

#endif
