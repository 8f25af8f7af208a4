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

#ifndef TSOW_PROBLEM_IO_H
#define TSOW_PROBLEM_IO_H

#include <string>

#include "json.hpp"
#include "tsow/oracle_problem.h"

namespace tsow {

// Custom problem documents:
//
//   {
//     "name": "xor2",
//     "setting_width": 2,
//     "settings": ["00", "01", "0x2", ...],     // binary, or hex with 0x
//     "domain": ["0", "1"],                      // binary argument strings
//     "answers": {"00": ["0", "0"], ...},        // per setting, in domain order
//     "solutions": {"00": "0", ...},
//     "encoding": "compact" | "table"
//   }
//
// Keys of "answers" and "solutions" may use either notation; they are matched
// by value. Every validation failure throws kInvalidProblem with a message
// that names the offending key.

ProblemPtr problem_from_json(const nlohmann::json &doc);
ProblemPtr load_problem_file(const std::string &path);

/// Inverse of problem_from_json (binary notation throughout).
nlohmann::json problem_to_json(const OracleProblem &problem);

}  // namespace tsow

#endif
