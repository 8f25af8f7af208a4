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

#ifndef TSOW_CLI_H
#define TSOW_CLI_H

#include <ostream>

#include "tsow/error.h"

namespace tsow {

/// 2 for configuration errors, 3 for layout/calibration/search failures,
/// 4 for broken contracts.
int exit_code_for(ErrorCode code);

/// Entry point of the `tsow` tool. Reports go to `out` (or --out); every
/// nonzero exit also writes a {"schema", "error": {code, message}} object to
/// `err`.
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace tsow

#endif
