// Copyright 2026 The boundbell Authors
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

#ifndef BOUNDBELL_CLI_COMMANDS_H
#define BOUNDBELL_CLI_COMMANDS_H

#include <ostream>
#include <string>
#include <vector>

namespace boundbell::cli {

enum ExitCode : int {
    kOk = 0,
    kInternal = 1,
    kUsage = 2,
    kNotEntangled = 3,
    kPairUnavailable = 4,
    kNumericDegeneracy = 5,
};

/// Environment variable that overrides the default PSD tolerance.
inline constexpr const char *kToleranceEnv = "BOUNDBELL_TOL";

/// Runs one command. `args` excludes the program name, e.g.
/// {"bell", "--n", "8", "--settings", "xy"}. The report goes to the --out file
/// when given, otherwise to `out`. The one-line summary goes to `out` in the
/// first case and to `err` in the second. Diagnostics go to `err`.
/// Returns an ExitCode.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace boundbell::cli

#endif
