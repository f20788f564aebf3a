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

#ifndef BOUNDBELL_ERRORS_H
#define BOUNDBELL_ERRORS_H

#include <stdexcept>

namespace boundbell {

// Contract violations on inputs (bad indices, ranges, non-unit vectors...)
// are reported with std::invalid_argument. The types below are the protocol
// outcomes a caller is expected to branch on.

/// The input pure state is a product state, so nothing can be extracted.
struct NotEntangledError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A requested party pair does not survive the extraction protocol.
struct PairUnavailableError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A structural guarantee failed only because of floating-point tolerance.
struct NumericDegeneracyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace boundbell

#endif
