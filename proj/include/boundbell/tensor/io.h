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

#ifndef BOUNDBELL_TENSOR_IO_H
#define BOUNDBELL_TENSOR_IO_H

#include <filesystem>

#include "json.hpp"

#include "boundbell/tensor/sparse.h"
#include "boundbell/tensor/state.h"

// JSON file formats.
//   operator:   {"dims": [..], "entries": [[row, col, re, im], ...]}  nonzero entries only
//   pure state: {"dims": [..], "amps": [[idx, re, im], ...]}          nonzero amplitudes only
// Doubles are written in shortest round-trip form, so load(save(x)) is bit-exact.
// Unknown keys are ignored on load.

namespace boundbell::io {

using json = nlohmann::json;

json to_json(const DensityOperator &rho);
json to_json(const PureState &psi);
/// Same operator format, written from the stored nonzero entries.
json to_json(const SparseHermitian &rho);

/// Throws std::invalid_argument on malformed input.
DensityOperator operator_from_json(const json &j);
PureState pure_state_from_json(const json &j);

/// True when the object carries "amps" (pure state) rather than "entries".
bool is_pure_state_json(const json &j);

json read_json_file(const std::filesystem::path &path);
void write_json_file(const std::filesystem::path &path, const json &j);

}  // namespace boundbell::io

#endif
