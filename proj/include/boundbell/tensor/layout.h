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

#ifndef BOUNDBELL_TENSOR_LAYOUT_H
#define BOUNDBELL_TENSOR_LAYOUT_H

#include <cstddef>
#include <span>
#include <vector>

namespace boundbell {

/// Largest global dimension held densely (12 qubits).
inline constexpr std::size_t kMaxDenseDim = 4096;

/// Sorted list of 1-based party indices.
using PartySet = std::vector<int>;

/// Local dimensions of N parties A_1..A_N.
///
/// Global basis indices use a mixed-radix encoding with party 1 as the most
/// significant digit, so for qubits the state with a single |1> at party k
/// sits at index 2^(N-k).
class PartyLayout {
   public:
    explicit PartyLayout(std::vector<int> dims);

    static PartyLayout qubits(int n);

    int parties() const {
        return static_cast<int>(dims_.size());
    }
    const std::vector<int> &dims() const {
        return dims_;
    }
    /// Local dimension of a 1-based party.
    int dim(int party) const;
    /// Product of the dimensions of the parties after `party`.
    std::size_t stride(int party) const;
    std::size_t total_dim() const {
        return total_;
    }
    bool all_qubits() const;

    std::vector<int> decode(std::size_t index) const;
    std::size_t encode(std::span<const int> digits) const;

    /// Layout of the given parties, in ascending party order.
    PartyLayout restrict_to(const PartySet &parties) const;
    /// Parties not in `parties`, ascending.
    PartySet complement(const PartySet &parties) const;

    /// Checks indices, sorts and deduplicates. Throws std::invalid_argument.
    PartySet normalize(PartySet parties) const;

    bool operator==(const PartyLayout &other) const = default;

   private:
    std::vector<int> dims_;
    std::vector<std::size_t> strides_;
    std::size_t total_ = 1;
};

/// Concatenation of two layouts (first occupies the more significant digits).
PartyLayout concat(const PartyLayout &a, const PartyLayout &b);

}  // namespace boundbell

#endif
