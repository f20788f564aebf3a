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

#ifndef BOUNDBELL_SRC_TENSOR_DETAIL_BLOCKS_H
#define BOUNDBELL_SRC_TENSOR_DETAIL_BLOCKS_H

#include <cstddef>
#include <numeric>
#include <vector>

#include "boundbell/tensor/state.h"

namespace boundbell::detail {

/// Union-find over basis indices.
class Components {
   public:
    explicit Components(std::size_t n) : parent_(n) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }

    std::size_t find(std::size_t i) {
        while (parent_[i] != i) {
            parent_[i] = parent_[parent_[i]];
            i = parent_[i];
        }
        return i;
    }

    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) {
            // Smaller root wins so that block order is stable.
            if (b < a) {
                std::swap(a, b);
            }
            parent_[b] = a;
        }
    }

    /// Index lists of each block, ascending within a block; blocks ordered by
    /// their smallest index.
    std::vector<std::vector<std::size_t>> blocks() {
        std::vector<std::vector<std::size_t>> out;
        std::vector<std::size_t> slot(parent_.size(), SIZE_MAX);
        for (std::size_t i = 0; i < parent_.size(); ++i) {
            std::size_t r = find(i);
            if (slot[r] == SIZE_MAX) {
                slot[r] = out.size();
                out.emplace_back();
            }
            out[slot[r]].push_back(i);
        }
        return out;
    }

   private:
    std::vector<std::size_t> parent_;
};

/// For each global index, the part of its mixed-radix value carried by the
/// digits of `subset` (sum of digit * stride over subset parties).
std::vector<std::size_t> subset_offsets(const PartyLayout &layout, const PartySet &subset);

/// Solves one Hermitian block and appends its eigenvalues.
void append_block_eigenvalues(const Matrix &block, std::vector<double> &out);

}  // namespace boundbell::detail

#endif
