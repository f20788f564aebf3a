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

#ifndef BOUNDBELL_TENSOR_SPARSE_H
#define BOUNDBELL_TENSOR_SPARSE_H

#include <span>
#include <vector>

#include "boundbell/tensor/state.h"

namespace boundbell {

struct Triplet {
    std::size_t row;
    std::size_t col;
    cplx value;
};

/// Eigenvalues (ascending, all `dim` of them) of the Hermitian matrix whose
/// nonzero entries are `entries`. Solved block by block over the connected
/// components of the sparsity graph; absent rows contribute zeros.
std::vector<double> block_eigenvalues(std::size_t dim, std::span<const Triplet> entries);

/// Nonzero entries of a Hermitian operator. Used where only a handful of
/// entries are nonzero out of a 4096 x 4096 dense shell.
class SparseHermitian {
   public:
    SparseHermitian(PartyLayout layout, std::vector<Triplet> entries);

    static SparseHermitian from_dense(const PartyLayout &layout, const Matrix &m);

    const PartyLayout &layout() const {
        return layout_;
    }
    const std::vector<Triplet> &entries() const {
        return entries_;
    }

    SparseHermitian partial_transpose(const PartySet &subset) const;
    Matrix to_dense() const;
    std::vector<double> eigenvalues() const;
    cplx trace() const;

   private:
    PartyLayout layout_;
    std::vector<Triplet> entries_;
};

}  // namespace boundbell

#endif
