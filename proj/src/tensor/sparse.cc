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

#include "boundbell/tensor/sparse.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "boundbell/tensor/ops.h"
#include "detail/blocks.h"

namespace boundbell {

std::vector<double> block_eigenvalues(std::size_t dim, std::span<const Triplet> entries) {
    detail::Components comps(dim);
    for (const Triplet &t : entries) {
        if (t.row >= dim || t.col >= dim) {
            throw std::invalid_argument("triplet index out of range");
        }
        if (t.row != t.col) {
            comps.unite(t.row, t.col);
        }
    }
    std::vector<std::vector<std::size_t>> blocks = comps.blocks();

    std::vector<std::size_t> block_of(dim);
    std::vector<std::size_t> local(dim);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        for (std::size_t k = 0; k < blocks[b].size(); ++k) {
            block_of[blocks[b][k]] = b;
            local[blocks[b][k]] = k;
        }
    }
    std::vector<Matrix> subs(blocks.size());
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        auto n = static_cast<Eigen::Index>(blocks[b].size());
        subs[b] = Matrix::Zero(n, n);
    }
    for (const Triplet &t : entries) {
        std::size_t b = block_of[t.row];
        subs[b](static_cast<Eigen::Index>(local[t.row]), static_cast<Eigen::Index>(local[t.col])) += t.value;
    }

    std::vector<double> values;
    values.reserve(dim);
    for (const Matrix &sub : subs) {
        detail::append_block_eigenvalues(sub, values);
    }
    std::sort(values.begin(), values.end());
    return values;
}

SparseHermitian::SparseHermitian(PartyLayout layout, std::vector<Triplet> entries)
    : layout_(std::move(layout)), entries_(std::move(entries)) {
    std::size_t d = layout_.total_dim();
    for (const Triplet &t : entries_) {
        if (t.row >= d || t.col >= d) {
            throw std::invalid_argument("triplet index out of range");
        }
    }
    std::sort(entries_.begin(), entries_.end(), [](const Triplet &a, const Triplet &b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });
    for (std::size_t i = 1; i < entries_.size(); ++i) {
        if (entries_[i].row == entries_[i - 1].row && entries_[i].col == entries_[i - 1].col) {
            throw std::invalid_argument("duplicate triplet");
        }
    }
    // Hermitian check: every (r, c) needs a conjugate partner at (c, r).
    for (const Triplet &t : entries_) {
        Triplet key{t.col, t.row, {}};
        auto partner = std::lower_bound(entries_.begin(), entries_.end(), key, [](const Triplet &a, const Triplet &b) {
            return a.row != b.row ? a.row < b.row : a.col < b.col;
        });
        cplx other = (partner != entries_.end() && partner->row == t.col && partner->col == t.row) ? partner->value
                                                                                                   : cplx{0.0, 0.0};
        if (std::abs(t.value - std::conj(other)) > kHermitianTolerance) {
            throw std::invalid_argument("sparse operator is not Hermitian");
        }
    }
}

SparseHermitian SparseHermitian::from_dense(const PartyLayout &layout, const Matrix &m) {
    auto d = static_cast<Eigen::Index>(layout.total_dim());
    if (m.rows() != d || m.cols() != d) {
        throw std::invalid_argument("operator shape does not match layout");
    }
    std::vector<Triplet> entries;
    for (Eigen::Index r = 0; r < d; ++r) {
        for (Eigen::Index c = 0; c < d; ++c) {
            if (m(r, c) != cplx{0.0, 0.0}) {
                entries.push_back({static_cast<std::size_t>(r), static_cast<std::size_t>(c), m(r, c)});
            }
        }
    }
    return SparseHermitian(layout, std::move(entries));
}

SparseHermitian SparseHermitian::partial_transpose(const PartySet &subset) const {
    std::vector<std::size_t> offsets = detail::subset_offsets(layout_, layout_.normalize(subset));
    std::vector<Triplet> out;
    out.reserve(entries_.size());
    for (const Triplet &t : entries_) {
        std::size_t sr = offsets[t.row];
        std::size_t sc = offsets[t.col];
        out.push_back({t.row - sr + sc, t.col - sc + sr, t.value});
    }
    return SparseHermitian(layout_, std::move(out));
}

Matrix SparseHermitian::to_dense() const {
    auto d = static_cast<Eigen::Index>(layout_.total_dim());
    Matrix m = Matrix::Zero(d, d);
    for (const Triplet &t : entries_) {
        m(static_cast<Eigen::Index>(t.row), static_cast<Eigen::Index>(t.col)) = t.value;
    }
    return m;
}

std::vector<double> SparseHermitian::eigenvalues() const {
    return block_eigenvalues(layout_.total_dim(), entries_);
}

cplx SparseHermitian::trace() const {
    cplx tr = 0;
    for (const Triplet &t : entries_) {
        if (t.row == t.col) {
            tr += t.value;
        }
    }
    return tr;
}

}  // namespace boundbell
