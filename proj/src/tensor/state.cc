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

#include "boundbell/tensor/state.h"

#include <cmath>
#include <stdexcept>
#include <string>

#include "boundbell/kernels/kernels.h"

namespace boundbell {
namespace {

double squared_norm(const Vector &v) {
    return kernels::norm2({v.data(), static_cast<std::size_t>(v.size())});
}

void check_dense_dim(const PartyLayout &layout) {
    if (layout.total_dim() > kMaxDenseDim) {
        throw std::invalid_argument("global dimension " + std::to_string(layout.total_dim()) +
                                    " exceeds dense cap " + std::to_string(kMaxDenseDim));
    }
}

}  // namespace

PureState::PureState(PartyLayout layout, Vector amplitudes) : layout_(std::move(layout)), amps_(std::move(amplitudes)) {
    check_dense_dim(layout_);
    if (static_cast<std::size_t>(amps_.size()) != layout_.total_dim()) {
        throw std::invalid_argument("amplitude vector length does not match layout");
    }
    double n = std::sqrt(squared_norm(amps_));
    if (!(std::abs(n - 1.0) <= kNormTolerance)) {
        throw std::invalid_argument("PureState is not normalized (norm " + std::to_string(n) + ")");
    }
}

PureState PureState::normalized(PartyLayout layout, Vector amplitudes) {
    double n2 = squared_norm(amplitudes);
    if (!(n2 > 0) || !std::isfinite(n2)) {
        throw std::invalid_argument("cannot normalize a zero or non-finite vector");
    }
    amplitudes /= std::sqrt(n2);
    return PureState(std::move(layout), std::move(amplitudes));
}

PureState PureState::basis(PartyLayout layout, std::size_t index) {
    if (index >= layout.total_dim()) {
        throw std::invalid_argument("basis index out of range");
    }
    Vector v = Vector::Zero(static_cast<Eigen::Index>(layout.total_dim()));
    v(static_cast<Eigen::Index>(index)) = 1.0;
    return PureState(std::move(layout), std::move(v));
}

double hermitian_defect(const Matrix &m) {
    if (m.rows() != m.cols()) {
        return INFINITY;
    }
    double worst = 0;
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
        for (Eigen::Index r = 0; r <= c; ++r) {
            worst = std::max(worst, std::abs(m(r, c) - std::conj(m(c, r))));
        }
    }
    return worst;
}

DensityOperator::DensityOperator(PartyLayout layout, Matrix matrix, PsdStatus psd)
    : layout_(std::move(layout)), matrix_(std::move(matrix)), psd_(psd) {
    check_dense_dim(layout_);
    auto d = static_cast<Eigen::Index>(layout_.total_dim());
    if (matrix_.rows() != d || matrix_.cols() != d) {
        throw std::invalid_argument("operator shape does not match layout");
    }
    if (!(hermitian_defect(matrix_) <= kHermitianTolerance)) {
        throw std::invalid_argument("operator is not Hermitian");
    }
    cplx tr = matrix_.trace();
    if (!(std::abs(tr - 1.0) <= kNormTolerance)) {
        throw std::invalid_argument("operator trace is not 1");
    }
}

DensityOperator DensityOperator::maximally_mixed(PartyLayout layout) {
    check_dense_dim(layout);
    auto d = static_cast<Eigen::Index>(layout.total_dim());
    Matrix m = Matrix::Identity(d, d) / static_cast<double>(d);
    return DensityOperator(std::move(layout), std::move(m), PsdStatus::yes);
}

DensityOperator DensityOperator::projector(const PureState &psi) {
    const Vector &v = psi.amplitudes();
    Matrix m = v * v.adjoint();
    // The outer product is Hermitian up to rounding in the product itself.
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
        m(c, c) = std::norm(v(c));
        for (Eigen::Index r = 0; r < c; ++r) {
            m(c, r) = std::conj(m(r, c));
        }
    }
    // Renormalize the trace against rounding in |amp|^2.
    m /= m.trace().real();
    return DensityOperator(psi.layout(), std::move(m), PsdStatus::yes);
}

}  // namespace boundbell
