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

#include "boundbell/model/states.h"

#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

#include "boundbell/tensor/ops.h"

namespace boundbell::model {
namespace {

constexpr int kMaxQubits = 12;

void check_qubit_count(int n) {
    if (n < 2 || n > kMaxQubits) {
        throw std::invalid_argument("qubit count must be in 2.." + std::to_string(kMaxQubits) + ", got " +
                                    std::to_string(n));
    }
}

void check_phase(double alpha) {
    if (!std::isfinite(alpha)) {
        throw std::invalid_argument("GHZ phase must be finite");
    }
}

DensityOperator diagonal_projector(int n, std::size_t index) {
    auto d = static_cast<Eigen::Index>(std::size_t{1} << n);
    Matrix m = Matrix::Zero(d, d);
    m(static_cast<Eigen::Index>(index), static_cast<Eigen::Index>(index)) = 1.0;
    return DensityOperator(PartyLayout::qubits(n), std::move(m), PsdStatus::yes);
}

}  // namespace

double default_alpha(int n) {
    return std::numbers::pi * (n - 1) / 4.0;
}

PureState ghz(int n, double alpha) {
    check_qubit_count(n);
    check_phase(alpha);
    auto d = static_cast<Eigen::Index>(std::size_t{1} << n);
    Vector v = Vector::Zero(d);
    v(0) = std::numbers::sqrt2 / 2.0;
    v(d - 1) = std::polar(std::numbers::sqrt2 / 2.0, alpha);
    return PureState(PartyLayout::qubits(n), std::move(v));
}

DensityOperator ghz_projector(int n, double alpha) {
    check_qubit_count(n);
    check_phase(alpha);
    auto d = static_cast<Eigen::Index>(std::size_t{1} << n);
    Matrix m = Matrix::Zero(d, d);
    m(0, 0) = 0.5;
    m(d - 1, d - 1) = 0.5;
    m(d - 1, 0) = std::polar(0.5, alpha);
    m(0, d - 1) = std::polar(0.5, -alpha);
    return DensityOperator(PartyLayout::qubits(n), std::move(m), PsdStatus::yes);
}

std::size_t flip_index(int n, int k) {
    if (k < 1 || k > n) {
        throw std::invalid_argument("party index " + std::to_string(k) + " out of range 1.." + std::to_string(n));
    }
    return std::size_t{1} << (n - k);
}

std::pair<DensityOperator, DensityOperator> flip_projectors(int n, int k) {
    check_qubit_count(n);
    std::size_t idx = flip_index(n, k);
    std::size_t complement = (std::size_t{1} << n) - 1 - idx;
    return {diagonal_projector(n, idx), diagonal_projector(n, complement)};
}

SparseHermitian rho_n_sparse(const RhoFamilySpec &spec) {
    check_qubit_count(spec.n);
    check_phase(spec.alpha);
    const std::size_t last = (std::size_t{1} << spec.n) - 1;
    std::map<std::pair<std::size_t, std::size_t>, cplx> acc;
    acc[{0, 0}] += 0.5;
    acc[{last, last}] += 0.5;
    acc[{last, 0}] += std::polar(0.5, spec.alpha);
    acc[{0, last}] += std::polar(0.5, -spec.alpha);
    // At N = 2 the flip states coincide pairwise (Pbar_1 = P_2), so the
    // contributions accumulate.
    std::map<std::size_t, double> flips;
    for (int k = 1; k <= spec.n; ++k) {
        std::size_t idx = flip_index(spec.n, k);
        flips[idx] += 1.0;
        flips[last - idx] += 1.0;
    }
    for (auto [idx, count] : flips) {
        acc[{idx, idx}] += 0.5 * count;
    }
    const double weight = 1.0 / (spec.n + 1);
    std::vector<Triplet> entries;
    for (auto [rc, v] : acc) {
        entries.push_back({rc.first, rc.second, weight * v});
    }
    return SparseHermitian(PartyLayout::qubits(spec.n), std::move(entries));
}

DensityOperator rho_n(const RhoFamilySpec &spec) {
    SparseHermitian sparse = rho_n_sparse(spec);
    return DensityOperator(sparse.layout(), sparse.to_dense(), PsdStatus::yes);
}

PureState random_pure(const PartyLayout &layout, std::uint64_t seed) {
    if (layout.total_dim() > kMaxDenseDim) {
        throw std::invalid_argument("random_pure is limited to the dense cap");
    }
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    Vector v(static_cast<Eigen::Index>(layout.total_dim()));
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        double re = normal(rng);
        double im = normal(rng);
        v(i) = cplx{re, im};
    }
    return PureState::normalized(layout, std::move(v));
}

DensityOperator random_separable(const PartyLayout &layout, int terms, std::uint64_t seed) {
    if (terms < 1) {
        throw std::invalid_argument("random_separable needs at least one term");
    }
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    auto d = static_cast<Eigen::Index>(layout.total_dim());
    Matrix m = Matrix::Zero(d, d);
    double total = 0;
    for (int t = 0; t < terms; ++t) {
        std::vector<PureState> factors;
        for (int p = 1; p <= layout.parties(); ++p) {
            factors.push_back(random_pure(PartyLayout({layout.dim(p)}), rng()));
        }
        PureState product = tensor_product(factors);
        double w = 0.1 + unit(rng);
        total += w;
        m += w * DensityOperator::projector(product).matrix();
    }
    m /= total;
    Matrix h = 0.5 * (m + m.adjoint());
    h /= h.trace().real();
    return DensityOperator(layout, std::move(h), PsdStatus::yes);
}

}  // namespace boundbell::model
