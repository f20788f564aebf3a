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

#include "boundbell/tensor/ops.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "boundbell/kernels/kernels.h"
#include "detail/blocks.h"

namespace boundbell {

namespace detail {

std::vector<std::size_t> subset_offsets(const PartyLayout &layout, const PartySet &subset) {
    std::vector<std::size_t> offsets(layout.total_dim(), 0);
    for (int p : subset) {
        auto stride = layout.stride(p);
        auto d = static_cast<std::size_t>(layout.dim(p));
        for (std::size_t i = 0; i < offsets.size(); ++i) {
            offsets[i] += ((i / stride) % d) * stride;
        }
    }
    return offsets;
}

void append_block_eigenvalues(const Matrix &block, std::vector<double> &out) {
    if (block.rows() == 1) {
        out.push_back(block(0, 0).real());
        return;
    }
    Eigen::SelfAdjointEigenSolver<Matrix> es(block, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) {
        throw std::runtime_error("Hermitian eigensolver did not converge");
    }
    for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
        out.push_back(es.eigenvalues()(k));
    }
}

}  // namespace detail

namespace {

// Global index offsets of each basis state of `parties` inside `layout`.
std::vector<std::size_t> embed_offsets(const PartyLayout &layout, const PartySet &parties) {
    std::size_t n = 1;
    for (int p : parties) {
        n *= static_cast<std::size_t>(layout.dim(p));
    }
    std::vector<std::size_t> out(n, 0);
    // Least significant party of the sub-layout varies fastest.
    std::size_t block = 1;
    for (auto it = parties.rbegin(); it != parties.rend(); ++it) {
        auto d = static_cast<std::size_t>(layout.dim(*it));
        std::size_t stride = layout.stride(*it);
        for (std::size_t i = 0; i < n; ++i) {
            out[i] += ((i / block) % d) * stride;
        }
        block *= d;
    }
    return out;
}

void check_hermitian(const Matrix &h) {
    double scale = std::max(1.0, h.cwiseAbs().maxCoeff());
    if (!(hermitian_defect(h) <= kHermitianTolerance * scale)) {
        throw std::invalid_argument("matrix is not Hermitian within tolerance");
    }
}

detail::Components dense_components(const Matrix &h) {
    auto n = static_cast<std::size_t>(h.rows());
    detail::Components comps(n);
    for (Eigen::Index c = 0; c < h.cols(); ++c) {
        for (Eigen::Index r = 0; r < h.rows(); ++r) {
            if (r != c && h(r, c) != cplx{0.0, 0.0}) {
                comps.unite(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
            }
        }
    }
    return comps;
}

Matrix gather(const Matrix &h, const std::vector<std::size_t> &idx) {
    auto n = static_cast<Eigen::Index>(idx.size());
    Matrix sub(n, n);
    for (Eigen::Index c = 0; c < n; ++c) {
        for (Eigen::Index r = 0; r < n; ++r) {
            sub(r, c) = h(static_cast<Eigen::Index>(idx[static_cast<std::size_t>(r)]),
                          static_cast<Eigen::Index>(idx[static_cast<std::size_t>(c)]));
        }
    }
    return sub;
}

}  // namespace

PureState tensor_product(std::span<const PureState> factors) {
    if (factors.empty()) {
        throw std::invalid_argument("tensor_product needs at least one factor");
    }
    PartyLayout layout = factors[0].layout();
    Vector amps = factors[0].amplitudes();
    for (std::size_t i = 1; i < factors.size(); ++i) {
        const Vector &b = factors[i].amplitudes();
        Vector next(amps.size() * b.size());
        for (Eigen::Index j = 0; j < amps.size(); ++j) {
            next.segment(j * b.size(), b.size()) = amps(j) * b;
        }
        amps = std::move(next);
        layout = concat(layout, factors[i].layout());
    }
    return PureState::normalized(std::move(layout), std::move(amps));
}

Matrix kron(const Matrix &a, const Matrix &b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index c = 0; c < a.cols(); ++c) {
        for (Eigen::Index r = 0; r < a.rows(); ++r) {
            out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
        }
    }
    return out;
}

Matrix partial_transpose(const Matrix &m, const PartyLayout &layout, const PartySet &subset) {
    PartySet s = layout.normalize(subset);
    auto d = static_cast<Eigen::Index>(layout.total_dim());
    if (m.rows() != d || m.cols() != d) {
        throw std::invalid_argument("operator shape does not match layout");
    }
    std::vector<std::size_t> off = detail::subset_offsets(layout, s);
    Matrix out(d, d);
    for (Eigen::Index c = 0; c < d; ++c) {
        std::size_t sc = off[static_cast<std::size_t>(c)];
        for (Eigen::Index r = 0; r < d; ++r) {
            std::size_t sr = off[static_cast<std::size_t>(r)];
            auto nr = static_cast<Eigen::Index>(static_cast<std::size_t>(r) - sr + sc);
            auto nc = static_cast<Eigen::Index>(static_cast<std::size_t>(c) - sc + sr);
            out(nr, nc) = m(r, c);
        }
    }
    return out;
}

DensityOperator partial_transpose(const DensityOperator &rho, const PartySet &subset) {
    return DensityOperator(rho.layout(), partial_transpose(rho.matrix(), rho.layout(), subset));
}

Matrix partial_trace(const Matrix &m, const PartyLayout &layout, const PartySet &traced_out) {
    PartySet traced = layout.normalize(traced_out);
    if (traced.size() >= static_cast<std::size_t>(layout.parties())) {
        throw std::invalid_argument("cannot trace out every party");
    }
    PartySet kept = layout.complement(traced);
    std::vector<std::size_t> k_off = embed_offsets(layout, kept);
    std::vector<std::size_t> t_off = traced.empty() ? std::vector<std::size_t>{0} : embed_offsets(layout, traced);
    auto n = static_cast<Eigen::Index>(k_off.size());
    Matrix out = Matrix::Zero(n, n);
    for (Eigen::Index b = 0; b < n; ++b) {
        for (Eigen::Index a = 0; a < n; ++a) {
            cplx acc = 0;
            for (std::size_t t : t_off) {
                acc += m(static_cast<Eigen::Index>(k_off[static_cast<std::size_t>(a)] + t),
                         static_cast<Eigen::Index>(k_off[static_cast<std::size_t>(b)] + t));
            }
            out(a, b) = acc;
        }
    }
    return out;
}

DensityOperator partial_trace(const DensityOperator &rho, const PartySet &traced_out) {
    PartySet traced = rho.layout().normalize(traced_out);
    Matrix reduced = partial_trace(rho.matrix(), rho.layout(), traced);
    return DensityOperator(rho.layout().restrict_to(rho.layout().complement(traced)), std::move(reduced));
}

Matrix reduced_operator(const PureState &psi, const PartySet &keep) {
    const PartyLayout &layout = psi.layout();
    PartySet kept = layout.normalize(keep);
    if (kept.empty()) {
        throw std::invalid_argument("reduced_operator needs at least one kept party");
    }
    PartySet traced = layout.complement(kept);
    std::vector<std::size_t> k_off = embed_offsets(layout, kept);
    std::vector<std::size_t> t_off = traced.empty() ? std::vector<std::size_t>{0} : embed_offsets(layout, traced);
    Matrix amp(static_cast<Eigen::Index>(k_off.size()), static_cast<Eigen::Index>(t_off.size()));
    for (std::size_t t = 0; t < t_off.size(); ++t) {
        for (std::size_t a = 0; a < k_off.size(); ++a) {
            amp(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(t)) = psi.amplitude(k_off[a] + t_off[t]);
        }
    }
    return amp * amp.adjoint();
}

std::vector<double> hermitian_eigenvalues(const Matrix &h) {
    if (h.rows() != h.cols()) {
        throw std::invalid_argument("hermitian_eigenvalues needs a square matrix");
    }
    check_hermitian(h);
    detail::Components comps = dense_components(h);
    std::vector<double> values;
    values.reserve(static_cast<std::size_t>(h.rows()));
    for (const auto &idx : comps.blocks()) {
        detail::append_block_eigenvalues(gather(h, idx), values);
    }
    std::sort(values.begin(), values.end());
    return values;
}

std::vector<double> hermitian_eigenvalues(const DensityOperator &rho) {
    return hermitian_eigenvalues(rho.matrix());
}

EigenSystem hermitian_eigensystem(const Matrix &h) {
    if (h.rows() != h.cols()) {
        throw std::invalid_argument("hermitian_eigensystem needs a square matrix");
    }
    check_hermitian(h);
    detail::Components comps = dense_components(h);
    struct Pair {
        double value;
        Vector vec;
    };
    std::vector<Pair> pairs;
    const Eigen::Index n = h.rows();
    for (const auto &idx : comps.blocks()) {
        Matrix sub = gather(h, idx);
        Eigen::SelfAdjointEigenSolver<Matrix> es(sub);
        if (es.info() != Eigen::Success) {
            throw std::runtime_error("Hermitian eigensolver did not converge");
        }
        for (Eigen::Index k = 0; k < sub.rows(); ++k) {
            Vector v = Vector::Zero(n);
            for (std::size_t j = 0; j < idx.size(); ++j) {
                v(static_cast<Eigen::Index>(idx[j])) = es.eigenvectors()(static_cast<Eigen::Index>(j), k);
            }
            fix_phase(v);
            pairs.push_back({es.eigenvalues()(k), std::move(v)});
        }
    }
    std::stable_sort(pairs.begin(), pairs.end(), [](const Pair &a, const Pair &b) { return a.value < b.value; });
    EigenSystem out;
    out.vectors.resize(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        out.values.push_back(pairs[static_cast<std::size_t>(k)].value);
        out.vectors.col(k) = pairs[static_cast<std::size_t>(k)].vec;
    }
    return out;
}

void fix_phase(Eigen::Ref<Vector> v) {
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        double mag = std::abs(v(i));
        if (mag > 1e-10) {
            v *= std::conj(v(i)) / mag;
            v(i) = mag;
            return;
        }
    }
}

SchmidtDecomposition schmidt(const PureState &psi, const PartySet &bipartition, double cutoff) {
    const PartyLayout &layout = psi.layout();
    PartySet left = layout.normalize(bipartition);
    if (left.empty() || left.size() >= static_cast<std::size_t>(layout.parties())) {
        throw std::invalid_argument("Schmidt bipartition must be a nonempty proper subset");
    }
    PartySet right = layout.complement(left);
    std::vector<std::size_t> l_off = embed_offsets(layout, left);
    std::vector<std::size_t> r_off = embed_offsets(layout, right);
    const auto dl = static_cast<Eigen::Index>(l_off.size());
    const auto dr = static_cast<Eigen::Index>(r_off.size());
    Matrix amp(dl, dr);
    for (Eigen::Index b = 0; b < dr; ++b) {
        for (Eigen::Index a = 0; a < dl; ++a) {
            amp(a, b) = psi.amplitude(l_off[static_cast<std::size_t>(a)] + r_off[static_cast<std::size_t>(b)]);
        }
    }

    Eigen::JacobiSVD<Matrix> svd(amp, Eigen::ComputeThinU);
    const Eigen::VectorXd &sv = svd.singularValues();
    const Matrix &u = svd.matrixU();

    Eigen::Index kept = 0;
    while (kept < sv.size() && sv(kept) > cutoff) {
        ++kept;
    }

    SchmidtDecomposition out;
    out.bipartition = left;
    PartyLayout left_layout = layout.restrict_to(left);
    PartyLayout right_layout = layout.restrict_to(right);

    constexpr double kTie = 1e-10;
    Eigen::Index start = 0;
    while (start < kept) {
        Eigen::Index end = start + 1;
        while (end < kept && sv(end - 1) - sv(end) <= kTie) {
            ++end;
        }
        const Eigen::Index g = end - start;
        Matrix basis(dl, g);
        if (g == 1) {
            basis.col(0) = u.col(start);
        } else {
            // Canonical basis of the degenerate subspace: project e_0, e_1, ...
            // and orthonormalize in index order.
            const Matrix span = u.middleCols(start, g);
            Eigen::Index found = 0;
            for (Eigen::Index j = 0; j < dl && found < g; ++j) {
                Vector v = span * span.row(j).adjoint();
                for (Eigen::Index k = 0; k < found; ++k) {
                    v -= basis.col(k) * basis.col(k).dot(v);
                }
                double nv = v.norm();
                if (nv > 1e-6) {
                    basis.col(found++) = v / nv;
                }
            }
            if (found != g) {
                throw std::runtime_error("failed to canonicalize a degenerate Schmidt subspace");
            }
        }
        for (Eigen::Index k = 0; k < g; ++k) {
            Vector lv = basis.col(k);
            lv /= lv.norm();
            fix_phase(lv);
            // right = (lv^H amp)^T, renormalized
            Vector rv = (lv.adjoint() * amp).transpose();
            out.coefficients.push_back(sv(start + k));
            out.left_vectors.push_back(PureState::normalized(left_layout, std::move(lv)));
            out.right_vectors.push_back(PureState::normalized(right_layout, std::move(rv)));
        }
        start = end;
    }
    return out;
}

Vector apply_local(const Vector &v, const PartyLayout &layout, int party, const Matrix &op) {
    const auto d = static_cast<std::size_t>(layout.dim(party));
    if (op.rows() != static_cast<Eigen::Index>(d) || op.cols() != static_cast<Eigen::Index>(d)) {
        throw std::invalid_argument("local operator does not match the party dimension");
    }
    if (static_cast<std::size_t>(v.size()) != layout.total_dim()) {
        throw std::invalid_argument("vector length does not match layout");
    }
    const std::size_t stride = layout.stride(party);
    const std::size_t block = stride * d;
    Vector out = Vector::Zero(v.size());
    for (std::size_t hi = 0; hi < layout.total_dim(); hi += block) {
        for (std::size_t lo = 0; lo < stride; ++lo) {
            const std::size_t base = hi + lo;
            for (std::size_t row = 0; row < d; ++row) {
                cplx acc = 0;
                for (std::size_t col = 0; col < d; ++col) {
                    acc += op(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) *
                           v(static_cast<Eigen::Index>(base + col * stride));
                }
                out(static_cast<Eigen::Index>(base + row * stride)) = acc;
            }
        }
    }
    return out;
}

WeightedVector apply_local(const PureState &psi, int party, const Matrix &op) {
    WeightedVector out;
    out.vector = apply_local(psi.amplitudes(), psi.layout(), party, op);
    out.weight = kernels::norm2({out.vector.data(), static_cast<std::size_t>(out.vector.size())});
    return out;
}

double operator_norm(const Matrix &m) {
    if (m.size() == 0) {
        return 0;
    }
    Eigen::JacobiSVD<Matrix> svd(m);
    return svd.singularValues()(0);
}

}  // namespace boundbell
