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

#include "boundbell/ppt/ppt.h"

#include <algorithm>
#include <stdexcept>

#include "boundbell/model/states.h"
#include "boundbell/tensor/ops.h"

namespace boundbell::ppt {
namespace {

void check_proper(const PartyLayout &layout, const PartySet &subset) {
    if (subset.empty() || subset.size() >= static_cast<std::size_t>(layout.parties())) {
        throw std::invalid_argument("PPT subset must be a nonempty proper subset of the parties");
    }
}

PptReport make_report(PartySet subset, double min_eig, double trace, double tol) {
    PptReport r;
    r.subset = std::move(subset);
    r.min_eigenvalue = min_eig;
    r.tolerance_used = tol;
    r.verdict = min_eig >= -tol * std::max(1.0, trace) ? Verdict::psd : Verdict::not_psd;
    return r;
}

void extend_subsets(int n, int size, int next, PartySet &current, std::vector<PartySet> &out) {
    if (static_cast<int>(current.size()) == size) {
        out.push_back(current);
        return;
    }
    for (int p = next; p <= n; ++p) {
        current.push_back(p);
        extend_subsets(n, size, p + 1, current, out);
        current.pop_back();
    }
}

template <class Op>
BipartitionScan scan_impl(const Op &rho, double tol) {
    if (rho.layout().total_dim() > kMaxDenseDim) {
        throw std::invalid_argument("scan: dimension cap exceeded");
    }
    BipartitionScan out;
    for (PartySet &s : enumerate_subsets(rho.layout().parties(), rho.layout().parties() / 2)) {
        out.reports.push_back(ppt_check(rho, s, tol));
        out.all_ppt = out.all_ppt && out.reports.back().verdict == Verdict::psd;
    }
    return out;
}

}  // namespace

std::string to_string(Verdict v) {
    return v == Verdict::psd ? "PSD" : "NOT_PSD";
}

std::vector<PartySet> enumerate_subsets(int n, int max_size) {
    std::vector<PartySet> out;
    for (int size = 1; size <= std::min(max_size, n); ++size) {
        PartySet current;
        extend_subsets(n, size, 1, current, out);
    }
    return out;
}

PptReport ppt_check(const DensityOperator &rho, const PartySet &subset, double tol) {
    PartySet s = rho.layout().normalize(subset);
    check_proper(rho.layout(), s);
    std::vector<double> eig = hermitian_eigenvalues(partial_transpose(rho.matrix(), rho.layout(), s));
    return make_report(std::move(s), eig.front(), rho.trace().real(), tol);
}

PptReport ppt_check(const SparseHermitian &rho, const PartySet &subset, double tol) {
    PartySet s = rho.layout().normalize(subset);
    check_proper(rho.layout(), s);
    std::vector<double> eig = rho.partial_transpose(s).eigenvalues();
    return make_report(std::move(s), eig.front(), rho.trace().real(), tol);
}

BipartitionScan scan(const DensityOperator &rho, double tol) {
    return scan_impl(rho, tol);
}

BipartitionScan scan(const SparseHermitian &rho, double tol) {
    return scan_impl(rho, tol);
}

Classification classify(const SparseHermitian &rho, double tol) {
    const int n = rho.layout().parties();
    if (n < 2) {
        throw std::invalid_argument("classification needs at least two parties");
    }
    Classification c;
    c.n = n;
    c.ppt_single = true;
    for (int k = 1; k <= n; ++k) {
        c.ppt_single = c.ppt_single && ppt_check(rho, {k}, tol).verdict == Verdict::psd;
    }
    if (n >= 4) {
        bool all_npt = true;
        for (int k = 1; k <= n; ++k) {
            for (int l = k + 1; l <= n; ++l) {
                all_npt = all_npt && ppt_check(rho, {k, l}, tol).verdict == Verdict::not_psd;
            }
        }
        c.npt_pairs = all_npt;
    }
    c.bound_entangled_claim = c.ppt_single && c.npt_pairs.value_or(false);
    c.non_distillability = c.bound_entangled_claim ? "derived-by-theorem" : "not-applicable";
    return c;
}

Classification classify(const DensityOperator &rho, double tol) {
    return classify(SparseHermitian::from_dense(rho.layout(), rho.matrix()), tol);
}

Classification classify_rho_n(int n, double alpha, double tol) {
    return classify(model::rho_n_sparse({n, alpha}), tol);
}

}  // namespace boundbell::ppt
