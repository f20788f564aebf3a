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

#include "boundbell/locc/extraction.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "boundbell/errors.h"
#include "boundbell/tensor/ops.h"

namespace boundbell::locc {
namespace {

// Working state: positions 1..n of `state` carry original labels[pos - 1].
struct Active {
    PureState state;
    std::vector<int> labels;

    int parties() const {
        return static_cast<int>(labels.size());
    }
};

// <bra|_pos v, as a vector on the remaining parties (unnormalized).
Vector contract_party(const Vector &v, const PartyLayout &layout, int pos, const Vector &bra) {
    const auto d = static_cast<std::size_t>(layout.dim(pos));
    const std::size_t stride = layout.stride(pos);
    const std::size_t block = stride * d;
    Vector out = Vector::Zero(static_cast<Eigen::Index>(layout.total_dim() / d));
    for (std::size_t hi = 0; hi < layout.total_dim(); hi += block) {
        for (std::size_t lo = 0; lo < stride; ++lo) {
            cplx acc = 0;
            for (std::size_t k = 0; k < d; ++k) {
                acc += std::conj(bra(static_cast<Eigen::Index>(k))) * v(static_cast<Eigen::Index>(hi + k * stride + lo));
            }
            out(static_cast<Eigen::Index>(hi / d + lo)) = acc;
        }
    }
    return out;
}

Vector contract_party(const PureState &psi, int pos, const Vector &bra) {
    return contract_party(psi.amplitudes(), psi.layout(), pos, bra);
}

PartyLayout without_party(const PartyLayout &layout, int pos) {
    return layout.restrict_to(layout.complement({pos}));
}

// Removes a party that is (numerically) in the product state `local`.
void drop_party(Active &act, int pos, const Vector &local) {
    Vector rest = contract_party(act.state, pos, local);
    PartyLayout layout = without_party(act.state.layout(), pos);
    act.state = PureState::normalized(std::move(layout), std::move(rest));
    act.labels.erase(act.labels.begin() + (pos - 1));
}

// Factors out every party whose single-party Schmidt rank is 1.
void drop_product_parties(Active &act) {
    bool changed = true;
    while (changed && act.parties() > 1) {
        changed = false;
        for (int pos = 1; pos <= act.parties(); ++pos) {
            SchmidtDecomposition sd = schmidt(act.state, {pos});
            if (sd.rank() == 1) {
                drop_party(act, pos, sd.left_vectors[0].amplitudes());
                changed = true;
                break;
            }
        }
    }
}

double purity(const Matrix &rho) {
    return (rho * rho).trace().real();
}

Vector top_eigenvector(const Matrix &rho) {
    EigenSystem es = hermitian_eigensystem(rho);
    return es.vectors.col(es.vectors.cols() - 1);
}

bool is_product(const PureState &psi) {
    for (int q = 1; q <= psi.layout().parties(); ++q) {
        if (purity(reduced_operator(psi, {q})) < kProductPurity) {
            return false;
        }
    }
    return true;
}

Vector basis_vector(int d, int k) {
    Vector v = Vector::Zero(d);
    v(k) = 1.0;
    return v;
}

// Dual pair to {chi, chi_tilde} inside their span, as rows 0 and 1 of a d x d
// operator: O chi = |0>, O chi_tilde = |1>.
Matrix biorthogonal_filter(const Vector &chi, const Vector &chi_tilde) {
    const Eigen::Index d = chi.size();
    Matrix x(d, 2);
    x.col(0) = chi;
    x.col(1) = chi_tilde;
    Matrix gram = x.adjoint() * x;
    Matrix dual = x * gram.inverse();
    Matrix op = Matrix::Zero(d, d);
    op.row(0) = dual.col(0).adjoint();
    op.row(1) = dual.col(1).adjoint();
    return op / operator_norm(op);
}

double ghz_relative_phase(const Active &act, const std::vector<std::pair<Vector, Vector>> &bases) {
    // <b..b|psi> for the all-logical-0 and all-logical-1 configurations.
    cplx c[2];
    for (int branch = 0; branch < 2; ++branch) {
        Vector amp = act.state.amplitudes();
        PartyLayout layout = act.state.layout();
        for (int pos = act.parties(); pos >= 1; --pos) {
            const auto &[b0, b1] = bases[static_cast<std::size_t>(pos - 1)];
            const Vector &b = branch == 0 ? b0 : b1;
            if (pos == 1) {
                c[branch] = b.dot(amp);
                break;
            }
            amp = contract_party(amp, layout, pos, b);
            layout = without_party(layout, pos);
        }
    }
    return std::arg(c[1] / c[0]);
}

}  // namespace

std::string to_string(FilterKind kind) {
    switch (kind) {
        case FilterKind::equalize:
            return "equalize";
        case FilterKind::biorthogonal:
            return "biorthogonal";
        case FilterKind::project:
            return "project";
        case FilterKind::measure_pm:
            return "measure_pm";
    }
    return "unknown";
}

std::vector<PartyRank> schmidt_profile(const PureState &psi) {
    std::vector<PartyRank> out;
    const int n = psi.layout().parties();
    for (int p = 1; p <= n; ++p) {
        int rank = n == 1 ? 1 : static_cast<int>(schmidt(psi, {p}).rank());
        out.push_back({p, rank});
    }
    return out;
}

EqualizeResult equalize_filter(const PureState &psi, int party) {
    if (psi.layout().parties() < 2) {
        throw NotEntangledError("a single party carries no entanglement");
    }
    SchmidtDecomposition sd = schmidt(psi, {party});
    if (sd.rank() < 2) {
        throw NotEntangledError("party " + std::to_string(party) + " has Schmidt rank 1");
    }
    const double l0 = sd.coefficients[0];
    const double l1 = sd.coefficients[1];
    const Vector &u0 = sd.left_vectors[0].amplitudes();
    const Vector &u1 = sd.left_vectors[1].amplitudes();
    Matrix op = (l1 * (u0 * u0.adjoint()) + l0 * (u1 * u1.adjoint())) / l0;
    WeightedVector applied = apply_local(psi, party, op);
    EqualizeResult out{{party, op, FilterKind::equalize},
                       PureState::normalized(psi.layout(), std::move(applied.vector)),
                       applied.weight,
                       {party, u0, u1}};
    return out;
}

BranchClassification classify_branch(const PureState &balanced, const PivotBasis &basis) {
    const int pivot = basis.party;
    const PartyLayout rest_layout = without_party(balanced.layout(), pivot);
    std::array<PureState, 2> branches{
        PureState::normalized(rest_layout, contract_party(balanced, pivot, basis.u0)),
        PureState::normalized(rest_layout, contract_party(balanced, pivot, basis.u1))};

    BranchClassification out;
    out.branch_is_product = {is_product(branches[0]), is_product(branches[1])};
    if (!(out.branch_is_product[0] && out.branch_is_product[1])) {
        out.branch_case = BranchCase::b_entangled;
        return out;
    }

    out.branch_case = BranchCase::a_product;
    bool orthogonal_found = false;
    for (int q = 1; q <= rest_layout.parties(); ++q) {
        PartyRelation rel;
        rel.party = q < pivot ? q : q + 1;
        rel.chi = top_eigenvector(reduced_operator(branches[0], {q}));
        rel.chi_tilde = top_eigenvector(reduced_operator(branches[1], {q}));
        rel.overlap = std::abs(rel.chi.dot(rel.chi_tilde));
        rel.relation = rel.overlap >= kSameOverlap ? LocalRelation::same : LocalRelation::distinct;
        orthogonal_found = orthogonal_found || rel.overlap <= kOrthogonalOverlap;
        out.relations.push_back(std::move(rel));
    }
    if (!orthogonal_found) {
        throw NumericDegeneracyError("product branches have no locally orthogonal party");
    }
    return out;
}

BranchClassification classify_branch(const PureState &balanced, int party) {
    SchmidtDecomposition sd = schmidt(balanced, {party});
    if (sd.rank() < 2) {
        throw NotEntangledError("pivot party has Schmidt rank 1");
    }
    return classify_branch(balanced, {party, sd.left_vectors[0].amplitudes(), sd.left_vectors[1].amplitudes()});
}

std::pair<int, int> target_pair_choice(const std::vector<int> &survivors,
                                       std::optional<std::pair<int, int>> requested) {
    std::vector<int> sorted = survivors;
    std::sort(sorted.begin(), sorted.end());
    if (sorted.size() < 2) {
        throw PairUnavailableError("fewer than two parties survive");
    }
    if (!requested) {
        return {sorted[0], sorted[1]};
    }
    auto [i, j] = *requested;
    if (i > j) {
        std::swap(i, j);
    }
    bool ok = i != j && std::binary_search(sorted.begin(), sorted.end(), i) &&
              std::binary_search(sorted.begin(), sorted.end(), j);
    if (!ok) {
        throw PairUnavailableError("requested pair (" + std::to_string(requested->first) + "," +
                                   std::to_string(requested->second) + ") is not among the surviving parties");
    }
    return {i, j};
}

ExtractionResult extract(const PureState &psi, std::optional<std::pair<int, int>> requested) {
    const int n = psi.layout().parties();
    std::vector<int> labels(static_cast<std::size_t>(n));
    for (int p = 1; p <= n; ++p) {
        labels[static_cast<std::size_t>(p - 1)] = p;
    }
    Active act{psi, labels};
    drop_product_parties(act);
    if (act.parties() < 2) {
        throw NotEntangledError("input is a product state");
    }

    std::vector<ExtractionStep> steps;
    double probability = 1.0;
    int case_b_steps = 0;
    auto record = [&](int pos, Matrix op, FilterKind kind, double weight) -> ExtractionStep & {
        ExtractionStep step;
        step.filter = {act.labels[static_cast<std::size_t>(pos - 1)], std::move(op), kind};
        step.weight = weight;
        step.active_parties = act.parties();
        probability *= weight;
        steps.push_back(std::move(step));
        return steps.back();
    };

    for (;;) {
        int pivot = 0;
        for (const PartyRank &pr : schmidt_profile(act.state)) {
            if (pr.rank >= 2) {
                pivot = pr.party;
                break;
            }
        }
        if (pivot == 0) {
            throw NumericDegeneracyError("entangled remainder lost all Schmidt rank");
        }

        EqualizeResult eq = equalize_filter(act.state, pivot);
        record(pivot, eq.filter.matrix, FilterKind::equalize, eq.weight);
        act.state = eq.post_state;

        BranchClassification cls = classify_branch(act.state, eq.basis);

        if (cls.branch_case == BranchCase::b_entangled) {
            const Vector &u = cls.branch_is_product[0] ? eq.basis.u1 : eq.basis.u0;
            WeightedVector applied = apply_local(act.state, pivot, u * u.adjoint());
            record(pivot, u * u.adjoint(), FilterKind::project, applied.weight);
            act.state = PureState::normalized(act.state.layout(), std::move(applied.vector));
            drop_party(act, pivot, u);
            drop_product_parties(act);
            ++case_b_steps;
            if (act.parties() < 2) {
                throw NumericDegeneracyError("entangled branch collapsed to a product state");
            }
            continue;
        }

        // Case A. Map differing parties onto |0>, |1>.
        std::vector<int> same_positions;
        for (const PartyRelation &rel : cls.relations) {
            if (rel.relation == LocalRelation::same) {
                same_positions.push_back(rel.party);
                continue;
            }
            Matrix op = biorthogonal_filter(rel.chi, rel.chi_tilde);
            WeightedVector applied = apply_local(act.state, rel.party, op);
            record(rel.party, std::move(op), FilterKind::biorthogonal, applied.weight);
            act.state = PureState::normalized(act.state.layout(), std::move(applied.vector));
        }

        // Logical |0>, |1> of each GHZ party: Schmidt pair at the pivot,
        // computational states elsewhere.
        std::vector<std::pair<Vector, Vector>> logical;
        for (int pos = 1; pos <= act.parties(); ++pos) {
            int d = act.state.layout().dim(pos);
            if (pos == pivot) {
                logical.emplace_back(eq.basis.u0, eq.basis.u1);
            } else {
                logical.emplace_back(basis_vector(d, 0), basis_vector(d, 1));
            }
        }

        // Drop the unentangled parties, highest position first.
        for (auto it = same_positions.rbegin(); it != same_positions.rend(); ++it) {
            const PartyRelation &rel = *std::find_if(cls.relations.begin(), cls.relations.end(),
                                                     [&](const PartyRelation &r) { return r.party == *it; });
            drop_party(act, *it, rel.chi);
            logical.erase(logical.begin() + (*it - 1));
        }

        std::pair<int, int> pair = target_pair_choice(act.labels, requested);

        for (int pos = act.parties(); pos >= 1; --pos) {
            int label = act.labels[static_cast<std::size_t>(pos - 1)];
            if (label == pair.first || label == pair.second) {
                continue;
            }
            const auto &[b0, b1] = logical[static_cast<std::size_t>(pos - 1)];
            Vector plus = (b0 + b1) / std::numbers::sqrt2;
            WeightedVector applied = apply_local(act.state, pos, plus * plus.adjoint());
            ExtractionStep &step = record(pos, plus * plus.adjoint(), FilterKind::measure_pm, 1.0);
            step.outcome = +1;
            act.state = PureState::normalized(act.state.layout(), std::move(applied.vector));
            drop_party(act, pos, plus);
            logical.erase(logical.begin() + (pos - 1));
            step.relative_phase = ghz_relative_phase(act, logical);
        }

        ExtractionResult result{pair, probability, std::move(steps), act.state, {}, case_b_steps};
        SchmidtDecomposition sd = schmidt(act.state, {1});
        result.schmidt_coeffs = {sd.coefficients.at(0), sd.rank() > 1 ? sd.coefficients[1] : 0.0};
        return result;
    }
}

PureState replay(const PureState &input, const std::vector<ExtractionStep> &steps) {
    Vector v = input.amplitudes();
    for (const ExtractionStep &step : steps) {
        v = apply_local(v, input.layout(), step.filter.party, step.filter.matrix);
        double norm = v.norm();
        if (!(norm > 0)) {
            throw NumericDegeneracyError("replayed branch was annihilated");
        }
        v /= norm;
    }
    return PureState::normalized(input.layout(), std::move(v));
}

double replay_fidelity(const PureState &input, const ExtractionResult &result) {
    PureState replayed = replay(input, result.steps);
    Matrix rho = reduced_operator(replayed, {result.pair.first, result.pair.second});
    const Vector &f = result.final_state.amplitudes();
    return (f.adjoint() * rho * f)(0, 0).real();
}

}  // namespace boundbell::locc
