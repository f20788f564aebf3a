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

#ifndef BOUNDBELL_LOCC_EXTRACTION_H
#define BOUNDBELL_LOCC_EXTRACTION_H

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "boundbell/tensor/state.h"

// Single-copy extraction of a maximally entangled pair from an entangled
// multipartite pure state by local filters and measurements.
//
// The protocol:
//   1. Pick the lowest party whose single-party Schmidt rank is >= 2 (pivot).
//   2. Filter the pivot in its Schmidt basis so the top two coefficients
//      become equal and the rest vanish.
//   3. Split the state into the two pivot branches |phi_0>, |phi_1>.
//      Case A: both branches are product states. Parties where the local
//        factors differ get a biorthogonal filter that maps them onto |0>,
//        |1>; parties where they agree are unentangled and drop out. The
//        result is a GHZ state on the pivot and the differing parties.
//        Measuring all but two of them in the |+->basis leaves a Bell pair
//        whatever the outcomes.
//      Case B: some branch is entangled. Project the pivot onto it and
//        repeat on the strictly smaller entangled remainder.

namespace boundbell::locc {

inline constexpr double kFilterNormTolerance = 1e-12;
inline constexpr double kProductPurity = 1.0 - 1e-8;
inline constexpr double kSameOverlap = 1.0 - 1e-8;
inline constexpr double kOrthogonalOverlap = 1e-8;

enum class FilterKind { equalize, biorthogonal, project, measure_pm };

std::string to_string(FilterKind kind);

/// Local measurement element on one party (original 1-based label) with
/// largest singular value <= 1.
struct FilterOperator {
    int party = 0;
    Matrix matrix;
    FilterKind kind = FilterKind::equalize;
};

struct ExtractionStep {
    FilterOperator filter;
    /// Success probability of this step given the state before it. A
    /// |+-> measurement counts as 1 since both outcomes succeed.
    double weight = 1;
    /// Parties still carrying entanglement when the step was taken.
    int active_parties = 0;
    /// measure_pm only: simulated outcome (+1 or -1) and the relative phase
    /// arg(c1/c0) of the two GHZ branches after the step.
    int outcome = 0;
    double relative_phase = 0;
};

struct PartyRank {
    int party = 0;
    int rank = 0;
};

/// Single-party versus rest Schmidt rank for every party.
std::vector<PartyRank> schmidt_profile(const PureState &psi);

/// Two orthonormal local vectors of the pivot (its top Schmidt pair).
struct PivotBasis {
    int party = 0;  // position within the state's layout
    Vector u0;
    Vector u1;
};

struct EqualizeResult {
    FilterOperator filter;
    PureState post_state;
    double weight = 0;
    PivotBasis basis;
};

/// Filter lambda_1|u0><u0| + lambda_0|u1><u1| scaled to unit norm, where u0, u1
/// are the top two Schmidt vectors of `party`. Weight is 2 lambda_1^2.
/// Throws NotEntangledError if the party's Schmidt rank is below 2.
EqualizeResult equalize_filter(const PureState &psi, int party);

enum class BranchCase { a_product, b_entangled };

enum class LocalRelation { same, distinct };

struct PartyRelation {
    int party = 0;  // position within the state's layout
    LocalRelation relation = LocalRelation::distinct;
    double overlap = 0;  // |<chi|chi~>|
    Vector chi;          // local factor in branch 0
    Vector chi_tilde;    // local factor in branch 1
};

struct BranchClassification {
    BranchCase branch_case = BranchCase::b_entangled;
    std::array<bool, 2> branch_is_product{};
    /// Case A only: every non-pivot party, ascending.
    std::vector<PartyRelation> relations;
};

/// Splits a balanced state into the pivot branches sqrt(2) <u_i|psi> and
/// decides case A or B. Throws NumericDegeneracyError when case A has no
/// locally orthogonal party.
BranchClassification classify_branch(const PureState &balanced, const PivotBasis &basis);

/// As above with the pivot basis taken from schmidt() of `party`.
BranchClassification classify_branch(const PureState &balanced, int party);

/// Lowest two parties, or `requested` when both survive.
/// Throws PairUnavailableError otherwise.
std::pair<int, int> target_pair_choice(const std::vector<int> &survivors,
                                       std::optional<std::pair<int, int>> requested = std::nullopt);

struct ExtractionResult {
    std::pair<int, int> pair;
    double probability = 0;
    std::vector<ExtractionStep> steps;
    PureState final_state;  // two parties, in ascending label order
    std::array<double, 2> schmidt_coeffs{};
    int case_b_steps = 0;
};

/// Runs the protocol. Throws NotEntangledError for product input,
/// PairUnavailableError and NumericDegeneracyError as described above.
ExtractionResult extract(const PureState &psi, std::optional<std::pair<int, int>> requested = std::nullopt);

/// Applies the recorded filters to `input` in order and renormalizes.
PureState replay(const PureState &input, const std::vector<ExtractionStep> &steps);

/// <final| rho_pair |final> where rho_pair is the replayed state reduced to
/// the result's pair.
double replay_fidelity(const PureState &input, const ExtractionResult &result);

}  // namespace boundbell::locc

#endif
