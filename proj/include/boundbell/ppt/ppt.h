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

#ifndef BOUNDBELL_PPT_PPT_H
#define BOUNDBELL_PPT_PPT_H

#include <optional>
#include <string>
#include <vector>

#include "boundbell/tensor/sparse.h"
#include "boundbell/tensor/state.h"

namespace boundbell::ppt {

inline constexpr double kDefaultTolerance = 1e-9;

enum class Verdict { psd, not_psd };

std::string to_string(Verdict v);

struct PptReport {
    PartySet subset;
    double min_eigenvalue = 0;
    Verdict verdict = Verdict::psd;
    double tolerance_used = 0;
};

struct BipartitionScan {
    std::vector<PptReport> reports;  // by subset size, then lexicographic
    bool all_ppt = true;
};

/// Subsets of {1..n} with sizes 1..max_size, ordered by size then
/// lexicographically.
std::vector<PartySet> enumerate_subsets(int n, int max_size);

/// Smallest eigenvalue of rho^{T_subset}; PSD iff it is >= -tol * max(1, tr).
PptReport ppt_check(const DensityOperator &rho, const PartySet &subset, double tol = kDefaultTolerance);
PptReport ppt_check(const SparseHermitian &rho, const PartySet &subset, double tol = kDefaultTolerance);

/// All subsets of size <= floor(N/2); complements share the spectrum.
BipartitionScan scan(const DensityOperator &rho, double tol = kDefaultTolerance);
BipartitionScan scan(const SparseHermitian &rho, double tol = kDefaultTolerance);

/// PPT facts that feed the bound-entanglement argument.
///
/// `npt_pairs` is empty below four parties, where every two-party cut is the
/// complement of a single-party cut. `non_distillability` labels the
/// logical consequence of PPT single cuts on an entangled state, so it is set
/// only with `bound_entangled_claim`; nothing here certifies it numerically.
struct Classification {
    int n = 0;
    bool ppt_single = false;
    std::optional<bool> npt_pairs;
    bool bound_entangled_claim = false;
    std::string non_distillability;  // "derived-by-theorem" or "not-applicable"
};

/// Checks every single-party cut and every two-party cut (k != l).
Classification classify(const SparseHermitian &rho, double tol = kDefaultTolerance);
Classification classify(const DensityOperator &rho, double tol = kDefaultTolerance);

/// classify() on rho_N(alpha), 2 <= N <= 12.
Classification classify_rho_n(int n, double alpha, double tol = kDefaultTolerance);

}  // namespace boundbell::ppt

#endif
