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

#ifndef BOUNDBELL_MODEL_STATES_H
#define BOUNDBELL_MODEL_STATES_H

#include <cstdint>
#include <utility>

#include "boundbell/tensor/sparse.h"
#include "boundbell/tensor/state.h"

namespace boundbell::model {

/// GHZ phase that makes the x/y Mermin-Klyshko value maximal: pi (N-1) / 4.
double default_alpha(int n);

struct RhoFamilySpec {
    int n = 4;
    double alpha = 0;

    static RhoFamilySpec with_default_alpha(int n) {
        return {n, default_alpha(n)};
    }
};

/// (|0...0> + e^{i alpha} |1...1>) / sqrt(2) on n qubits, n >= 2.
PureState ghz(int n, double alpha);

/// |GHZ><GHZ| written entrywise: 1/2 on the two diagonal corners and
/// e^{+-i alpha}/2 off-diagonal. Only the off-diagonal corners depend on alpha.
DensityOperator ghz_projector(int n, double alpha);

/// Basis index of the product state with a single |1> at party k: 2^(n-k).
std::size_t flip_index(int n, int k);

/// Projectors onto |phi_k> (single |1> at party k) and onto its bit
/// complement (single |0> at party k).
std::pair<DensityOperator, DensityOperator> flip_projectors(int n, int k);

/// rho_N = (|GHZ><GHZ| + 1/2 sum_k (P_k + Pbar_k)) / (N + 1), from its 2N+1
/// rank-one pieces. The sparse form holds only the nonzero entries.
SparseHermitian rho_n_sparse(const RhoFamilySpec &spec);
DensityOperator rho_n(const RhoFamilySpec &spec);

/// Haar-random pure state: i.i.d. complex normal amplitudes, normalized.
/// Deterministic in `seed` for a given standard library build.
PureState random_pure(const PartyLayout &layout, std::uint64_t seed);

/// Convex mixture of `terms` random product pure states with random weights.
DensityOperator random_separable(const PartyLayout &layout, int terms, std::uint64_t seed);

}  // namespace boundbell::model

#endif
