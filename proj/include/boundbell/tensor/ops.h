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

#ifndef BOUNDBELL_TENSOR_OPS_H
#define BOUNDBELL_TENSOR_OPS_H

#include <span>
#include <vector>

#include "boundbell/tensor/state.h"

namespace boundbell {

inline constexpr double kSchmidtCutoff = 1e-10;

/// Mixed-radix product; the layout is the concatenation of factor layouts.
PureState tensor_product(std::span<const PureState> factors);

/// Kronecker product with `a` on the more significant digits.
Matrix kron(const Matrix &a, const Matrix &b);

/// Swaps the row and column digits of the parties in `subset`.
/// A pure permutation of entries, so applying it twice is bit-exact.
Matrix partial_transpose(const Matrix &m, const PartyLayout &layout, const PartySet &subset);
DensityOperator partial_transpose(const DensityOperator &rho, const PartySet &subset);

/// Traces out `traced_out` (must leave at least one party).
Matrix partial_trace(const Matrix &m, const PartyLayout &layout, const PartySet &traced_out);
DensityOperator partial_trace(const DensityOperator &rho, const PartySet &traced_out);

/// Reduced operator of a pure state on `keep`, computed from the amplitudes.
Matrix reduced_operator(const PureState &psi, const PartySet &keep);

struct EigenSystem {
    std::vector<double> values;  // ascending
    Matrix vectors;              // column k belongs to values[k]
};

/// Eigenvalues of a Hermitian matrix, ascending.
///
/// The matrix is split into the connected blocks of its sparsity graph and
/// each block is solved densely, so block-structured operators such as
/// partial transposes of sparse states stay cheap at 12 qubits.
std::vector<double> hermitian_eigenvalues(const Matrix &h);
std::vector<double> hermitian_eigenvalues(const DensityOperator &rho);

/// As above with eigenvectors; each vector's first nonzero component is
/// real positive.
EigenSystem hermitian_eigensystem(const Matrix &h);

struct SchmidtDecomposition {
    PartySet bipartition;
    std::vector<double> coefficients;  // descending, all above the cutoff
    std::vector<PureState> left_vectors;   // on `bipartition`
    std::vector<PureState> right_vectors;  // on the complement

    std::size_t rank() const {
        return coefficients.size();
    }
};

/// Schmidt decomposition across `bipartition` versus the rest.
///
/// Left vectors have their first nonzero component real positive. Within a
/// group of equal coefficients the basis is canonicalized from the subspace
/// alone (projected computational basis vectors, Gram-Schmidt in index
/// order), so degenerate inputs like GHZ states give computational vectors.
SchmidtDecomposition schmidt(const PureState &psi, const PartySet &bipartition, double cutoff = kSchmidtCutoff);

/// Applies `op` to one party. Weight is the squared norm of the result.
WeightedVector apply_local(const PureState &psi, int party, const Matrix &op);
Vector apply_local(const Vector &v, const PartyLayout &layout, int party, const Matrix &op);

/// Largest singular value.
double operator_norm(const Matrix &m);

/// Makes the first component with modulus above 1e-10 real positive.
void fix_phase(Eigen::Ref<Vector> v);

}  // namespace boundbell

#endif
