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

#ifndef BOUNDBELL_BELL_MERMIN_KLYSHKO_H
#define BOUNDBELL_BELL_MERMIN_KLYSHKO_H

#include <array>
#include <cstdint>
#include <vector>

#include "boundbell/tensor/state.h"

namespace boundbell::bell {

using Direction = std::array<double, 3>;

inline constexpr double kUnitTolerance = 1e-12;

/// Two measurement directions per qubit: sigma_a and sigma_a'.
class BellSettings {
   public:
    /// Throws std::invalid_argument on size mismatch or non-unit vectors.
    BellSettings(std::vector<Direction> a, std::vector<Direction> a_prime);

    /// a_j = x and a'_j = y at every party.
    static BellSettings xy(int n);
    /// Uniform random directions on the sphere.
    static BellSettings random(int n, std::uint64_t seed);

    int parties() const {
        return static_cast<int>(a_.size());
    }
    const std::vector<Direction> &a() const {
        return a_;
    }
    const std::vector<Direction> &a_prime() const {
        return a_prime_;
    }

   private:
    std::vector<Direction> a_;
    std::vector<Direction> a_prime_;
};

/// Mermin-Klyshko operator on an all-qubit layout.
struct BellOperator {
    PartyLayout layout;
    Matrix matrix;
};

/// a_x sigma_x + a_y sigma_y + a_z sigma_z for a unit vector a.
Matrix pauli_along(const Direction &a);

/// B_1 = sigma_{a_1}, B'_1 = sigma_{a'_1} and
///   B_k  = 1/2 B_{k-1}  (x) (s_k + s'_k) + 1/2 B'_{k-1} (x) (s_k - s'_k)
///   B'_k = 1/2 B'_{k-1} (x) (s'_k + s_k) + 1/2 B_{k-1}  (x) (s'_k - s_k)
/// with B_{k-1} on parties 1..k-1. Dense, n <= 12.
BellOperator build_bell(const BellSettings &settings);

/// 2^{(N-1)/2} (e^{i beta} |1..1><0..0| + h.c.), beta = pi (N-1) / 4.
BellOperator closed_form_xy(int n);

/// tr(B rho) via the Frobenius product of two dense matrices.
cplx expectation(const BellOperator &b, const DensityOperator &rho);

/// tr(B(settings) rho) without building B: the last qubit is contracted
/// against (s_k +- s'_k) recursively, O(D^2) work for D = 2^N.
/// Throws std::invalid_argument on layout mismatch and std::runtime_error if
/// the imaginary residue exceeds 1e-10.
double bell_value(const DensityOperator &rho, const BellSettings &settings);

struct OptimizeOptions {
    int restarts = 16;
    double tol = 1e-10;
    int max_sweeps = 500;
    std::uint64_t seed = 0;  // restart r starts from BellSettings::random(n, seed + r)
};

struct OptimizeResult {
    BellSettings settings;
    double value = 0;
    int best_restart = 0;
    std::vector<double> restart_values;
    std::vector<int> restart_sweeps;
};

/// Maximizes tr(B rho) over all settings by coordinate ascent.
///
/// tr(B rho) is affine in each direction vector, c + v.a, so the optimal
/// update of one vector is v / |v| with v_i the value at e_i minus the value
/// at the zero vector. Sweeps until the gain drops
/// below `tol`. Best restart wins; ties go to the lowest restart index.
OptimizeResult optimize_settings(const DensityOperator &rho, const OptimizeOptions &options = {});

}  // namespace boundbell::bell

#endif
