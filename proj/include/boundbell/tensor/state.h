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

#ifndef BOUNDBELL_TENSOR_STATE_H
#define BOUNDBELL_TENSOR_STATE_H

#include <complex>
#include <cstdint>

#include <Eigen/Dense>

#include "boundbell/tensor/layout.h"

namespace boundbell {

using cplx = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

inline constexpr double kNormTolerance = 1e-12;
inline constexpr double kHermitianTolerance = 1e-12;

/// Normalized amplitude vector over the product basis of a layout.
class PureState {
   public:
    /// Throws std::invalid_argument unless |amps| = 1 within kNormTolerance.
    PureState(PartyLayout layout, Vector amplitudes);

    /// Rescales to unit norm. Throws on a zero vector.
    static PureState normalized(PartyLayout layout, Vector amplitudes);
    static PureState basis(PartyLayout layout, std::size_t index);

    const PartyLayout &layout() const {
        return layout_;
    }
    const Vector &amplitudes() const {
        return amps_;
    }
    cplx amplitude(std::size_t index) const {
        return amps_(static_cast<Eigen::Index>(index));
    }

   private:
    PartyLayout layout_;
    Vector amps_;
};

/// Unnormalized intermediate: a vector together with its squared norm.
struct WeightedVector {
    Vector vector;
    double weight = 0;
};

enum class PsdStatus { unchecked, yes, no };

/// Hermitian, trace-one operator over a layout.
///
/// Partial transposes of states are stored here too; they keep trace one but
/// may have negative eigenvalues, which `psd` records when known.
class DensityOperator {
   public:
    /// Validates Hermiticity (entrywise, 1e-12), unit trace (1e-12) and the
    /// dense dimension cap. Throws std::invalid_argument.
    DensityOperator(PartyLayout layout, Matrix matrix, PsdStatus psd = PsdStatus::unchecked);

    static DensityOperator maximally_mixed(PartyLayout layout);
    static DensityOperator projector(const PureState &psi);

    const PartyLayout &layout() const {
        return layout_;
    }
    const Matrix &matrix() const {
        return matrix_;
    }
    PsdStatus psd() const {
        return psd_;
    }
    std::size_t dim() const {
        return layout_.total_dim();
    }
    cplx trace() const {
        return matrix_.trace();
    }

   private:
    PartyLayout layout_;
    Matrix matrix_;
    PsdStatus psd_;
};

/// Largest |M - M^H| entry.
double hermitian_defect(const Matrix &m);

}  // namespace boundbell

#endif
