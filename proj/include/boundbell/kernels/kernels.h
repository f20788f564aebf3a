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

#ifndef BOUNDBELL_KERNELS_KERNELS_H
#define BOUNDBELL_KERNELS_KERNELS_H

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>

// Data-parallel inner loops over complex<double> buffers.
//
// Every kernel has a scalar reference version and, where the target supports
// it, an AVX2 (x86-64) or NEON (aarch64) version. The active table is picked
// once per process from the CPU features, or forced with the environment
// variable BOUNDBELL_KERNELS=scalar|avx2|neon.
//
// SIMD variants reassociate sums, so they agree with the scalar reference to
// rounding, not bit-for-bit. A given table is deterministic run to run.

namespace boundbell::kernels {

using cplx = std::complex<double>;

struct KernelTable {
    std::string_view name;

    // sum_i conj(x[i]) * y[i]
    cplx (*cdotc)(const cplx *x, const cplx *y, std::size_t n);

    // sum_i |x[i]|^2
    double (*norm2)(const cplx *x, std::size_t n);

    // y[i] += a * x[i]
    void (*caxpy)(cplx a, const cplx *x, cplx *y, std::size_t n);

    // Contraction of the least-significant qubit of two adjacent columns.
    //   out[r] = c[0]*col0[2r] + c[1]*col0[2r+1] + c[2]*col1[2r] + c[3]*col1[2r+1]
    // for r in [0, n_out). col0/col1 have length 2*n_out.
    void (*contract_qubit)(const cplx *col0, const cplx *col1, const cplx *c, cplx *out, std::size_t n_out);
};

const KernelTable &scalar_table();

/// Null when the variant was not compiled in or the CPU lacks the feature.
const KernelTable *avx2_table();
const KernelTable *neon_table();

/// Table used by the library. Selected on first use and then fixed.
const KernelTable &active();

inline cplx cdotc(std::span<const cplx> x, std::span<const cplx> y) {
    return active().cdotc(x.data(), y.data(), x.size());
}

inline double norm2(std::span<const cplx> x) {
    return active().norm2(x.data(), x.size());
}

inline void caxpy(cplx a, std::span<const cplx> x, std::span<cplx> y) {
    active().caxpy(a, x.data(), y.data(), x.size());
}

}  // namespace boundbell::kernels

#endif
