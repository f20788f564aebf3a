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

// Compiled with -mavx2 -mfma. Only raw doubles and intrinsics are used here so
// that no inline library code is instantiated with AVX2 enabled.

#include <immintrin.h>

#include "boundbell/kernels/kernels.h"

namespace boundbell::kernels {
namespace avx2 {
namespace {

// Lane-wise complex product of two packed pairs [re0, im0, re1, im1].
inline __m256d cmul(__m256d a, __m256d x) {
    __m256d a_re = _mm256_movedup_pd(a);
    __m256d a_im = _mm256_permute_pd(a, 0b1111);
    __m256d x_sw = _mm256_permute_pd(x, 0b0101);
    return _mm256_fmaddsub_pd(a_re, x, _mm256_mul_pd(a_im, x_sw));
}

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

cplx cdotc(const cplx *xc, const cplx *yc, std::size_t n) {
    const double *x = reinterpret_cast<const double *>(xc);
    const double *y = reinterpret_cast<const double *>(yc);
    __m256d acc_re = _mm256_setzero_pd();
    __m256d acc_im = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d xv = _mm256_loadu_pd(x + 2 * i);
        __m256d yv = _mm256_loadu_pd(y + 2 * i);
        acc_re = _mm256_fmadd_pd(xv, yv, acc_re);
        acc_im = _mm256_fmadd_pd(xv, _mm256_permute_pd(yv, 0b0101), acc_im);
    }
    // acc_im lanes hold [xr*yi, xi*yr, ...]; the imaginary part is even - odd.
    alignas(32) double im_lanes[4];
    _mm256_store_pd(im_lanes, acc_im);
    double re = hsum(acc_re);
    double im = (im_lanes[0] - im_lanes[1]) + (im_lanes[2] - im_lanes[3]);
    for (; i < n; ++i) {
        double xr = x[2 * i], xi = x[2 * i + 1], yr = y[2 * i], yi = y[2 * i + 1];
        re += xr * yr + xi * yi;
        im += xr * yi - xi * yr;
    }
    return {re, im};
}

double norm2(const cplx *xc, std::size_t n) {
    const double *x = reinterpret_cast<const double *>(xc);
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d a = _mm256_loadu_pd(x + 2 * i);
        __m256d b = _mm256_loadu_pd(x + 2 * i + 4);
        acc0 = _mm256_fmadd_pd(a, a, acc0);
        acc1 = _mm256_fmadd_pd(b, b, acc1);
    }
    double acc = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) {
        acc += x[2 * i] * x[2 * i] + x[2 * i + 1] * x[2 * i + 1];
    }
    return acc;
}

void caxpy(cplx a, const cplx *xc, cplx *yc, std::size_t n) {
    const double *x = reinterpret_cast<const double *>(xc);
    double *y = reinterpret_cast<double *>(yc);
    const double ar = reinterpret_cast<const double *>(&a)[0];
    const double ai = reinterpret_cast<const double *>(&a)[1];
    __m256d av = _mm256_setr_pd(ar, ai, ar, ai);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d xv = _mm256_loadu_pd(x + 2 * i);
        __m256d yv = _mm256_loadu_pd(y + 2 * i);
        _mm256_storeu_pd(y + 2 * i, _mm256_add_pd(yv, cmul(av, xv)));
    }
    for (; i < n; ++i) {
        double xr = x[2 * i], xi = x[2 * i + 1];
        y[2 * i] += ar * xr - ai * xi;
        y[2 * i + 1] += ar * xi + ai * xr;
    }
}

void contract_qubit(const cplx *c0, const cplx *c1, const cplx *cc, cplx *outc, std::size_t n_out) {
    const double *col0 = reinterpret_cast<const double *>(c0);
    const double *col1 = reinterpret_cast<const double *>(c1);
    const double *c = reinterpret_cast<const double *>(cc);
    double *out = reinterpret_cast<double *>(outc);
    // [c0, c1] pairs with col0[2r], col0[2r+1]; [c2, c3] with col1.
    __m256d k0 = _mm256_loadu_pd(c);
    __m256d k1 = _mm256_loadu_pd(c + 4);
    for (std::size_t r = 0; r < n_out; ++r) {
        __m256d v0 = _mm256_loadu_pd(col0 + 4 * r);
        __m256d v1 = _mm256_loadu_pd(col1 + 4 * r);
        __m256d s = _mm256_add_pd(cmul(k0, v0), cmul(k1, v1));
        __m128d folded = _mm_add_pd(_mm256_castpd256_pd128(s), _mm256_extractf128_pd(s, 1));
        _mm_storeu_pd(out + 2 * r, folded);
    }
}

}  // namespace
}  // namespace avx2

const KernelTable *avx2_table() {
    static const KernelTable table{"avx2", &avx2::cdotc, &avx2::norm2, &avx2::caxpy, &avx2::contract_qubit};
    static const bool supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
    return supported ? &table : nullptr;
}

}  // namespace boundbell::kernels
