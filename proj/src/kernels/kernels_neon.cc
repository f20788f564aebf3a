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

#include <arm_neon.h>

#include "boundbell/kernels/kernels.h"

namespace boundbell::kernels {
namespace neon {
namespace {

// One complex<double> per float64x2_t.
inline float64x2_t cmul(float64x2_t a, float64x2_t x) {
    float64x2_t x_sw = vextq_f64(x, x, 1);
    float64x2_t t = vmulq_laneq_f64(x, a, 0);
    float64x2_t im_signed = {-vgetq_lane_f64(a, 1), vgetq_lane_f64(a, 1)};
    return vfmaq_f64(t, x_sw, im_signed);
}

cplx cdotc(const cplx *xc, const cplx *yc, std::size_t n) {
    const double *x = reinterpret_cast<const double *>(xc);
    const double *y = reinterpret_cast<const double *>(yc);
    float64x2_t acc_re = vdupq_n_f64(0.0);
    float64x2_t acc_im = vdupq_n_f64(0.0);
    for (std::size_t i = 0; i < n; ++i) {
        float64x2_t xv = vld1q_f64(x + 2 * i);
        float64x2_t yv = vld1q_f64(y + 2 * i);
        acc_re = vfmaq_f64(acc_re, xv, yv);
        acc_im = vfmaq_f64(acc_im, xv, vextq_f64(yv, yv, 1));
    }
    return {vaddvq_f64(acc_re), vgetq_lane_f64(acc_im, 0) - vgetq_lane_f64(acc_im, 1)};
}

double norm2(const cplx *xc, std::size_t n) {
    const double *x = reinterpret_cast<const double *>(xc);
    float64x2_t acc = vdupq_n_f64(0.0);
    for (std::size_t i = 0; i < n; ++i) {
        float64x2_t v = vld1q_f64(x + 2 * i);
        acc = vfmaq_f64(acc, v, v);
    }
    return vaddvq_f64(acc);
}

void caxpy(cplx a, const cplx *xc, cplx *yc, std::size_t n) {
    const double *x = reinterpret_cast<const double *>(xc);
    double *y = reinterpret_cast<double *>(yc);
    float64x2_t av = vld1q_f64(reinterpret_cast<const double *>(&a));
    for (std::size_t i = 0; i < n; ++i) {
        float64x2_t yv = vld1q_f64(y + 2 * i);
        vst1q_f64(y + 2 * i, vaddq_f64(yv, cmul(av, vld1q_f64(x + 2 * i))));
    }
}

void contract_qubit(const cplx *c0, const cplx *c1, const cplx *cc, cplx *outc, std::size_t n_out) {
    const double *col0 = reinterpret_cast<const double *>(c0);
    const double *col1 = reinterpret_cast<const double *>(c1);
    const double *c = reinterpret_cast<const double *>(cc);
    double *out = reinterpret_cast<double *>(outc);
    float64x2_t k0 = vld1q_f64(c), k1 = vld1q_f64(c + 2), k2 = vld1q_f64(c + 4), k3 = vld1q_f64(c + 6);
    for (std::size_t r = 0; r < n_out; ++r) {
        float64x2_t s = cmul(k0, vld1q_f64(col0 + 4 * r));
        s = vaddq_f64(s, cmul(k1, vld1q_f64(col0 + 4 * r + 2)));
        s = vaddq_f64(s, cmul(k2, vld1q_f64(col1 + 4 * r)));
        s = vaddq_f64(s, cmul(k3, vld1q_f64(col1 + 4 * r + 2)));
        vst1q_f64(out + 2 * r, s);
    }
}

}  // namespace
}  // namespace neon

const KernelTable *neon_table() {
    static const KernelTable table{"neon", &neon::cdotc, &neon::norm2, &neon::caxpy, &neon::contract_qubit};
    return &table;
}

}  // namespace boundbell::kernels
