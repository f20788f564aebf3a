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

#include "boundbell/kernels/kernels.h"

namespace boundbell::kernels {
namespace {

cplx cdotc_scalar(const cplx *x, const cplx *y, std::size_t n) {
    double re = 0;
    double im = 0;
    for (std::size_t i = 0; i < n; ++i) {
        re += x[i].real() * y[i].real() + x[i].imag() * y[i].imag();
        im += x[i].real() * y[i].imag() - x[i].imag() * y[i].real();
    }
    return {re, im};
}

double norm2_scalar(const cplx *x, std::size_t n) {
    double acc = 0;
    for (std::size_t i = 0; i < n; ++i) {
        acc += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
    }
    return acc;
}

void caxpy_scalar(cplx a, const cplx *x, cplx *y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        y[i] += a * x[i];
    }
}

void contract_qubit_scalar(const cplx *col0, const cplx *col1, const cplx *c, cplx *out, std::size_t n_out) {
    for (std::size_t r = 0; r < n_out; ++r) {
        out[r] = c[0] * col0[2 * r] + c[1] * col0[2 * r + 1] + c[2] * col1[2 * r] + c[3] * col1[2 * r + 1];
    }
}

}  // namespace

const KernelTable &scalar_table() {
    static const KernelTable table{
        "scalar", &cdotc_scalar, &norm2_scalar, &caxpy_scalar, &contract_qubit_scalar};
    return table;
}

}  // namespace boundbell::kernels
