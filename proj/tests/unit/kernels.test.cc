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

#include <random>
#include <vector>

#include "gtest/gtest.h"

using namespace boundbell::kernels;

namespace {

std::vector<cplx> random_buffer(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<cplx> v(n);
    for (auto &x : v) {
        x = {u(rng), u(rng)};
    }
    return v;
}

std::vector<const KernelTable *> simd_tables() {
    std::vector<const KernelTable *> out;
    if (const KernelTable *t = avx2_table()) {
        out.push_back(t);
    }
    if (const KernelTable *t = neon_table()) {
        out.push_back(t);
    }
    return out;
}

constexpr double kTol = 1e-13;

}  // namespace

TEST(kernels, active_table_is_one_of_the_compiled_variants) {
    const KernelTable &t = active();
    EXPECT_TRUE(t.name == "scalar" || t.name == "avx2" || t.name == "neon");
}

TEST(kernels, scalar_reference_small_cases) {
    const KernelTable &s = scalar_table();
    std::vector<cplx> x = {{1, 2}, {3, -1}};
    std::vector<cplx> y = {{0, 1}, {2, 2}};
    // conj(1+2i)(i) + conj(3-i)(2+2i) = (2+i) + (4+8i)
    EXPECT_EQ(s.cdotc(x.data(), y.data(), 2), cplx(6, 9));
    EXPECT_EQ(s.norm2(x.data(), 2), 15.0);
    s.caxpy({0, 1}, x.data(), y.data(), 2);
    EXPECT_EQ(y[0], cplx(-2, 2));
    EXPECT_EQ(y[1], cplx(3, 5));
    EXPECT_EQ(s.cdotc(x.data(), y.data(), 0), cplx(0, 0));
}

TEST(kernels, simd_variants_match_scalar_reference) {
    const KernelTable &ref = scalar_table();
    for (const KernelTable *t : simd_tables()) {
        SCOPED_TRACE(std::string(t->name));
        for (std::size_t n = 0; n <= 67; ++n) {
            auto x = random_buffer(n, 11 + n);
            auto y = random_buffer(n, 1000 + n);
            cplx a = ref.cdotc(x.data(), y.data(), n);
            cplx b = t->cdotc(x.data(), y.data(), n);
            EXPECT_NEAR(a.real(), b.real(), kTol * (1 + n));
            EXPECT_NEAR(a.imag(), b.imag(), kTol * (1 + n));
            EXPECT_NEAR(ref.norm2(x.data(), n), t->norm2(x.data(), n), kTol * (1 + n));

            auto y_ref = y;
            auto y_simd = y;
            ref.caxpy({0.3, -0.7}, x.data(), y_ref.data(), n);
            t->caxpy({0.3, -0.7}, x.data(), y_simd.data(), n);
            for (std::size_t i = 0; i < n; ++i) {
                EXPECT_NEAR(std::abs(y_ref[i] - y_simd[i]), 0.0, kTol);
            }
        }
    }
}

TEST(kernels, contract_qubit_matches_scalar_reference) {
    const KernelTable &ref = scalar_table();
    auto coeffs = random_buffer(4, 5);
    for (const KernelTable *t : simd_tables()) {
        SCOPED_TRACE(std::string(t->name));
        for (std::size_t n_out : {1u, 2u, 3u, 8u, 33u}) {
            auto col0 = random_buffer(2 * n_out, 100 + n_out);
            auto col1 = random_buffer(2 * n_out, 200 + n_out);
            std::vector<cplx> out_ref(n_out), out_simd(n_out);
            ref.contract_qubit(col0.data(), col1.data(), coeffs.data(), out_ref.data(), n_out);
            t->contract_qubit(col0.data(), col1.data(), coeffs.data(), out_simd.data(), n_out);
            for (std::size_t r = 0; r < n_out; ++r) {
                EXPECT_NEAR(std::abs(out_ref[r] - out_simd[r]), 0.0, kTol);
            }
        }
    }
}

TEST(kernels, contract_qubit_scalar_definition) {
    std::vector<cplx> col0 = {1, 2, 3, 4};
    std::vector<cplx> col1 = {5, 6, 7, 8};
    std::vector<cplx> c = {1, 10, 100, 1000};
    std::vector<cplx> out(2);
    scalar_table().contract_qubit(col0.data(), col1.data(), c.data(), out.data(), 2);
    EXPECT_EQ(out[0], cplx(1 + 20 + 500 + 6000));
    EXPECT_EQ(out[1], cplx(3 + 40 + 700 + 8000));
}
