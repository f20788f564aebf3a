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

#include "boundbell/model/states.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "boundbell/tensor/ops.h"
#include "gtest/gtest.h"
#include "oracles.h"
#include "test_util.h"

using namespace boundbell;

TEST(ghz, examples) {
    PureState g2 = model::ghz(2, 0.0);
    const double h = 1.0 / std::sqrt(2.0);
    EXPECT_NEAR(g2.amplitude(0).real(), h, 1e-15);
    EXPECT_EQ(g2.amplitude(1), cplx(0));
    EXPECT_EQ(g2.amplitude(2), cplx(0));
    EXPECT_NEAR(g2.amplitude(3).real(), h, 1e-15);

    PureState g3 = model::ghz(3, std::numbers::pi);
    EXPECT_NEAR(g3.amplitude(7).real(), -h, 1e-15);
    EXPECT_NEAR(g3.amplitude(7).imag(), 0.0, 1e-15);

    SchmidtDecomposition sd = schmidt(model::ghz(4, 0.3), {1});
    ASSERT_EQ(sd.rank(), 2u);
    EXPECT_NEAR(sd.coefficients[0], h, 1e-15);
    EXPECT_NEAR(sd.coefficients[1], h, 1e-15);

    EXPECT_THROW(model::ghz(1, 0.0), std::invalid_argument);
}

TEST(ghz, projector_matches_outer_product) {
    for (int n = 2; n <= 6; ++n) {
        const double alpha = 0.37 * n;
        PureState g = model::ghz(n, alpha);
        Matrix outer = g.amplitudes() * g.amplitudes().adjoint();
        DensityOperator p = model::ghz_projector(n, alpha);
        EXPECT_LT((outer - p.matrix()).cwiseAbs().maxCoeff(), 1e-15);
    }
}

TEST(flip_projectors, examples) {
    auto [p1, pbar1] = model::flip_projectors(4, 1);
    EXPECT_EQ(p1.matrix()(8, 8), cplx(1));
    EXPECT_EQ(pbar1.matrix()(7, 7), cplx(1));
    EXPECT_EQ(p1.matrix().cwiseAbs().sum(), 1.0);
    EXPECT_EQ(pbar1.matrix().cwiseAbs().sum(), 1.0);
    for (int k = 1; k <= 4; ++k) {
        EXPECT_EQ(model::flip_index(4, k), std::size_t{1} << (4 - k));
        for (int l = 1; l <= 4; ++l) {
            auto pk = model::flip_projectors(4, k).first;
            auto pbar = model::flip_projectors(4, l).second;
            EXPECT_EQ((pk.matrix() * pbar.matrix()).trace(), cplx(0));
        }
    }
    EXPECT_THROW(model::flip_projectors(4, 0), std::invalid_argument);
    EXPECT_THROW(model::flip_projectors(4, 5), std::invalid_argument);
}

TEST(rho_n, default_alpha) {
    EXPECT_DOUBLE_EQ(model::default_alpha(8), 7 * std::numbers::pi / 4);
    EXPECT_DOUBLE_EQ(model::default_alpha(7), 3 * std::numbers::pi / 2);
}

TEST(rho_n, diagonal_entries_from_direct_expansion) {
    for (int n = 3; n <= 8; ++n) {
        DensityOperator rho = model::rho_n(model::RhoFamilySpec::with_default_alpha(n));
        const double expect = 1.0 / (2.0 * (n + 1));
        EXPECT_NEAR(rho.matrix()(0, 0).real(), expect, 1e-15);
        for (int k = 1; k <= n; ++k) {
            const auto i = static_cast<Eigen::Index>(std::size_t{1} << (n - k));
            EXPECT_NEAR(rho.matrix()(i, i).real(), expect, 1e-15);
        }
        EXPECT_EQ(rho.psd(), PsdStatus::yes);
    }
}

TEST(rho_n, equals_sum_of_independent_projectors_bit_exactly) {
    for (int n = 2; n <= 8; ++n) {
        for (double alpha : {0.0, 0.3, model::default_alpha(n), -2.1}) {
            Matrix sum = model::ghz_projector(n, alpha).matrix();
            for (int k = 1; k <= n; ++k) {
                auto [p, pbar] = model::flip_projectors(n, k);
                sum += 0.5 * p.matrix();
                sum += 0.5 * pbar.matrix();
            }
            sum *= 1.0 / (n + 1);
            DensityOperator rho = model::rho_n({n, alpha});
            EXPECT_TRUE(test_util::bit_identical(rho.matrix(), sum)) << "n=" << n << " alpha=" << alpha;
            EXPECT_TRUE(test_util::bit_identical(model::rho_n_sparse({n, alpha}).to_dense(), sum));
        }
    }
}

TEST(rho_n, alpha_only_moves_the_ghz_corners) {
    for (int n = 2; n <= 6; ++n) {
        Matrix a = model::rho_n({n, 0.1}).matrix();
        Matrix b = model::rho_n({n, 2.9}).matrix();
        const Eigen::Index last = a.rows() - 1;
        for (Eigen::Index r = 0; r < a.rows(); ++r) {
            for (Eigen::Index c = 0; c < a.cols(); ++c) {
                const bool corner = (r == 0 && c == last) || (r == last && c == 0);
                if (corner) {
                    EXPECT_NE(a(r, c), b(r, c));
                } else {
                    EXPECT_EQ(a(r, c), b(r, c));
                }
            }
        }
    }
}

TEST(rho_n, trace_is_one_up_to_twelve_qubits) {
    for (int n = 2; n <= 12; ++n) {
        SparseHermitian s = model::rho_n_sparse(model::RhoFamilySpec::with_default_alpha(n));
        EXPECT_NEAR(s.trace().real(), 1.0, 1e-12);
        EXPECT_EQ(s.trace().imag(), 0.0);
    }
    DensityOperator rho12 = model::rho_n(model::RhoFamilySpec::with_default_alpha(12));
    EXPECT_NEAR(rho12.trace().real(), 1.0, 1e-12);
}

TEST(rho_n, positive_semidefinite_up_to_ten_qubits) {
    for (int n = 2; n <= 10; ++n) {
        DensityOperator rho = model::rho_n(model::RhoFamilySpec::with_default_alpha(n));
        EXPECT_GE(hermitian_eigenvalues(rho).front(), -1e-10) << n;
    }
}

TEST(rho_n, rank_of_rho4_is_nine) {
    DensityOperator rho = model::rho_n(model::RhoFamilySpec::with_default_alpha(4));
    std::vector<double> ev = oracle::hermitian_eigenvalues(test_util::to_cmat(rho.matrix()));
    int rank = 0;
    for (double v : ev) {
        EXPECT_GE(v, -1e-12);
        rank += v > 1e-10 ? 1 : 0;
    }
    EXPECT_EQ(rank, 9);
}

TEST(random_pure, deterministic_and_normalized) {
    PartyLayout layout({2, 3, 2});
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        PureState a = model::random_pure(layout, seed);
        PureState b = model::random_pure(layout, seed);
        EXPECT_TRUE(test_util::bit_identical(a.amplitudes(), b.amplitudes()));
        EXPECT_NEAR(a.amplitudes().norm(), 1.0, 1e-12);
    }
    EXPECT_FALSE(test_util::bit_identical(model::random_pure(layout, 1).amplitudes(), model::random_pure(layout, 2).amplitudes()));
}

TEST(random_pure, generic_states_are_entangled_at_every_party) {
    PartyLayout layout = PartyLayout::qubits(3);
    int generic = 0;
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        PureState psi = model::random_pure(layout, seed);
        bool all_two = true;
        for (int p = 1; p <= 3; ++p) {
            Matrix r = reduced_operator(psi, {p});
            std::vector<double> ev = oracle::hermitian_eigenvalues(test_util::to_cmat(r));
            all_two = all_two && ev[0] > 1e-20;
        }
        generic += all_two ? 1 : 0;
    }
    EXPECT_EQ(generic, 1000);
}

TEST(random_separable, is_a_state) {
    DensityOperator rho = model::random_separable(PartyLayout({2, 3, 2}), 5, 9);
    EXPECT_NEAR(rho.trace().real(), 1.0, 1e-12);
    EXPECT_GE(hermitian_eigenvalues(rho).front(), -1e-12);
}
