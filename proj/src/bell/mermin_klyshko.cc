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

#include "boundbell/bell/mermin_klyshko.h"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

#include "boundbell/kernels/kernels.h"

namespace boundbell::bell {
namespace {

constexpr int kMaxQubits = 12;

Matrix sigma_raw(const Direction &a) {
    Matrix s(2, 2);
    s(0, 0) = a[2];
    s(1, 1) = -a[2];
    s(0, 1) = cplx{a[0], -a[1]};
    s(1, 0) = cplx{a[0], a[1]};
    return s;
}

void check_unit(const Direction &a) {
    double n = std::sqrt(a[0] * a[0] + a[1] * a[1] + a[2] * a[2]);
    if (!(std::abs(n - 1.0) <= kUnitTolerance)) {
        throw std::invalid_argument("measurement direction is not a unit vector (norm " + std::to_string(n) + ")");
    }
}

// Contracts the least-significant qubit of m against s:
//   out(r, c) = sum_{s,t} s(t, s) m(2r + s, 2c + t)
// so that tr((X (x) s) m) = tr(X out).
Matrix contract_last_qubit(const Matrix &m, const Matrix &s) {
    const Eigen::Index n = m.rows() / 2;
    const cplx coeffs[4] = {s(0, 0), s(0, 1), s(1, 0), s(1, 1)};
    const auto &k = kernels::active();
    Matrix out(n, n);
    for (Eigen::Index c = 0; c < n; ++c) {
        k.contract_qubit(m.col(2 * c).data(), m.col(2 * c + 1).data(), coeffs, out.col(c).data(),
                         static_cast<std::size_t>(n));
    }
    return out;
}

cplx trace_product_2x2(const Matrix &s, const Matrix &m) {
    return s(0, 0) * m(0, 0) + s(0, 1) * m(1, 0) + s(1, 0) * m(0, 1) + s(1, 1) * m(1, 1);
}

struct PairValue {
    cplx b;
    cplx b_prime;
};

// (tr(B_k m), tr(B'_k m)) for m on parties 1..k.
PairValue contract_recursive(const Matrix &m, int k, const std::vector<Direction> &a,
                             const std::vector<Direction> &a_prime) {
    const auto j = static_cast<std::size_t>(k - 1);
    if (k == 1) {
        return {trace_product_2x2(sigma_raw(a[0]), m), trace_product_2x2(sigma_raw(a_prime[0]), m)};
    }
    Matrix s = sigma_raw(a[j]);
    Matrix sp = sigma_raw(a_prime[j]);
    PairValue plus = contract_recursive(contract_last_qubit(m, s + sp), k - 1, a, a_prime);
    PairValue minus = contract_recursive(contract_last_qubit(m, s - sp), k - 1, a, a_prime);
    return {0.5 * (plus.b + minus.b_prime), 0.5 * (plus.b_prime - minus.b)};
}

cplx evaluate_raw(const Matrix &rho, int n, const std::vector<Direction> &a, const std::vector<Direction> &a_prime) {
    return contract_recursive(rho, n, a, a_prime).b;
}

void check_layout(const DensityOperator &rho, const BellSettings &settings) {
    if (!rho.layout().all_qubits()) {
        throw std::invalid_argument("Bell evaluation needs an all-qubit layout");
    }
    if (rho.layout().parties() != settings.parties()) {
        throw std::invalid_argument("settings cover " + std::to_string(settings.parties()) +
                                    " parties but the state has " + std::to_string(rho.layout().parties()));
    }
}

// out = 1/2 (x (x) s_plus + sign * y (x) s_minus), written block by block.
Matrix recursion_step(const Matrix &x, const Matrix &y, const Matrix &s_plus, const Matrix &s_minus, double sign) {
    const Eigen::Index n = x.rows();
    Matrix out(2 * n, 2 * n);
    for (Eigen::Index c = 0; c < n; ++c) {
        for (Eigen::Index r = 0; r < n; ++r) {
            out.block<2, 2>(2 * r, 2 * c) = 0.5 * (x(r, c) * s_plus + (sign * y(r, c)) * s_minus);
        }
    }
    return out;
}

Direction random_direction(std::mt19937_64 &rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    for (;;) {
        Direction d{normal(rng), normal(rng), normal(rng)};
        double n = std::sqrt(d[0] * d[0] + d[1] * d[1] + d[2] * d[2]);
        if (n > 1e-6) {
            return {d[0] / n, d[1] / n, d[2] / n};
        }
    }
}

// Exact optimal update of one direction vector; returns false when the
// gradient vanishes and the vector is left as is.
bool update_direction(const Matrix &rho, int n, std::vector<Direction> &a, std::vector<Direction> &a_prime,
                      bool primed, std::size_t j) {
    Direction &target = primed ? a_prime[j] : a[j];
    const Direction saved = target;
    // The value is affine in one vector: the term carrying the partner
    // direction does not involve it. Subtract that offset (the value at 0).
    target = {0.0, 0.0, 0.0};
    const double offset = evaluate_raw(rho, n, a, a_prime).real();
    Direction grad{};
    for (int axis = 0; axis < 3; ++axis) {
        target = {0.0, 0.0, 0.0};
        target[static_cast<std::size_t>(axis)] = 1.0;
        grad[static_cast<std::size_t>(axis)] = evaluate_raw(rho, n, a, a_prime).real() - offset;
    }
    double norm = std::sqrt(grad[0] * grad[0] + grad[1] * grad[1] + grad[2] * grad[2]);
    if (norm < 1e-14) {
        target = saved;
        return false;
    }
    target = {grad[0] / norm, grad[1] / norm, grad[2] / norm};
    return true;
}

}  // namespace

BellSettings::BellSettings(std::vector<Direction> a, std::vector<Direction> a_prime)
    : a_(std::move(a)), a_prime_(std::move(a_prime)) {
    if (a_.empty() || a_.size() != a_prime_.size()) {
        throw std::invalid_argument("settings need the same nonzero number of a and a' directions");
    }
    for (const Direction &d : a_) {
        check_unit(d);
    }
    for (const Direction &d : a_prime_) {
        check_unit(d);
    }
}

BellSettings BellSettings::xy(int n) {
    if (n < 1) {
        throw std::invalid_argument("need at least one party");
    }
    auto count = static_cast<std::size_t>(n);
    return BellSettings(std::vector<Direction>(count, {1.0, 0.0, 0.0}), std::vector<Direction>(count, {0.0, 1.0, 0.0}));
}

BellSettings BellSettings::random(int n, std::uint64_t seed) {
    if (n < 1) {
        throw std::invalid_argument("need at least one party");
    }
    std::mt19937_64 rng(seed);
    std::vector<Direction> a, ap;
    for (int j = 0; j < n; ++j) {
        a.push_back(random_direction(rng));
        ap.push_back(random_direction(rng));
    }
    return BellSettings(std::move(a), std::move(ap));
}

Matrix pauli_along(const Direction &a) {
    check_unit(a);
    return sigma_raw(a);
}

BellOperator build_bell(const BellSettings &settings) {
    const int n = settings.parties();
    if (n > kMaxQubits) {
        throw std::invalid_argument("dense Bell operator is limited to 12 qubits");
    }
    Matrix b = sigma_raw(settings.a()[0]);
    Matrix bp = sigma_raw(settings.a_prime()[0]);
    for (int k = 2; k <= n; ++k) {
        const auto j = static_cast<std::size_t>(k - 1);
        Matrix s = sigma_raw(settings.a()[j]);
        Matrix sp = sigma_raw(settings.a_prime()[j]);
        Matrix next_b = recursion_step(b, bp, s + sp, s - sp, 1.0);
        if (k < n) {
            bp = recursion_step(bp, b, sp + s, sp - s, 1.0);
        }
        b = std::move(next_b);
    }
    return {PartyLayout::qubits(n), std::move(b)};
}

BellOperator closed_form_xy(int n) {
    if (n < 2 || n > kMaxQubits) {
        throw std::invalid_argument("closed form needs 2 <= N <= 12");
    }
    const double magnitude = std::pow(2.0, (n - 1) / 2.0);
    const double beta = std::numbers::pi / 4.0 * (n - 1);
    auto d = static_cast<Eigen::Index>(std::size_t{1} << n);
    Matrix m = Matrix::Zero(d, d);
    m(d - 1, 0) = std::polar(magnitude, beta);
    m(0, d - 1) = std::polar(magnitude, -beta);
    return {PartyLayout::qubits(n), std::move(m)};
}

cplx expectation(const BellOperator &b, const DensityOperator &rho) {
    if (!(b.layout == rho.layout())) {
        throw std::invalid_argument("Bell operator and state layouts differ");
    }
    // tr(B rho) = sum_ij B_ij rho_ji = sum_ij conj(rho_ij) B_ij for Hermitian rho.
    const auto n = static_cast<std::size_t>(rho.matrix().size());
    return kernels::active().cdotc(rho.matrix().data(), b.matrix.data(), n);
}

double bell_value(const DensityOperator &rho, const BellSettings &settings) {
    check_layout(rho, settings);
    cplx v = evaluate_raw(rho.matrix(), settings.parties(), settings.a(), settings.a_prime());
    if (std::abs(v.imag()) > 1e-10 * std::max(1.0, std::abs(v.real()))) {
        throw std::runtime_error("Bell value has a non-negligible imaginary part");
    }
    return v.real();
}

OptimizeResult optimize_settings(const DensityOperator &rho, const OptimizeOptions &options) {
    if (!rho.layout().all_qubits()) {
        throw std::invalid_argument("optimize_settings needs an all-qubit layout");
    }
    const int n = rho.layout().parties();
    if (n > 10) {
        throw std::invalid_argument("optimize_settings is limited to 10 qubits");
    }
    if (options.restarts < 1 || options.max_sweeps < 1) {
        throw std::invalid_argument("optimize_settings needs restarts >= 1 and max_sweeps >= 1");
    }
    const Matrix &m = rho.matrix();

    OptimizeResult best{BellSettings::xy(n), -INFINITY, -1, {}, {}};
    for (int r = 0; r < options.restarts; ++r) {
        BellSettings start = BellSettings::random(n, options.seed + static_cast<std::uint64_t>(r));
        std::vector<Direction> a = start.a();
        std::vector<Direction> ap = start.a_prime();
        double value = evaluate_raw(m, n, a, ap).real();
        int sweep = 0;
        while (sweep < options.max_sweeps) {
            ++sweep;
            for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j) {
                update_direction(m, n, a, ap, false, j);
                update_direction(m, n, a, ap, true, j);
            }
            double next = evaluate_raw(m, n, a, ap).real();
            double gain = next - value;
            value = next;
            if (gain < options.tol) {
                break;
            }
        }
        best.restart_values.push_back(value);
        best.restart_sweeps.push_back(sweep);
        if (value > best.value) {
            best.value = value;
            best.best_restart = r;
            best.settings = BellSettings(std::move(a), std::move(ap));
        }
    }
    return best;
}

}  // namespace boundbell::bell
