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

// Acceptance criteria AC1..AC7. Prints one PASS/FAIL line per criterion and
// exits nonzero if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "boundbell/bell/mermin_klyshko.h"
#include "boundbell/locc/extraction.h"
#include "boundbell/model/states.h"
#include "boundbell/ppt/ppt.h"
#include "boundbell/tensor/ops.h"
#include "corpus.h"
#include "json.hpp"
#include "oracles.h"

using namespace boundbell;
using json = nlohmann::json;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    json report;
};

double mk_threshold(int n) {
    return std::pow(2.0, (n - 1) / 2.0) / (n + 1);
}

void require(Outcome &o, bool ok, const std::string &what) {
    if (!ok && o.pass) {
        o.detail = what;
    }
    o.pass = o.pass && ok;
}

// Threshold table of the x/y Mermin-Klyshko value on rho_N.
Outcome threshold_table() {
    Outcome o;
    double worst = 0;
    for (int n = 2; n <= 12; ++n) {
        const double v = bell::bell_value(model::rho_n(model::RhoFamilySpec::with_default_alpha(n)), bell::BellSettings::xy(n));
        const double err = std::abs(v - mk_threshold(n));
        worst = std::max(worst, err);
        require(o, err <= 1e-10, "N=" + std::to_string(n) + " off by " + std::to_string(err));
        if (n >= 8) {
            require(o, v > 1.0, "no violation at N=" + std::to_string(n));
        } else if (n == 7) {
            require(o, std::abs(v - 1.0) <= 1e-10, "N=7 not at the bound");
        } else {
            require(o, v < 1.0, "violation below N=7");
        }
        o.report.push_back({{"n", n}, {"value", v}, {"expected", mk_threshold(n)}});
    }
    if (o.pass) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "N=2..12 max |err| %.1e, value > 1 exactly for N >= 8", worst);
        o.detail = buf;
    }
    return o;
}

// Single-party cuts PSD, two-party cuts not, N = 4..8.
Outcome partial_transpose_signs() {
    Outcome o;
    double min_single = 1e300, max_pair = -1e300;
    for (int n = 4; n <= 8; ++n) {
        DensityOperator rho = model::rho_n(model::RhoFamilySpec::with_default_alpha(n));
        for (const PartySet &s : ppt::enumerate_subsets(n, 2)) {
            const double m = ppt::ppt_check(rho, s).min_eigenvalue;
            if (s.size() == 1) {
                min_single = std::min(min_single, m);
                require(o, m >= -1e-9, "negative single cut at N=" + std::to_string(n));
            } else {
                max_pair = std::max(max_pair, m);
                require(o, m < -1e-9, "non-negative pair cut at N=" + std::to_string(n));
            }
            o.report.push_back({{"n", n}, {"subset", s}, {"min_eig", m}});
        }
    }
    if (o.pass) {
        char buf[128];
        std::snprintf(buf, sizeof buf, "N=4..8 single-cut min eig >= %.2e, pair-cut min eig <= %.4f", min_single,
                      max_pair);
        o.detail = buf;
    }
    return o;
}

// Recursion with x/y settings equals the closed form.
Outcome recursion_closed_form() {
    Outcome o;
    double worst = 0;
    for (int n = 2; n <= 10; ++n) {
        const double d =
            (bell::build_bell(bell::BellSettings::xy(n)).matrix - bell::closed_form_xy(n).matrix).cwiseAbs().maxCoeff();
        worst = std::max(worst, d);
        require(o, d <= 1e-12, "N=" + std::to_string(n) + " differs by " + std::to_string(d));
        o.report.push_back({{"n", n}, {"max_abs_diff", d}});
    }
    if (o.pass) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "N=2..10 max entry difference %.1e", worst);
        o.detail = buf;
    }
    return o;
}

// GHZ reaches 2^{(N-1)/2}; flip projectors give zero.
Outcome ghz_maximum() {
    Outcome o;
    double worst_ghz = 0, worst_flip = 0;
    for (int n = 2; n <= 10; ++n) {
        bell::BellOperator b = bell::build_bell(bell::BellSettings::xy(n));
        const double g =
            bell::expectation(b, DensityOperator::projector(model::ghz(n, model::default_alpha(n)))).real();
        const double err = std::abs(g - std::pow(2.0, (n - 1) / 2.0));
        worst_ghz = std::max(worst_ghz, err);
        require(o, err <= 1e-10, "GHZ value off at N=" + std::to_string(n));
        json flips = json::array();
        for (int k = 1; k <= n; ++k) {
            auto [p, pbar] = model::flip_projectors(n, k);
            const double tp = std::abs(bell::expectation(b, p));
            const double tq = std::abs(bell::expectation(b, pbar));
            worst_flip = std::max({worst_flip, tp, tq});
            require(o, tp <= 1e-12 && tq <= 1e-12, "flip projector overlap at N=" + std::to_string(n));
            flips.push_back({tp, tq});
        }
        o.report.push_back({{"n", n}, {"ghz_value", g}, {"flip_values", flips}});
    }
    if (o.pass) {
        char buf[128];
        std::snprintf(buf, sizeof buf, "N=2..10 GHZ |err| <= %.1e, |tr(B P_k)| <= %.1e", worst_ghz, worst_flip);
        o.detail = buf;
    }
    return o;
}

// Optimizer on rho_8, |Phi+> (against the grid oracle) and a separable state.
Outcome optimizer_adequacy() {
    Outcome o;
    DensityOperator rho8 = model::rho_n(model::RhoFamilySpec::with_default_alpha(8));
    const double v8 = bell::optimize_settings(rho8).value;
    require(o, v8 >= mk_threshold(8) - 1e-6, "rho_8 below the x/y value");

    Vector phi = Vector::Zero(4);
    phi(0) = phi(3) = 1.0 / std::sqrt(2.0);
    DensityOperator bell_pair = DensityOperator::projector(PureState(PartyLayout::qubits(2), phi));
    const double v2 = bell::optimize_settings(bell_pair).value;
    const double grid = oracle::chsh_grid_maximum();
    require(o, v2 >= std::sqrt(2.0) - 1e-6, "|Phi+> below sqrt(2)");
    require(o, v2 >= grid - 1e-6, "|Phi+> below the grid oracle");

    DensityOperator sep = model::random_separable(PartyLayout::qubits(3), 4, 1);
    const double vs = bell::optimize_settings(sep).value;
    require(o, vs <= 1 + 1e-8, "separable state violates");

    o.report = {{"rho8", v8}, {"phi_plus", v2}, {"grid", grid}, {"separable", vs}};
    if (o.pass) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "rho_8 %.10f, |Phi+> %.10f (grid %.10f), separable %.10f", v8, v2, grid, vs);
        o.detail = buf;
    }
    return o;
}

// Pair extraction on 200 random states and on GHZ states.
Outcome extraction_suite() {
    Outcome o;
    const double h = 1.0 / std::sqrt(2.0);
    double min_prob = 1, min_fid = 1, worst_coeff = 0;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        PureState psi = corpus::entangled_state(seed);
        locc::ExtractionResult r = locc::extract(psi);
        const double fid = locc::replay_fidelity(psi, r);
        SchmidtDecomposition sd = schmidt(r.final_state, {1});
        double coeff_err = 1;
        if (sd.rank() == 2) {
            coeff_err = std::max(std::abs(sd.coefficients[0] - h), std::abs(sd.coefficients[1] - h));
        }
        min_prob = std::min(min_prob, r.probability);
        min_fid = std::min(min_fid, fid);
        worst_coeff = std::max(worst_coeff, coeff_err);
        require(o, r.probability > 0, "zero probability at seed " + std::to_string(seed));
        require(o, fid >= 1 - 1e-8, "replay fidelity at seed " + std::to_string(seed));
        require(o, coeff_err <= 1e-8, "coefficients at seed " + std::to_string(seed));
        o.report["corpus"].push_back({{"seed", seed},
                                      {"dims", psi.layout().dims()},
                                      {"pair", {r.pair.first, r.pair.second}},
                                      {"probability", r.probability},
                                      {"fidelity", fid},
                                      {"coefficients", sd.coefficients}});
    }
    for (int n = 2; n <= 10; ++n) {
        locc::ExtractionResult r = locc::extract(model::ghz(n, model::default_alpha(n)));
        require(o, std::abs(r.probability - 1.0) <= 1e-10, "GHZ probability at N=" + std::to_string(n));
        o.report["ghz"].push_back({{"n", n}, {"probability", r.probability}});
    }
    if (o.pass) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "200 states: min p %.3e, min fidelity 1-%.1e, coeff err %.1e; GHZ N=2..10 p=1",
                      min_prob, 1 - min_fid, worst_coeff);
        o.detail = buf;
    }
    return o;
}

struct Criterion {
    const char *id;
    std::function<Outcome()> run;
    double time_budget_s;  // 0: none
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"AC1", threshold_table, 60},        {"AC2", partial_transpose_signs, 120}, {"AC3", recursion_closed_form, 0},
        {"AC4", ghz_maximum, 0},             {"AC5", optimizer_adequacy, 0},        {"AC6", extraction_suite, 0},
    };
    bool all = true;
    std::vector<std::string> first_dumps;
    for (const Criterion &c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception &e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.time_budget_s > 0 && secs > c.time_budget_s) {
            o.pass = false;
            o.detail += " (over the " + std::to_string(static_cast<int>(c.time_budget_s)) + " s budget)";
        }
        first_dumps.push_back(o.report.dump());
        std::printf("%s %s: %s [%.2f s]\n", c.id, o.pass ? "PASS" : "FAIL", o.detail.c_str(), secs);
        std::fflush(stdout);
        all = all && o.pass;
    }

    // AC7: rerun everything and compare the serialized reports byte for byte.
    bool same = true;
    std::string which;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        std::string again;
        try {
            again = criteria[i].run().report.dump();
        } catch (const std::exception &) {
        }
        if (again != first_dumps[i]) {
            same = false;
            which += std::string(which.empty() ? "" : ",") + criteria[i].id;
        }
    }
    std::size_t bytes = 0;
    for (const std::string &d : first_dumps) {
        bytes += d.size();
    }
    if (same) {
        std::printf("AC7 PASS: reruns of AC1..AC6 are byte-identical (%zu bytes of reports)\n", bytes);
    } else {
        std::printf("AC7 FAIL: reports differ on rerun: %s\n", which.c_str());
    }
    all = all && same;
    return all ? 0 : 1;
}
