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

#include "boundbell/cli/commands.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"

#include "boundbell/bell/mermin_klyshko.h"
#include "boundbell/errors.h"
#include "boundbell/locc/extraction.h"
#include "boundbell/model/states.h"
#include "boundbell/ppt/ppt.h"
#include "boundbell/tensor/io.h"

namespace boundbell::cli {
namespace {

using json = nlohmann::json;

// |value| must exceed 1 by this much to count as a violation, so the N = 7
// boundary value 1 +- rounding does not flip the verdict.
constexpr double kViolationMargin = 1e-10;

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

double parse_double(const std::string &text, const std::string &what) {
    std::size_t used = 0;
    double v = 0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception &) {
        used = 0;
    }
    if (used == 0 || used != text.size() || !std::isfinite(v)) {
        throw std::invalid_argument(what + ": expected a finite number, got '" + text + "'");
    }
    return v;
}

std::vector<int> parse_int_list(const std::string &text, const std::string &what) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used == 0 || used != item.size()) {
            throw std::invalid_argument(what + ": expected comma-separated integers, got '" + text + "'");
        }
        out.push_back(v);
    }
    if (out.empty()) {
        throw std::invalid_argument(what + ": empty list");
    }
    return out;
}

void check_n(int n) {
    if (n < 2 || n > 12) {
        throw std::invalid_argument("--n must be in 2..12, got " + std::to_string(n));
    }
}

struct Alpha {
    double value = 0;
    std::string mode;  // "auto" or "explicit"
};

Alpha resolve_alpha(const std::string &text, int n) {
    if (text == "auto") {
        return {model::default_alpha(n), "auto"};
    }
    return {parse_double(text, "--alpha"), "explicit"};
}

struct Tolerance {
    double value = ppt::kDefaultTolerance;
    std::string source = "default";
};

Tolerance resolve_tolerance(const std::string &flag) {
    if (!flag.empty()) {
        return {parse_double(flag, "--tol"), "flag"};
    }
    if (const char *env = std::getenv(kToleranceEnv)) {
        return {parse_double(env, kToleranceEnv), "env"};
    }
    return {};
}

// Writes a report to `path`, or to `out` when no path is given. The summary
// goes to `out` in the first case and to `err` in the second so that stdout
// stays machine-readable.
void emit(const std::string &report, const std::string &path, const std::string &summary, std::ostream &out,
          std::ostream &err) {
    if (path.empty()) {
        out << report;
        err << summary << '\n';
        return;
    }
    std::ofstream file(path);
    if (!file) {
        throw std::invalid_argument("cannot write " + path);
    }
    file << report;
    if (!file) {
        throw std::invalid_argument("write failed for " + path);
    }
    out << summary << '\n';
}

std::string dump(const json &j) {
    return j.dump(2) + "\n";
}

DensityOperator load_operator(const std::string &path) {
    json j = io::read_json_file(path);
    if (io::is_pure_state_json(j)) {
        return DensityOperator::projector(io::pure_state_from_json(j));
    }
    return io::operator_from_json(j);
}

json optional_bool(const std::optional<bool> &b) {
    return b ? json(*b) : json(nullptr);
}

std::string bool_text(bool b) {
    return b ? "true" : "false";
}

std::string optional_text(const std::optional<bool> &b) {
    return b ? bool_text(*b) : "n/a";
}

json directions(const std::vector<bell::Direction> &ds) {
    json out = json::array();
    for (const bell::Direction &d : ds) {
        out.push_back({d[0], d[1], d[2]});
    }
    return out;
}

json settings_json(const bell::BellSettings &s) {
    return {{"a", directions(s.a())}, {"a_prime", directions(s.a_prime())}};
}

bell::BellSettings settings_from_json(const json &j) {
    auto read = [&](const char *key) {
        if (!j.is_object() || !j.contains(key) || !j[key].is_array()) {
            throw std::invalid_argument(std::string("settings file needs a \"") + key + "\" array");
        }
        std::vector<bell::Direction> out;
        for (const json &d : j[key]) {
            if (!d.is_array() || d.size() != 3 || !d[0].is_number() || !d[1].is_number() || !d[2].is_number()) {
                throw std::invalid_argument("settings directions are [x, y, z]");
            }
            out.push_back({d[0].get<double>(), d[1].get<double>(), d[2].get<double>()});
        }
        return out;
    };
    return bell::BellSettings(read("a"), read("a_prime"));
}

json matrix_json(const Matrix &m) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            row.push_back({m(r, c).real(), m(r, c).imag()});
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string subset_text(const PartySet &s) {
    std::string out;
    for (int p : s) {
        out += (out.empty() ? "" : ";") + std::to_string(p);
    }
    return out;
}

// ---------------------------------------------------------------- state

struct StateArgs {
    int n = 0;
    std::string alpha = "auto";
    std::string out;
};

int cmd_state(const StateArgs &a, std::ostream &out, std::ostream &err) {
    check_n(a.n);
    Alpha alpha = resolve_alpha(a.alpha, a.n);
    SparseHermitian rho = model::rho_n_sparse({a.n, alpha.value});
    json j = io::to_json(rho);
    const std::size_t nonzero = j["entries"].size();
    j["ghz"] = io::to_json(model::ghz(a.n, alpha.value));
    j["config"] = {{"command", "state"}, {"n", a.n}, {"alpha", alpha.value}, {"alpha_mode", alpha.mode},
                   {"pieces", 2 * a.n + 1}, {"nonzero_entries", nonzero}};
    emit(dump(j), a.out,
         "state N=" + std::to_string(a.n) + " alpha=" + fmt(alpha.value) + " pieces=" + std::to_string(2 * a.n + 1) +
             " nonzero_entries=" + std::to_string(nonzero),
         out, err);
    return kOk;
}

// ---------------------------------------------------------------- scan

struct ScanArgs {
    std::optional<int> n;
    std::string alpha = "auto";
    std::string in;
    std::string tol;
    std::string format = "json";
    std::string out;
};

int cmd_scan(const ScanArgs &a, std::ostream &out, std::ostream &err) {
    Tolerance tol = resolve_tolerance(a.tol);
    ppt::BipartitionScan scan;
    ppt::Classification cls;
    json config = {{"command", "scan"}, {"tol", tol.value}, {"tol_source", tol.source}, {"format", a.format}};
    if (a.n) {
        check_n(*a.n);
        Alpha alpha = resolve_alpha(a.alpha, *a.n);
        SparseHermitian rho = model::rho_n_sparse({*a.n, alpha.value});
        scan = ppt::scan(rho, tol.value);
        cls = ppt::classify(rho, tol.value);
        config["n"] = *a.n;
        config["alpha"] = alpha.value;
        config["alpha_mode"] = alpha.mode;
    } else {
        DensityOperator rho = load_operator(a.in);
        scan = ppt::scan(rho, tol.value);
        cls = ppt::classify(rho, tol.value);
        config["n"] = rho.layout().parties();
        config["dims"] = rho.layout().dims();
        config["alpha"] = nullptr;
        config["input"] = a.in;
    }
    const std::string summary = "ppt_single=" + bool_text(cls.ppt_single) + " npt_pairs=" + optional_text(cls.npt_pairs) +
                                " bound_entangled_claim=" + bool_text(cls.bound_entangled_claim) +
                                " all_ppt=" + bool_text(scan.all_ppt);
    if (a.format == "csv") {
        std::string csv = "# " + config.dump() + "\nsubset,size,min_eig,verdict\n";
        for (const ppt::PptReport &r : scan.reports) {
            csv += subset_text(r.subset) + "," + std::to_string(r.subset.size()) + "," + fmt(r.min_eigenvalue) + "," +
                   ppt::to_string(r.verdict) + "\n";
        }
        emit(csv, a.out, summary, out, err);
        return kOk;
    }
    json reports = json::array();
    for (const ppt::PptReport &r : scan.reports) {
        reports.push_back({{"subset", r.subset}, {"min_eig", r.min_eigenvalue}, {"verdict", ppt::to_string(r.verdict)}});
    }
    json j = {{"config", config},
              {"N", config["n"]},
              {"alpha", config["alpha"]},
              {"reports", reports},
              {"all_ppt", scan.all_ppt},
              {"classification",
               {{"ppt_single", cls.ppt_single},
                {"npt_pairs", optional_bool(cls.npt_pairs)},
                {"bound_entangled_claim", cls.bound_entangled_claim},
                {"non_distillability", cls.non_distillability}}}};
    emit(dump(j), a.out, summary, out, err);
    return kOk;
}

// ---------------------------------------------------------------- bell

struct BellArgs {
    std::optional<int> n;
    std::string alpha = "auto";
    std::string in;
    std::string settings = "xy";
    int restarts = 16;
    double tol = 1e-10;
    std::uint64_t seed = 0;
    std::string settings_out;
    std::string out;
};

int cmd_bell(const BellArgs &a, std::ostream &out, std::ostream &err) {
    json config = {{"command", "bell"}, {"settings", a.settings}, {"violation_margin", kViolationMargin}};
    std::optional<DensityOperator> rho;
    if (a.n) {
        check_n(*a.n);
        Alpha alpha = resolve_alpha(a.alpha, *a.n);
        rho.emplace(model::rho_n({*a.n, alpha.value}));
        config["n"] = *a.n;
        config["alpha"] = alpha.value;
        config["alpha_mode"] = alpha.mode;
    } else {
        rho.emplace(load_operator(a.in));
        config["n"] = rho->layout().parties();
        config["alpha"] = nullptr;
        config["input"] = a.in;
    }
    const int n = rho->layout().parties();
    json j;
    std::optional<bell::BellSettings> settings;
    double value = 0;
    if (a.settings == "optimize") {
        config["restarts"] = a.restarts;
        config["tol"] = a.tol;
        config["seed"] = a.seed;
        bell::OptimizeResult r = bell::optimize_settings(*rho, {.restarts = a.restarts, .tol = a.tol, .seed = a.seed});
        value = r.value;
        settings = r.settings;
        j["best_restart"] = r.best_restart;
        j["restart_values"] = r.restart_values;
        j["restart_sweeps"] = r.restart_sweeps;
        if (!a.settings_out.empty()) {
            io::write_json_file(a.settings_out, settings_json(*settings));
            config["settings_out"] = a.settings_out;
        }
    } else {
        if (a.settings == "xy") {
            settings = bell::BellSettings::xy(n);
        } else {
            settings = settings_from_json(io::read_json_file(a.settings));
        }
        value = bell::bell_value(*rho, *settings);
    }
    const bool violation = std::abs(value) > 1.0 + kViolationMargin;
    j["config"] = config;
    j["value"] = value;
    j["bound"] = 1.0;
    j["violation"] = violation;
    j["settings"] = settings_json(*settings);
    emit(dump(j), a.out, "value=" + fmt(value) + " bound=1 violation=" + bool_text(violation), out, err);
    return kOk;
}

// ---------------------------------------------------------------- extract

struct ExtractArgs {
    std::string in;
    std::string random;
    std::uint64_t seed = 0;
    std::optional<int> ghz;
    std::string alpha = "auto";
    std::string pair;
    std::string out;
};

int cmd_extract(const ExtractArgs &a, std::ostream &out, std::ostream &err) {
    const int sources = (a.in.empty() ? 0 : 1) + (a.random.empty() ? 0 : 1) + (a.ghz ? 1 : 0);
    if (sources != 1) {
        throw std::invalid_argument("extract needs exactly one of --in, --random, --ghz");
    }
    json config = {{"command", "extract"}};
    std::optional<PureState> psi;
    if (!a.in.empty()) {
        json j = io::read_json_file(a.in);
        if (!io::is_pure_state_json(j)) {
            throw std::invalid_argument(a.in + " is not a pure-state file");
        }
        psi.emplace(io::pure_state_from_json(j));
        config["input"] = a.in;
    } else if (!a.random.empty()) {
        PartyLayout layout(parse_int_list(a.random, "--random"));
        if (layout.total_dim() > kMaxDenseDim) {
            throw std::invalid_argument("--random dimension exceeds the dense cap");
        }
        psi.emplace(model::random_pure(layout, a.seed));
        config["random"] = layout.dims();
        config["seed"] = a.seed;
    } else {
        check_n(*a.ghz);
        Alpha alpha = resolve_alpha(a.alpha, *a.ghz);
        psi.emplace(model::ghz(*a.ghz, alpha.value));
        config["ghz"] = *a.ghz;
        config["alpha"] = alpha.value;
        config["alpha_mode"] = alpha.mode;
    }
    std::optional<std::pair<int, int>> requested;
    if (!a.pair.empty()) {
        std::vector<int> p = parse_int_list(a.pair, "--pair");
        if (p.size() != 2) {
            throw std::invalid_argument("--pair takes two party indices");
        }
        requested = std::make_pair(p[0], p[1]);
        config["pair"] = p;
    }
    config["dims"] = psi->layout().dims();

    locc::ExtractionResult r = locc::extract(*psi, requested);
    json steps = json::array();
    for (const locc::ExtractionStep &s : r.steps) {
        json step = {{"party", s.filter.party},
                     {"kind", locc::to_string(s.filter.kind)},
                     {"matrix", matrix_json(s.filter.matrix)},
                     {"weight", s.weight},
                     {"active_parties", s.active_parties}};
        if (s.filter.kind == locc::FilterKind::measure_pm) {
            step["outcome"] = s.outcome;
            step["relative_phase"] = s.relative_phase;
        }
        steps.push_back(std::move(step));
    }
    const double fidelity = locc::replay_fidelity(*psi, r);
    json j = {{"config", config},
              {"steps", steps},
              {"final_state", io::to_json(r.final_state)},
              {"summary",
               {{"pair", {r.pair.first, r.pair.second}},
                {"probability", r.probability},
                {"schmidt_coeffs", {r.schmidt_coeffs[0], r.schmidt_coeffs[1]}},
                {"case_b_steps", r.case_b_steps},
                {"replay_fidelity", fidelity}}}};
    emit(dump(j), a.out,
         "pair=(" + std::to_string(r.pair.first) + "," + std::to_string(r.pair.second) +
             ") probability=" + fmt(r.probability) + " schmidt=" + fmt(r.schmidt_coeffs[0]) + "," +
             fmt(r.schmidt_coeffs[1]),
         out, err);
    return kOk;
}

// ---------------------------------------------------------------- sweep

struct SweepArgs {
    int from = 2;
    int to = 12;
    std::string tol;
    std::string format = "csv";
    std::string out;
};

int cmd_sweep(const SweepArgs &a, std::ostream &out, std::ostream &err) {
    if (a.from < 2 || a.to > 12 || a.from > a.to) {
        throw std::invalid_argument("sweep needs 2 <= --from <= --to <= 12");
    }
    Tolerance tol = resolve_tolerance(a.tol);
    json config = {{"command", "sweep"},     {"from", a.from},   {"to", a.to},         {"alpha_mode", "auto"},
                   {"settings", "xy"},       {"tol", tol.value}, {"tol_source", tol.source},
                   {"violation_margin", kViolationMargin}, {"format", a.format}};
    json rows = json::array();
    std::string csv = "# " + config.dump() +
                      "\nn,alpha,value,expected,violation,ppt_single,npt_pairs,bound_entangled_claim\n";
    std::optional<int> first_violation;
    for (int n = a.from; n <= a.to; ++n) {
        const double alpha = model::default_alpha(n);
        const double value = bell::bell_value(model::rho_n({n, alpha}), bell::BellSettings::xy(n));
        const double expected = std::pow(2.0, (n - 1) / 2.0) / (n + 1);
        const bool violation = std::abs(value) > 1.0 + kViolationMargin;
        if (violation && !first_violation) {
            first_violation = n;
        }
        ppt::Classification cls = ppt::classify_rho_n(n, alpha, tol.value);
        rows.push_back({{"n", n},
                        {"alpha", alpha},
                        {"value", value},
                        {"expected", expected},
                        {"violation", violation},
                        {"ppt_single", cls.ppt_single},
                        {"npt_pairs", optional_bool(cls.npt_pairs)},
                        {"bound_entangled_claim", cls.bound_entangled_claim}});
        csv += std::to_string(n) + "," + fmt(alpha) + "," + fmt(value) + "," + fmt(expected) + "," +
               bool_text(violation) + "," + bool_text(cls.ppt_single) + "," + optional_text(cls.npt_pairs) + "," +
               bool_text(cls.bound_entangled_claim) + "\n";
    }
    const std::string summary = "rows=" + std::to_string(a.to - a.from + 1) + " first_violation=" +
                                (first_violation ? std::to_string(*first_violation) : std::string("none"));
    if (a.format == "csv") {
        emit(csv, a.out, summary, out, err);
    } else {
        emit(dump(json{{"config", config}, {"rows", rows}}), a.out, summary, out, err);
    }
    return kOk;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Bound-entangled multi-qubit states: construction, PPT scans, Mermin-Klyshko values, pair extraction",
                 "boundbell"};
    app.require_subcommand(1);

    StateArgs state_args;
    CLI::App *state = app.add_subcommand("state", "Write rho_N and its GHZ component as JSON");
    state->add_option("--n", state_args.n, "Number of qubits (2..12)")->required();
    state->add_option("--alpha", state_args.alpha, "GHZ phase in radians, or auto = pi (N-1) / 4");
    state->add_option("--out", state_args.out, "Output file (default stdout)");

    ScanArgs scan_args;
    CLI::App *scan = app.add_subcommand("scan", "Partial-transpose scan over all cuts up to size N/2");
    auto *scan_n = scan->add_option("--n", scan_args.n, "Build rho_N with this many qubits");
    scan->add_option("--alpha", scan_args.alpha, "GHZ phase in radians, or auto");
    auto *scan_in = scan->add_option("--in", scan_args.in, "Operator or pure-state JSON file");
    scan_n->excludes(scan_in);
    scan->add_option("--tol", scan_args.tol, std::string("PSD tolerance (default 1e-9, or $") + kToleranceEnv + ")");
    scan->add_option("--format", scan_args.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    scan->add_option("--out", scan_args.out, "Output file (default stdout)");

    BellArgs bell_args;
    CLI::App *bell_cmd = app.add_subcommand("bell", "Mermin-Klyshko value for x/y, file or optimized settings");
    auto *bell_n = bell_cmd->add_option("--n", bell_args.n, "Build rho_N with this many qubits");
    bell_cmd->add_option("--alpha", bell_args.alpha, "GHZ phase in radians, or auto");
    auto *bell_in = bell_cmd->add_option("--in", bell_args.in, "Operator or pure-state JSON file");
    bell_n->excludes(bell_in);
    bell_cmd->add_option("--settings", bell_args.settings, "xy, optimize, or a settings JSON file");
    bell_cmd->add_option("--restarts", bell_args.restarts, "Optimizer restarts");
    bell_cmd->add_option("--tol", bell_args.tol, "Optimizer stopping tolerance");
    bell_cmd->add_option("--seed", bell_args.seed, "Seed of the first optimizer restart");
    bell_cmd->add_option("--settings-out", bell_args.settings_out, "Write the optimized settings here");
    bell_cmd->add_option("--out", bell_args.out, "Output file (default stdout)");

    ExtractArgs extract_args;
    CLI::App *extract = app.add_subcommand("extract", "Extract a maximally entangled pair from a pure state");
    extract->add_option("--in", extract_args.in, "Pure-state JSON file");
    extract->add_option("--random", extract_args.random, "Random state with these local dims, e.g. 2,3,2");
    extract->add_option("--seed", extract_args.seed, "Seed for --random");
    extract->add_option("--ghz", extract_args.ghz, "GHZ state on this many qubits");
    extract->add_option("--alpha", extract_args.alpha, "GHZ phase for --ghz, or auto");
    extract->add_option("--pair", extract_args.pair, "Requested pair, e.g. 1,3");
    extract->add_option("--out", extract_args.out, "Output file (default stdout)");

    SweepArgs sweep_args;
    CLI::App *sweep = app.add_subcommand("sweep", "Bell value and PPT verdicts of rho_N over a range of N");
    sweep->add_option("--from", sweep_args.from, "First N");
    sweep->add_option("--to", sweep_args.to, "Last N");
    sweep->add_option("--tol", sweep_args.tol, "PSD tolerance");
    sweep->add_option("--format", sweep_args.format, "csv or json")->check(CLI::IsMember({"json", "csv"}));
    sweep->add_option("--out", sweep_args.out, "Output file (default stdout)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (state->parsed()) {
            return cmd_state(state_args, out, err);
        }
        if (scan->parsed()) {
            if (!scan_args.n && scan_args.in.empty()) {
                throw std::invalid_argument("scan needs --n or --in");
            }
            return cmd_scan(scan_args, out, err);
        }
        if (bell_cmd->parsed()) {
            if (!bell_args.n && bell_args.in.empty()) {
                throw std::invalid_argument("bell needs --n or --in");
            }
            return cmd_bell(bell_args, out, err);
        }
        if (extract->parsed()) {
            return cmd_extract(extract_args, out, err);
        }
        return cmd_sweep(sweep_args, out, err);
    } catch (const NotEntangledError &e) {
        err << "not entangled: " << e.what() << '\n';
        return kNotEntangled;
    } catch (const PairUnavailableError &e) {
        err << "pair unavailable: " << e.what() << '\n';
        return kPairUnavailable;
    } catch (const NumericDegeneracyError &e) {
        err << "numeric degeneracy: " << e.what() << '\n';
        return kNumericDegeneracy;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception &e) {
        err << "internal error: " << e.what() << '\n';
        return kInternal;
    }
}

}  // namespace boundbell::cli
