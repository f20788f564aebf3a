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

#include "boundbell/tensor/io.h"

#include <fstream>
#include <stdexcept>

namespace boundbell::io {
namespace {

PartyLayout layout_from_json(const json &j) {
    if (!j.is_object() || !j.contains("dims") || !j["dims"].is_array()) {
        throw std::invalid_argument("missing \"dims\" array");
    }
    std::vector<int> dims;
    for (const json &d : j["dims"]) {
        if (!d.is_number_integer()) {
            throw std::invalid_argument("\"dims\" entries must be integers");
        }
        dims.push_back(d.get<int>());
    }
    return PartyLayout(std::move(dims));
}

double number(const json &j) {
    if (!j.is_number()) {
        throw std::invalid_argument("expected a number");
    }
    return j.get<double>();
}

std::size_t index(const json &j, std::size_t bound) {
    if (!j.is_number_integer() || j.get<long long>() < 0 || static_cast<std::size_t>(j.get<long long>()) >= bound) {
        throw std::invalid_argument("basis index out of range");
    }
    return static_cast<std::size_t>(j.get<long long>());
}

}  // namespace

json to_json(const DensityOperator &rho) {
    json entries = json::array();
    const Matrix &m = rho.matrix();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            cplx v = m(r, c);
            if (v != cplx{0.0, 0.0}) {
                entries.push_back(json::array({r, c, v.real(), v.imag()}));
            }
        }
    }
    return json{{"dims", rho.layout().dims()}, {"entries", std::move(entries)}};
}

json to_json(const PureState &psi) {
    json amps = json::array();
    const Vector &v = psi.amplitudes();
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (v(i) != cplx{0.0, 0.0}) {
            amps.push_back(json::array({i, v(i).real(), v(i).imag()}));
        }
    }
    return json{{"dims", psi.layout().dims()}, {"amps", std::move(amps)}};
}

json to_json(const SparseHermitian &rho) {
    json entries = json::array();
    for (const Triplet &t : rho.entries()) {
        if (t.value != cplx{0.0, 0.0}) {
            entries.push_back(json::array({t.row, t.col, t.value.real(), t.value.imag()}));
        }
    }
    return json{{"dims", rho.layout().dims()}, {"entries", std::move(entries)}};
}

DensityOperator operator_from_json(const json &j) {
    PartyLayout layout = layout_from_json(j);
    if (layout.total_dim() > kMaxDenseDim) {
        throw std::invalid_argument("operator dimension exceeds the dense cap");
    }
    if (!j.contains("entries") || !j["entries"].is_array()) {
        throw std::invalid_argument("missing \"entries\" array");
    }
    auto d = static_cast<Eigen::Index>(layout.total_dim());
    Matrix m = Matrix::Zero(d, d);
    for (const json &e : j["entries"]) {
        if (!e.is_array() || e.size() != 4) {
            throw std::invalid_argument("operator entries are [row, col, re, im]");
        }
        auto r = static_cast<Eigen::Index>(index(e[0], layout.total_dim()));
        auto c = static_cast<Eigen::Index>(index(e[1], layout.total_dim()));
        m(r, c) = cplx{number(e[2]), number(e[3])};
    }
    return DensityOperator(std::move(layout), std::move(m));
}

PureState pure_state_from_json(const json &j) {
    PartyLayout layout = layout_from_json(j);
    if (layout.total_dim() > kMaxDenseDim) {
        throw std::invalid_argument("state dimension exceeds the dense cap");
    }
    if (!j.contains("amps") || !j["amps"].is_array()) {
        throw std::invalid_argument("missing \"amps\" array");
    }
    Vector v = Vector::Zero(static_cast<Eigen::Index>(layout.total_dim()));
    for (const json &e : j["amps"]) {
        if (!e.is_array() || e.size() != 3) {
            throw std::invalid_argument("amplitudes are [idx, re, im]");
        }
        v(static_cast<Eigen::Index>(index(e[0], layout.total_dim()))) = cplx{number(e[1]), number(e[2])};
    }
    return PureState(std::move(layout), std::move(v));
}

bool is_pure_state_json(const json &j) {
    return j.is_object() && j.contains("amps");
}

json read_json_file(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open " + path.string());
    }
    try {
        return json::parse(in);
    } catch (const json::parse_error &e) {
        throw std::invalid_argument("malformed JSON in " + path.string() + ": " + e.what());
    }
}

void write_json_file(const std::filesystem::path &path, const json &j) {
    std::ofstream out(path);
    if (!out) {
        throw std::invalid_argument("cannot write " + path.string());
    }
    out << j.dump(2) << '\n';
    if (!out) {
        throw std::invalid_argument("write failed for " + path.string());
    }
}

}  // namespace boundbell::io
