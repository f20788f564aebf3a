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

#include "boundbell/tensor/layout.h"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace boundbell {

PartyLayout::PartyLayout(std::vector<int> dims) : dims_(std::move(dims)) {
    if (dims_.empty()) {
        throw std::invalid_argument("PartyLayout needs at least one party");
    }
    strides_.assign(dims_.size(), 1);
    for (std::size_t i = dims_.size(); i-- > 0;) {
        if (dims_[i] < 2) {
            throw std::invalid_argument("local dimension must be >= 2, got " + std::to_string(dims_[i]));
        }
        strides_[i] = total_;
        if (total_ > (std::size_t{1} << 40) / static_cast<std::size_t>(dims_[i])) {
            throw std::invalid_argument("PartyLayout global dimension overflow");
        }
        total_ *= static_cast<std::size_t>(dims_[i]);
    }
}

PartyLayout PartyLayout::qubits(int n) {
    if (n < 1) {
        throw std::invalid_argument("need at least one qubit");
    }
    return PartyLayout(std::vector<int>(static_cast<std::size_t>(n), 2));
}

int PartyLayout::dim(int party) const {
    if (party < 1 || party > parties()) {
        throw std::invalid_argument("party index " + std::to_string(party) + " out of range");
    }
    return dims_[static_cast<std::size_t>(party - 1)];
}

std::size_t PartyLayout::stride(int party) const {
    if (party < 1 || party > parties()) {
        throw std::invalid_argument("party index " + std::to_string(party) + " out of range");
    }
    return strides_[static_cast<std::size_t>(party - 1)];
}

bool PartyLayout::all_qubits() const {
    return std::all_of(dims_.begin(), dims_.end(), [](int d) { return d == 2; });
}

std::vector<int> PartyLayout::decode(std::size_t index) const {
    std::vector<int> digits(dims_.size());
    for (std::size_t i = dims_.size(); i-- > 0;) {
        digits[i] = static_cast<int>(index % static_cast<std::size_t>(dims_[i]));
        index /= static_cast<std::size_t>(dims_[i]);
    }
    return digits;
}

std::size_t PartyLayout::encode(std::span<const int> digits) const {
    if (digits.size() != dims_.size()) {
        throw std::invalid_argument("digit count does not match party count");
    }
    std::size_t index = 0;
    for (std::size_t i = 0; i < dims_.size(); ++i) {
        if (digits[i] < 0 || digits[i] >= dims_[i]) {
            throw std::invalid_argument("digit out of range for party " + std::to_string(i + 1));
        }
        index += static_cast<std::size_t>(digits[i]) * strides_[i];
    }
    return index;
}

PartySet PartyLayout::normalize(PartySet parties) const {
    for (int p : parties) {
        if (p < 1 || p > this->parties()) {
            throw std::invalid_argument("party index " + std::to_string(p) + " out of range 1.." +
                                        std::to_string(this->parties()));
        }
    }
    std::sort(parties.begin(), parties.end());
    parties.erase(std::unique(parties.begin(), parties.end()), parties.end());
    return parties;
}

PartyLayout PartyLayout::restrict_to(const PartySet &parties) const {
    PartySet sorted = normalize(parties);
    std::vector<int> dims;
    dims.reserve(sorted.size());
    for (int p : sorted) {
        dims.push_back(dim(p));
    }
    return PartyLayout(std::move(dims));
}

PartySet PartyLayout::complement(const PartySet &parties) const {
    PartySet sorted = normalize(parties);
    PartySet out;
    for (int p = 1; p <= this->parties(); ++p) {
        if (!std::binary_search(sorted.begin(), sorted.end(), p)) {
            out.push_back(p);
        }
    }
    return out;
}

PartyLayout concat(const PartyLayout &a, const PartyLayout &b) {
    std::vector<int> dims = a.dims();
    dims.insert(dims.end(), b.dims().begin(), b.dims().end());
    return PartyLayout(std::move(dims));
}

}  // namespace boundbell
