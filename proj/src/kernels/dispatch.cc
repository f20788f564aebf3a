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

#include <cstdlib>
#include <stdexcept>
#include <string>

#include "boundbell/kernels/kernels.h"

namespace boundbell::kernels {

#ifndef BOUNDBELL_HAVE_AVX2
const KernelTable *avx2_table() {
    return nullptr;
}
#endif

#ifndef BOUNDBELL_HAVE_NEON
const KernelTable *neon_table() {
    return nullptr;
}
#endif

namespace {

const KernelTable &select_table() {
    if (const char *forced = std::getenv("BOUNDBELL_KERNELS")) {
        std::string name(forced);
        if (name == "scalar") {
            return scalar_table();
        }
        const KernelTable *t = name == "avx2" ? avx2_table() : name == "neon" ? neon_table() : nullptr;
        if (t == nullptr) {
            throw std::runtime_error("BOUNDBELL_KERNELS=" + name + " is not available on this machine");
        }
        return *t;
    }
    if (const KernelTable *t = avx2_table()) {
        return *t;
    }
    if (const KernelTable *t = neon_table()) {
        return *t;
    }
    return scalar_table();
}

}  // namespace

const KernelTable &active() {
    static const KernelTable &table = select_table();
    return table;
}

}  // namespace boundbell::kernels
