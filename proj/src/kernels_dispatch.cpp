// Copyright 2026 The grover-noise Authors
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

#include <atomic>
#include <stdexcept>
#include <string>

#include "grovernoise/kernels.hpp"

namespace gnoise::kernels {
namespace {

constexpr KernelTable kScalarTable{Isa::kScalar, &scalar::butterfly, &scalar::norm_squared};
#if defined(GNOISE_HAVE_AVX2_KERNELS)
constexpr KernelTable kAvx2Table{Isa::kAvx2, &avx2::butterfly, &avx2::norm_squared};
#endif

bool cpu_supports(Isa isa) {
    switch (isa) {
    case Isa::kScalar:
        return true;
    case Isa::kAvx2:
#if defined(GNOISE_HAVE_AVX2_KERNELS) && (defined(__GNUC__) || defined(__clang__))
        return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
        return false;
#endif
    }
    return false;
}

Isa detect() { return cpu_supports(Isa::kAvx2) ? Isa::kAvx2 : Isa::kScalar; }

std::atomic<const KernelTable *> g_active{nullptr};

}  // namespace

std::string_view isa_name(Isa isa) {
    switch (isa) {
    case Isa::kScalar:
        return "scalar";
    case Isa::kAvx2:
        return "avx2";
    }
    return "unknown";
}

std::vector<Isa> available_isas() {
    std::vector<Isa> out{Isa::kScalar};
    if (cpu_supports(Isa::kAvx2)) {
        out.push_back(Isa::kAvx2);
    }
    return out;
}

const KernelTable &table_for(Isa isa) {
    if (!cpu_supports(isa)) {
        throw std::invalid_argument("kernel variant '" + std::string(isa_name(isa)) + "' is not available");
    }
#if defined(GNOISE_HAVE_AVX2_KERNELS)
    if (isa == Isa::kAvx2) {
        return kAvx2Table;
    }
#endif
    return kScalarTable;
}

const KernelTable &active() {
    const KernelTable *table = g_active.load(std::memory_order_acquire);
    if (table == nullptr) {
        table = &table_for(detect());
        g_active.store(table, std::memory_order_release);
    }
    return *table;
}

void force_isa(Isa isa) { g_active.store(&table_for(isa), std::memory_order_release); }

}  // namespace gnoise::kernels
