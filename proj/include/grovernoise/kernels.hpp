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

#pragma once

// Inner loops of the full state-vector simulator. Each kernel has a portable
// scalar reference and, on x86-64, an AVX2+FMA variant picked at runtime.

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace gnoise::kernels {

enum class Isa { kScalar, kAvx2 };

std::string_view isa_name(Isa isa);

/// Applies the real one-qubit gate [[c, s], [s, -c]] to `qubit` of a state of
/// `amplitudes.size()` entries (a power of two, at least 2^(qubit + 1)).
using ButterflyFn = void (*)(std::span<std::complex<double>> amplitudes, unsigned qubit, double c, double s);
/// Sum of |a|^2.
using NormSquaredFn = double (*)(std::span<const std::complex<double>> amplitudes);

struct KernelTable {
    Isa isa;
    ButterflyFn butterfly;
    NormSquaredFn norm_squared;
};

/// Variants compiled into this binary and supported by the running CPU.
std::vector<Isa> available_isas();

/// Table for a specific variant; throws std::invalid_argument if unavailable.
const KernelTable &table_for(Isa isa);

/// Best available variant, detected once.
const KernelTable &active();

/// Overrides the runtime choice (tests and benchmarking).
void force_isa(Isa isa);

namespace scalar {
void butterfly(std::span<std::complex<double>> amplitudes, unsigned qubit, double c, double s);
double norm_squared(std::span<const std::complex<double>> amplitudes);
}  // namespace scalar

#if defined(GNOISE_HAVE_AVX2_KERNELS)
namespace avx2 {
void butterfly(std::span<std::complex<double>> amplitudes, unsigned qubit, double c, double s);
double norm_squared(std::span<const std::complex<double>> amplitudes);
}  // namespace avx2
#endif

}  // namespace gnoise::kernels
