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

#include "grovernoise/kernels.hpp"

namespace gnoise::kernels::scalar {

void butterfly(std::span<std::complex<double>> amplitudes, unsigned qubit, double c, double s) {
    const std::size_t size = amplitudes.size();
    const std::size_t half = std::size_t{1} << qubit;
    const std::size_t stride = half << 1;
    for (std::size_t base = 0; base < size; base += stride) {
        for (std::size_t i = base; i < base + half; ++i) {
            const std::complex<double> a = amplitudes[i];
            const std::complex<double> b = amplitudes[i + half];
            amplitudes[i] = c * a + s * b;
            amplitudes[i + half] = s * a - c * b;
        }
    }
}

double norm_squared(std::span<const std::complex<double>> amplitudes) {
    double total = 0.0;
    for (const std::complex<double> &a : amplitudes) {
        total += std::norm(a);
    }
    return total;
}

}  // namespace gnoise::kernels::scalar
