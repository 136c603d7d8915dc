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

#include <immintrin.h>

#include "grovernoise/kernels.hpp"

namespace gnoise::kernels::avx2 {

// A __m256d holds two complex<double> values: [re0, im0, re1, im1].

void butterfly(std::span<std::complex<double>> amplitudes, unsigned qubit, double c, double s) {
    double *data = reinterpret_cast<double *>(amplitudes.data());
    const std::size_t size = amplitudes.size();
    const __m256d vs = _mm256_set1_pd(s);

    if (qubit == 0) {
        // Pairs are adjacent: v = [a, b] -> [c a + s b, s a - c b].
        const __m256d vc_signed = _mm256_setr_pd(c, c, -c, -c);
        for (std::size_t i = 0; i < size; i += 2) {
            const __m256d v = _mm256_loadu_pd(data + 2 * i);
            const __m256d swapped = _mm256_permute2f128_pd(v, v, 0x01);
            _mm256_storeu_pd(data + 2 * i, _mm256_fmadd_pd(vc_signed, v, _mm256_mul_pd(vs, swapped)));
        }
        return;
    }

    const __m256d vc = _mm256_set1_pd(c);
    const std::size_t half = std::size_t{1} << qubit;
    const std::size_t stride = half << 1;
    for (std::size_t base = 0; base < size; base += stride) {
        double *lo = data + 2 * base;
        double *hi = data + 2 * (base + half);
        for (std::size_t k = 0; k < 2 * half; k += 4) {
            const __m256d a = _mm256_loadu_pd(lo + k);
            const __m256d b = _mm256_loadu_pd(hi + k);
            _mm256_storeu_pd(lo + k, _mm256_fmadd_pd(vc, a, _mm256_mul_pd(vs, b)));
            _mm256_storeu_pd(hi + k, _mm256_fmsub_pd(vs, a, _mm256_mul_pd(vc, b)));
        }
    }
}

double norm_squared(std::span<const std::complex<double>> amplitudes) {
    const double *data = reinterpret_cast<const double *>(amplitudes.data());
    const std::size_t count = 2 * amplitudes.size();
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t k = 0;
    for (; k + 8 <= count; k += 8) {
        const __m256d x0 = _mm256_loadu_pd(data + k);
        const __m256d x1 = _mm256_loadu_pd(data + k + 4);
        acc0 = _mm256_fmadd_pd(x0, x0, acc0);
        acc1 = _mm256_fmadd_pd(x1, x1, acc1);
    }
    for (; k + 4 <= count; k += 4) {
        const __m256d x = _mm256_loadu_pd(data + k);
        acc0 = _mm256_fmadd_pd(x, x, acc0);
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, _mm256_add_pd(acc0, acc1));
    double total = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
    for (; k < count; ++k) {
        total += data[k] * data[k];
    }
    return total;
}

}  // namespace gnoise::kernels::avx2
