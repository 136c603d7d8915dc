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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace gnoise;

namespace {

std::vector<std::complex<double>> random_amplitudes(std::size_t size, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::normal_distribution<double> normal;
    std::vector<std::complex<double>> v(size);
    for (auto &a : v) {
        a = {normal(gen), normal(gen)};
    }
    return v;
}

}  // namespace

TEST(Kernels, scalar_always_available) {
    const auto isas = kernels::available_isas();
    ASSERT_FALSE(isas.empty());
    EXPECT_EQ(isas.front(), kernels::Isa::kScalar);
    EXPECT_EQ(kernels::table_for(kernels::Isa::kScalar).isa, kernels::Isa::kScalar);
    EXPECT_EQ(kernels::isa_name(kernels::Isa::kAvx2), "avx2");
}

TEST(Kernels, scalar_butterfly_is_hadamard) {
    std::vector<std::complex<double>> v{{1.0, 0.0}, {0.0, 0.0}, {0.0, 2.0}, {1.0, 0.0}};
    const double h = 1.0 / std::sqrt(2.0);
    kernels::scalar::butterfly(v, 1, h, h);
    EXPECT_NEAR(v[0].real(), h, 1e-15);
    EXPECT_NEAR(v[0].imag(), 2.0 * h, 1e-15);
    EXPECT_NEAR(v[2].real(), h, 1e-15);
    EXPECT_NEAR(v[2].imag(), -2.0 * h, 1e-15);
    EXPECT_NEAR(v[1].real(), h, 1e-15);
    EXPECT_NEAR(v[3].real(), -h, 1e-15);
}

// Every available variant must agree with the scalar reference on all qubit
// positions, including qubit 0 where butterfly pairs are adjacent.
TEST(Kernels, variants_match_scalar_reference) {
    for (const kernels::Isa isa : kernels::available_isas()) {
        const kernels::KernelTable &table = kernels::table_for(isa);
        for (unsigned n = 1; n <= 12; ++n) {
            const std::size_t size = std::size_t{1} << n;
            for (unsigned q = 0; q < n; ++q) {
                auto ref = random_amplitudes(size, 100 * n + q);
                auto got = ref;
                const double c = std::cos(0.7 + 0.01 * q);
                const double s = std::sin(0.7 + 0.01 * q);
                kernels::scalar::butterfly(ref, q, c, s);
                table.butterfly(got, q, c, s);
                for (std::size_t i = 0; i < size; ++i) {
                    ASSERT_LE(std::abs(ref[i] - got[i]), 1e-14)
                        << kernels::isa_name(isa) << " n=" << n << " q=" << q << " i=" << i;
                }
            }
            const auto v = random_amplitudes(size, n);
            const double ref = kernels::scalar::norm_squared(v);
            EXPECT_NEAR(table.norm_squared(v), ref, 1e-13 * ref) << kernels::isa_name(isa) << " n=" << n;
        }
        // Odd lengths exercise the scalar tail of the reduction.
        for (std::size_t size : {1u, 3u, 5u, 7u}) {
            const auto v = random_amplitudes(size, size);
            EXPECT_NEAR(table.norm_squared(v), kernels::scalar::norm_squared(v), 1e-13);
        }
    }
}

TEST(Kernels, force_isa_switches_active_table) {
    const kernels::Isa original = kernels::active().isa;
    for (const kernels::Isa isa : kernels::available_isas()) {
        kernels::force_isa(isa);
        EXPECT_EQ(kernels::active().isa, isa);
    }
    kernels::force_isa(original);
}
