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

#include "grovernoise/rng.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace gnoise;

TEST(Splitmix64, known_values) {
    // Reference outputs of the SplitMix64 generator seeded with 0: the first
    // state is 0 + gamma.
    EXPECT_EQ(splitmix64(0), 0xe220a8397b1dcdafULL);
    EXPECT_EQ(splitmix64(0x9e3779b97f4a7c15ULL), 0x6e789e6aa1b965f4ULL);
}

TEST(RngStream, identical_keys_give_identical_sequences) {
    RngStream a(42, 7);
    RngStream b(42, 7);
    for (int i = 0; i < 1000; ++i) {
        ASSERT_EQ(a.next_u64(), b.next_u64());
        ASSERT_EQ(a.gaussian(), b.gaussian());
    }
    EXPECT_EQ(a.counter(), b.counter());
}

TEST(RngStream, distinct_keys_diverge) {
    RngStream a(42, 7);
    RngStream b(42, 8);
    RngStream c(43, 7);
    int same_b = 0;
    int same_c = 0;
    for (int i = 0; i < 100; ++i) {
        const auto x = a.next_u64();
        same_b += x == b.next_u64();
        same_c += x == c.next_u64();
    }
    EXPECT_EQ(same_b, 0);
    EXPECT_EQ(same_c, 0);
}

TEST(RngStream, uniform_range_and_counter) {
    RngStream r(1, 2);
    for (int i = 0; i < 10000; ++i) {
        const double u = r.uniform();
        ASSERT_GE(u, 0.0);
        ASSERT_LT(u, 1.0);
    }
    EXPECT_EQ(r.counter(), 10000u);
    EXPECT_EQ(r.seed(), 1u);
    EXPECT_EQ(r.stream_index(), 2u);
}

TEST(RngStream, gaussian_moments) {
    RngStream r(2024, 0);
    const int count = 100000;
    double sum = 0.0;
    double sum_sq = 0.0;
    for (int i = 0; i < count; ++i) {
        const double z = r.gaussian(0.5, 2.0);
        sum += z;
        sum_sq += z * z;
    }
    const double mean = sum / count;
    const double var = sum_sq / count - mean * mean;
    // Standard errors: sigma / sqrt(n) for the mean, sigma^2 sqrt(2 / n) for the variance.
    EXPECT_NEAR(mean, 0.5, 4.0 * 2.0 / std::sqrt(count));
    EXPECT_NEAR(var, 4.0, 4.0 * 4.0 * std::sqrt(2.0 / count));
}

TEST(StreamIndexFor, depends_on_both_coordinates) {
    EXPECT_EQ(stream_index_for(10, 3), stream_index_for(10, 3));
    EXPECT_NE(stream_index_for(10, 3), stream_index_for(10, 4));
    EXPECT_NE(stream_index_for(10, 3), stream_index_for(11, 3));
    EXPECT_NE(stream_index_for(3, 10), stream_index_for(10, 3));
}
