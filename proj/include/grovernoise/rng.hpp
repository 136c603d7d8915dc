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

#include <cstdint>
#include <random>

namespace gnoise {

/// SplitMix64 output function applied to x (Steele, Lea & Flood 2014).
std::uint64_t splitmix64(std::uint64_t x);

/// Stream identifier for sample `sample` of the sweep point with `n` qubits:
/// splitmix64(splitmix64(n) ^ sample). Adding points or samples never changes
/// the index of an existing (n, sample) pair.
std::uint64_t stream_index_for(std::uint64_t n, std::uint64_t sample);

/// Reproducible random stream keyed by (seed, stream_index).
///
/// Bits come from std::mt19937_64, whose output sequence is fixed by the C++
/// standard, seeded with splitmix64(seed ^ splitmix64(stream_index)). Uniforms
/// take the top 53 bits of one word; normals use the Box-Muller transform on
/// two uniforms and return both variates in turn.
class RngStream {
  public:
    RngStream(std::uint64_t seed, std::uint64_t stream_index);

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream_index() const { return stream_index_; }
    /// Number of 64-bit words consumed so far.
    std::uint64_t counter() const { return counter_; }

    std::uint64_t next_u64();
    /// Uniform on [0, 1).
    double uniform();
    /// Standard normal.
    double gaussian();
    double gaussian(double mean, double stddev) { return mean + stddev * gaussian(); }

  private:
    std::uint64_t seed_;
    std::uint64_t stream_index_;
    std::uint64_t counter_ = 0;
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace gnoise
