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

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "grovernoise/error_models.hpp"

namespace gnoise {

enum class Engine { kReduced, kFull };

/// Invalid sweep configuration.
class ConfigError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

struct SweepConfig {
    ErrorModel model = Em1{};
    /// Strictly increasing qubit counts.
    std::vector<int> n_values;
    std::size_t samples_per_n = 1;
    std::uint64_t seed = 0;
    /// Iterations scanned per trajectory: ceil(j_cap_policy * ceil(pi/4 sqrt(N))),
    /// tightened for EM1 to the period-based default_iteration_cap().
    double j_cap_policy = 3.0;
    Engine engine = Engine::kReduced;
    /// Marked basis state for the full engine and the systematic Hadamard
    /// model; defaults to 2^n - 1.
    std::optional<std::uint64_t> marked;
    /// Worker threads; 0 picks std::thread::hardware_concurrency(). Results do
    /// not depend on this value.
    unsigned threads = 0;
};

/// Throws ConfigError describing the first problem found.
void validate(const SweepConfig &config);

struct SweepPoint {
    int n = 0;
    std::size_t samples = 0;
    double mean_pmax = 0.0;
    /// Sample standard deviation (n - 1 denominator); 0 for a single sample.
    double std_pmax = 0.0;
    double min_pmax = 0.0;
    double max_pmax = 0.0;
    double mean_j_opt = 0.0;
};

struct SweepResult {
    SweepConfig config;
    std::vector<SweepPoint> points;
};

struct SampleOutcome {
    double p_max = 0.0;
    std::size_t j_opt = 0;
};

std::size_t iteration_cap(const SweepConfig &config, int n);

/// One trajectory for sample `sample` at n qubits; reads its random stream
/// from (config.seed, stream_index_for(n, sample)).
SampleOutcome simulate_sample(const SweepConfig &config, int n, std::size_t sample);

SweepResult run_sweep(const SweepConfig &config);

/// Smallest n whose mean_pmax is below `threshold`; nullopt if none. Throws
/// std::domain_error unless the n values are consecutive.
std::optional<int> transition_point(const SweepResult &result, double threshold = 0.5);

struct AnalyticRow {
    int n = 0;
    double simulated = 0.0;
    /// beta'^2 / (beta'^2 + delta^2)
    double small_angle = 0.0;
    /// 4 / (N delta^2) clamped to [0, 1].
    double asymptotic = 0.0;
    bool asymptotic_clamped = false;
    double small_angle_abs_diff = 0.0;
    double asymptotic_abs_diff = 0.0;
};

/// Simulated curve next to the closed forms. Only defined for EM1.
std::vector<AnalyticRow> compare_analytic(const SweepResult &result);

inline constexpr const char *kCsvHeader =
    "n,N,model,param1,param2,samples,mean_pmax,std_pmax,min_pmax,max_pmax,mean_j_opt,seed";

/// "%.12g"
std::string format_real(double x);

void emit_csv(const SweepResult &result, std::ostream &out);
/// Throws std::runtime_error naming the path on I/O failure.
void emit_csv(const SweepResult &result, const std::filesystem::path &destination);

}  // namespace gnoise
