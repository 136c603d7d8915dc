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
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "grovernoise/matrix2.hpp"
#include "grovernoise/reduced_model.hpp"
#include "grovernoise/rng.hpp"

namespace gnoise {

/// Constant (systematic) phase mismatch.
struct Em1 {
    double delta0 = 0.0;
};
/// Zero-mean Gaussian mismatch, redrawn every iteration.
struct Em2 {
    double s = 0.0;
};
/// Biased Gaussian mismatch, redrawn every iteration.
struct Em3 {
    double delta0 = 0.0;
    double s = 0.0;
};
/// Same angle offset on every qubit's Hadamard gate (full-space model).
struct HadamardSystematic {
    double epsilon = 0.0;
};
/// Per-iteration fractional amplitude loss out of the search plane.
struct HadamardLeakage {
    double delta1 = 0.0;
};

using ErrorModel = std::variant<Em1, Em2, Em3, HadamardSystematic, HadamardLeakage>;

/// Raised when a closed form is evaluated outside the range where it applies.
class OutOfRegimeError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// Throws std::domain_error on negative s, delta1 outside [0, 1), or non-finite fields.
void validate(const ErrorModel &model);

/// "EM1", "EM2", "EM3", "hadamard_systematic" or "hadamard_leakage".
std::string model_name(const ErrorModel &model);

/// (delta0 | epsilon | delta1, s) as reported in sweep output; absent fields are 0.
std::pair<double, double> model_params(const ErrorModel &model);

bool is_phase_model(const ErrorModel &model);

/// Draws the mismatch delta for one iteration. EM1 is deterministic and does
/// not touch the stream. Hadamard variants throw std::domain_error.
double sample_phase_mismatch(const ErrorModel &model, RngStream &rng);

/// theta = pi + delta/2, phi = pi - delta/2.
PhaseAngles split_mismatch_into_angles(double delta);

/// [[cos b, (1 - d1) sin b], [-sin b, (1 - d1) cos b]]. Not unitary for d1 > 0.
ComplexMatrix2 build_leakage_operator(double beta, double delta1);

/// First-order marked amplitude |(1 - (j - 1) d1 / 2) sin(j b)|.
double leakage_amplitude_first_order(std::size_t j, double beta, double delta1);

/// 1 - pi sqrt(N) d1 / 4. Throws OutOfRegimeError when that is not positive.
double leakage_success_rate(double dimension, double delta1);

/// (1 - pi sqrt(N) d1 / 8)^2, the unexpanded form of the same estimate.
double leakage_success_rate_squared(double dimension, double delta1);

/// 4 / (pi^2 d1^2); kUnbounded for d1 == 0.
double max_database_size_hadamard(double delta1);

struct LeakageTrajectory {
    Trajectory trajectory;
    /// |psi_j|^2 for j = 0..j_max.
    std::vector<double> norm_squared;
};

/// Iterates the leakage operator with per-iteration rotation 2 arcsin(1/sqrt(N))
/// from the prepared state (cos b, -sin b), b = arcsin(1/sqrt(N)), recording
/// |component 2|^2. With d1 = 0 this is exactly sin^2((2j + 1) b).
LeakageTrajectory simulate_leakage_trajectory(double dimension, double delta1, std::size_t j_max);

}  // namespace gnoise
