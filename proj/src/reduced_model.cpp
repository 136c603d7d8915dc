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

#include "grovernoise/reduced_model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace gnoise {
namespace {

// Below this rotation rate sin(j l)/l is replaced by its limit j.
constexpr double kLambdaSeriesThreshold = 1e-12;

void require_finite(double x, const char *what) {
    if (!std::isfinite(x)) {
        throw std::domain_error(std::string(what) + " must be finite");
    }
}

// Printed single-iteration matrix for overlap u and complement c = sqrt(1 - u^2).
ComplexMatrix2 grover_matrix(double theta, double phi, double u, double c) {
    const Complex e_theta = std::polar(1.0, theta);
    const Complex e_phi = std::polar(1.0, phi);
    const Complex a = 1.0 - e_theta;
    const double u2 = u * u;
    const double uc = u * c;
    return {-e_theta - u2 * a, a * uc, e_phi * a * uc, -e_phi * (1.0 - a * u2)};
}

}  // namespace

PhaseAngles PhaseAngles::make(double theta, double phi) {
    require_finite(theta, "theta");
    require_finite(phi, "phi");
    return {theta, phi};
}

ReducedParams::ReducedParams(int n, double u)
    : n_(n),
      dimension_(std::ldexp(1.0, n)),
      overlap_(u),
      beta_(std::sqrt(dimension_ - 1.0) / dimension_),
      beta_arcsin_(std::asin(u)) {}

ReducedParams ReducedParams::for_qubits(int n) {
    if (n < 1 || n > kMaxQubits) {
        throw std::domain_error("qubit count must be in [1, " + std::to_string(kMaxQubits) + "], got " +
                                std::to_string(n));
    }
    return ReducedParams(n, 1.0 / std::sqrt(std::ldexp(1.0, n)));
}

ReducedParams ReducedParams::with_overlap(int n, double u) {
    if (n < 1 || n > kMaxQubits) {
        throw std::domain_error("qubit count must be in [1, " + std::to_string(kMaxQubits) + "], got " +
                                std::to_string(n));
    }
    if (!std::isfinite(u) || u <= 0.0 || u > 1.0) {
        throw std::domain_error("overlap must be in (0, 1]");
    }
    return ReducedParams(n, u);
}

double ReducedParams::lambda(double delta) const { return std::hypot(delta, beta_prime()); }

Trajectory::Trajectory(std::vector<double> probabilities) : probabilities_(std::move(probabilities)) {
    for (double &p : probabilities_) {
        p = clamp_probability(p);
    }
    peak_ = find_peak(probabilities_);
}

double clamp_probability(double p) {
    if (!(p <= 1.0 + kProbabilityRoundingSlack) || p < -kProbabilityRoundingSlack) {
        throw std::logic_error("probability " + std::to_string(p) + " outside [0, 1] beyond rounding slack");
    }
    return std::clamp(p, 0.0, 1.0);
}

Peak find_peak(std::span<const double> probabilities) {
    if (probabilities.empty()) {
        throw std::domain_error("cannot find the peak of an empty trajectory");
    }
    Peak best{0, probabilities[0]};
    for (std::size_t j = 1; j < probabilities.size(); ++j) {
        if (probabilities[j] > best.probability) {
            best = {j, probabilities[j]};
        }
    }
    return best;
}

ComplexMatrix2 build_grover_operator_2d(const PhaseAngles &angles, const ReducedParams &params) {
    require_finite(angles.theta, "theta");
    require_finite(angles.phi, "phi");
    const double u = params.overlap();
    if (u >= 1.0) {
        throw std::domain_error("overlap must be strictly below 1 for a two-dimensional subspace");
    }
    return grover_matrix(angles.theta, angles.phi, u, std::sqrt(1.0 - u * u));
}

ComplexMatrix2 closed_form_power(double delta, double beta_prime, std::size_t j) {
    require_finite(delta, "delta");
    require_finite(beta_prime, "beta'");
    const double lambda = std::hypot(delta, beta_prime);
    const double jd = static_cast<double>(j);
    const double cos_jl = std::cos(jd * lambda);
    // sin(j l) / l
    const double sinc = lambda < kLambdaSeriesThreshold ? jd : std::sin(jd * lambda) / lambda;
    return {Complex(cos_jl, delta * sinc), beta_prime * sinc, -beta_prime * sinc, Complex(cos_jl, -delta * sinc)};
}

double marked_amplitude_norm(double delta, double beta_prime, std::size_t j) {
    return std::abs(closed_form_power(delta, beta_prime, j)(1, 0));
}

double p_max_small_angle(double delta, double dimension) {
    if (!(dimension >= 2.0)) {
        throw std::domain_error("dimension must be at least 2");
    }
    const double bp = 2.0 * std::sqrt(dimension - 1.0) / dimension;
    return bp * bp / (bp * bp + delta * delta);
}

double p_max_asymptotic(double delta, double dimension) {
    if (delta == 0.0) {
        throw std::domain_error("asymptotic estimate is undefined for delta = 0");
    }
    return std::clamp(4.0 / (dimension * delta * delta), 0.0, 1.0);
}

double max_database_size_phase(double delta) {
    if (delta == 0.0) {
        return kUnbounded;
    }
    return 8.0 / (delta * delta);
}

double max_database_size_combined(double combined_uncertainty) {
    if (combined_uncertainty == 0.0) {
        return kUnbounded;
    }
    return 64.0 / (combined_uncertainty * combined_uncertainty);
}

double rotation_angle_per_iteration(double theta, double beta) { return 2.0 * std::sin(theta / 2.0) * beta; }

std::size_t default_iteration_cap(const ReducedParams &params, double delta) {
    const double lambda = params.lambda(delta);
    if (lambda > 0.0) {
        return 3 * static_cast<std::size_t>(std::ceil(kPi / (2.0 * lambda)));
    }
    return 3 * static_cast<std::size_t>(std::ceil(kPi / 4.0 * std::sqrt(params.dimension())));
}

ReducedState::ReducedState(const ReducedParams &params)
    : overlap_(params.overlap()),
      complement_(std::sqrt(1.0 - params.overlap() * params.overlap())),
      amplitudes_{complement_, overlap_} {
    if (overlap_ >= 1.0) {
        throw std::domain_error("overlap must be strictly below 1 for a two-dimensional subspace");
    }
}

void ReducedState::apply(const PhaseAngles &angles) {
    amplitudes_ = grover_matrix(angles.theta, angles.phi, overlap_, complement_).transpose() * amplitudes_;
}

double ReducedState::success_probability() const { return clamp_probability(std::norm(amplitudes_.second)); }

Trajectory simulate_reduced(std::span<const PhaseAngles> schedule, const ReducedParams &params, std::size_t j_max) {
    if (schedule.empty()) {
        throw std::domain_error("angle schedule is empty");
    }
    if (schedule.size() != 1 && schedule.size() < j_max) {
        throw std::domain_error("angle schedule shorter than the iteration count");
    }
    for (const PhaseAngles &a : schedule) {
        require_finite(a.theta, "theta");
        require_finite(a.phi, "phi");
    }
    ReducedState state(params);
    std::vector<double> probabilities;
    probabilities.reserve(j_max + 1);
    probabilities.push_back(state.success_probability());
    for (std::size_t j = 0; j < j_max; ++j) {
        state.apply(schedule.size() == 1 ? schedule[0] : schedule[j]);
        probabilities.push_back(state.success_probability());
    }
    return Trajectory(std::move(probabilities));
}

}  // namespace gnoise
