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

#include "grovernoise/error_models.hpp"

#include <cmath>

namespace gnoise {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require(bool ok, const char *message) {
    if (!ok) {
        throw std::domain_error(message);
    }
}

}  // namespace

void validate(const ErrorModel &model) {
    std::visit(Overloaded{
                   [](const Em1 &m) { require(std::isfinite(m.delta0), "EM1 delta0 must be finite"); },
                   [](const Em2 &m) { require(std::isfinite(m.s) && m.s >= 0.0, "EM2 s must be finite and >= 0"); },
                   [](const Em3 &m) {
                       require(std::isfinite(m.delta0), "EM3 delta0 must be finite");
                       require(std::isfinite(m.s) && m.s >= 0.0, "EM3 s must be finite and >= 0");
                   },
                   [](const HadamardSystematic &m) {
                       require(std::isfinite(m.epsilon) && std::abs(m.epsilon) < kPi / 4.0,
                               "Hadamard offset must be finite with |epsilon| < pi/4");
                   },
                   [](const HadamardLeakage &m) {
                       require(std::isfinite(m.delta1) && m.delta1 >= 0.0 && m.delta1 < 1.0,
                               "leakage delta1 must lie in [0, 1)");
                   },
               },
               model);
}

std::string model_name(const ErrorModel &model) {
    return std::visit(Overloaded{
                          [](const Em1 &) { return std::string("EM1"); },
                          [](const Em2 &) { return std::string("EM2"); },
                          [](const Em3 &) { return std::string("EM3"); },
                          [](const HadamardSystematic &) { return std::string("hadamard_systematic"); },
                          [](const HadamardLeakage &) { return std::string("hadamard_leakage"); },
                      },
                      model);
}

std::pair<double, double> model_params(const ErrorModel &model) {
    return std::visit(Overloaded{
                          [](const Em1 &m) { return std::pair{m.delta0, 0.0}; },
                          [](const Em2 &m) { return std::pair{0.0, m.s}; },
                          [](const Em3 &m) { return std::pair{m.delta0, m.s}; },
                          [](const HadamardSystematic &m) { return std::pair{m.epsilon, 0.0}; },
                          [](const HadamardLeakage &m) { return std::pair{m.delta1, 0.0}; },
                      },
                      model);
}

bool is_phase_model(const ErrorModel &model) {
    return std::holds_alternative<Em1>(model) || std::holds_alternative<Em2>(model) ||
           std::holds_alternative<Em3>(model);
}

double sample_phase_mismatch(const ErrorModel &model, RngStream &rng) {
    return std::visit(Overloaded{
                          [](const Em1 &m) { return m.delta0; },
                          [&rng](const Em2 &m) { return rng.gaussian(0.0, m.s); },
                          [&rng](const Em3 &m) { return rng.gaussian(m.delta0, m.s); },
                          [](const HadamardSystematic &) -> double {
                              throw std::domain_error("Hadamard error models have no phase mismatch");
                          },
                          [](const HadamardLeakage &) -> double {
                              throw std::domain_error("Hadamard error models have no phase mismatch");
                          },
                      },
                      model);
}

PhaseAngles split_mismatch_into_angles(double delta) { return PhaseAngles::make(kPi + delta / 2.0, kPi - delta / 2.0); }

ComplexMatrix2 build_leakage_operator(double beta, double delta1) {
    require(std::isfinite(beta), "beta must be finite");
    require(std::isfinite(delta1) && delta1 >= 0.0 && delta1 < 1.0, "leakage delta1 must lie in [0, 1)");
    const double c = std::cos(beta);
    const double s = std::sin(beta);
    const double keep = 1.0 - delta1;
    return {c, s * keep, -s, c * keep};
}

double leakage_amplitude_first_order(std::size_t j, double beta, double delta1) {
    const double jd = static_cast<double>(j);
    return std::abs((1.0 - (jd - 1.0) * delta1 / 2.0) * std::sin(jd * beta));
}

double leakage_success_rate(double dimension, double delta1) {
    const double loss = kPi * std::sqrt(dimension) * delta1 / 4.0;
    if (!(loss < 1.0)) {
        throw OutOfRegimeError("leakage estimate needs pi sqrt(N) delta1 / 4 < 1");
    }
    return 1.0 - loss;
}

double leakage_success_rate_squared(double dimension, double delta1) {
    const double loss = kPi * std::sqrt(dimension) * delta1 / 8.0;
    if (!(loss < 1.0)) {
        throw OutOfRegimeError("leakage estimate needs pi sqrt(N) delta1 / 8 < 1");
    }
    return (1.0 - loss) * (1.0 - loss);
}

double max_database_size_hadamard(double delta1) {
    if (delta1 == 0.0) {
        return kUnbounded;
    }
    return 4.0 / (kPi * kPi * delta1 * delta1);
}

LeakageTrajectory simulate_leakage_trajectory(double dimension, double delta1, std::size_t j_max) {
    require(dimension >= 2.0, "dimension must be at least 2");
    const double beta = std::asin(1.0 / std::sqrt(dimension));
    const ComplexMatrix2 q = build_leakage_operator(2.0 * beta, delta1);

    Vector2 state{std::cos(beta), -std::sin(beta)};
    std::vector<double> probabilities;
    std::vector<double> norms;
    probabilities.reserve(j_max + 1);
    norms.reserve(j_max + 1);
    probabilities.push_back(std::norm(state.second));
    norms.push_back(state.norm_squared());
    for (std::size_t j = 0; j < j_max; ++j) {
        state = q * state;
        probabilities.push_back(std::norm(state.second));
        norms.push_back(state.norm_squared());
    }
    return {Trajectory(std::move(probabilities)), std::move(norms)};
}

}  // namespace gnoise
