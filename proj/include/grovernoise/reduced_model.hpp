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

// Dynamics of the generalized Grover iteration restricted to the invariant
// plane spanned by the prepared state and the (back-transformed) marked state.
//
// Basis and orientation convention (the only place it is fixed):
//   |1> = (|gamma> - u U^-1|tau>) / sqrt(1 - u^2),   |2> = U^-1 |tau>,
//   u = <tau|U|gamma>, so the prepared state is (sqrt(1 - u^2), u).
// build_grover_operator_2d() returns the printed 2x2 matrix M verbatim. M is
// laid out for row amplitude vectors (psi' = psi M); propagation on column
// amplitudes therefore uses M^T, which equals the exact -I_gamma U^-1 I_tau U
// restricted to the plane. With theta = phi = pi this rotates the prepared
// state by 2 arcsin(u) toward |2>, giving P_j = sin^2((2j + 1) arcsin u).

#include <cstddef>
#include <limits>
#include <numbers>
#include <span>
#include <vector>

#include "grovernoise/matrix2.hpp"

namespace gnoise {

inline constexpr double kPi = std::numbers::pi;

/// Returned by the database-size bounds when the error parameter is zero.
inline constexpr double kUnbounded = std::numeric_limits<double>::infinity();

/// Probabilities above 1 by no more than this are treated as rounding.
inline constexpr double kProbabilityRoundingSlack = 1e-9;

/// Selective phase-inversion angles. theta acts on the prepared state, phi on
/// the marked state; the ideal inversion is pi for both.
struct PhaseAngles {
    double theta = kPi;
    double phi = kPi;

    /// Throws std::domain_error for non-finite input.
    static PhaseAngles make(double theta, double phi);
    static PhaseAngles ideal() { return {}; }

    double theta0() const { return theta - kPi; }
    double phi0() const { return phi - kPi; }
    double delta() const { return theta - phi; }
};

/// Size-dependent constants of the reduced model for an n-qubit search space.
class ReducedParams {
  public:
    static constexpr int kMaxQubits = 62;

    /// Ideal Walsh-Hadamard overlap u = 1/sqrt(N).
    static ReducedParams for_qubits(int n);
    /// Arbitrary overlap magnitude u in (0, 1], e.g. from an imperfect U.
    static ReducedParams with_overlap(int n, double u);

    int qubits() const { return n_; }
    double dimension() const { return dimension_; }
    double overlap() const { return overlap_; }
    /// sqrt(N - 1) / N, the small-angle rotation parameter.
    double beta() const { return beta_; }
    /// arcsin(u), the exact half rotation angle of the perfect iteration.
    double beta_arcsin() const { return beta_arcsin_; }
    double beta_prime() const { return 2.0 * beta_; }
    /// sqrt(delta^2 + beta'^2)
    double lambda(double delta) const;

  private:
    ReducedParams(int n, double u);

    int n_;
    double dimension_;
    double overlap_;
    double beta_;
    double beta_arcsin_;
};

struct Peak {
    std::size_t j = 0;
    double probability = 0.0;
};

/// Success probability per iteration index, starting at j = 0.
class Trajectory {
  public:
    /// Clamps rounding excursions above 1; throws std::logic_error beyond the
    /// slack and std::domain_error if empty.
    explicit Trajectory(std::vector<double> probabilities);

    std::span<const double> probabilities() const { return probabilities_; }
    std::size_t size() const { return probabilities_.size(); }
    double operator[](std::size_t j) const { return probabilities_[j]; }

    std::size_t peak_j() const { return peak_.j; }
    double peak_p() const { return peak_.probability; }

  private:
    std::vector<double> probabilities_;
    Peak peak_;
};

/// Clamp a computed |amplitude|^2 to [0, 1]. Values in (1, 1 + 1e-9] become 1;
/// larger ones indicate a bug and throw std::logic_error.
double clamp_probability(double p);

/// First index attaining the maximum. Throws std::domain_error when empty.
Peak find_peak(std::span<const double> probabilities);

/// The exact 2x2 matrix of one iteration for overlap params.overlap(), with no
/// small-angle approximation. Unitary.
ComplexMatrix2 build_grover_operator_2d(const PhaseAngles &angles, const ReducedParams &params);

/// Q^j under Q = exp(iG), G = delta sigma_z + beta' sigma_y:
/// [[cos jl + i delta sin(jl)/l, beta' sin(jl)/l], [-beta' sin(jl)/l, cos jl - i delta sin(jl)/l]].
ComplexMatrix2 closed_form_power(double delta, double beta_prime, std::size_t j);

/// (beta'/lambda) |sin(j lambda)|
double marked_amplitude_norm(double delta, double beta_prime, std::size_t j);

/// beta'^2 / (beta'^2 + delta^2), beta' = 2 sqrt(N - 1) / N.
double p_max_small_angle(double delta, double dimension);

/// 4 / (N delta^2), clamped to [0, 1]. delta == 0 throws std::domain_error.
double p_max_asymptotic(double delta, double dimension);

/// 8 / delta^2 (half success rate under the asymptotic estimate).
double max_database_size_phase(double delta);

/// 64 / Delta^2 for the combined systematic+random uncertainty Delta = 2 delta.
double max_database_size_combined(double combined_uncertainty);

/// 2 sin(theta / 2) beta
double rotation_angle_per_iteration(double theta, double beta);

/// Iteration cap used for peak searches: 3 ceil(pi / (2 lambda)).
std::size_t default_iteration_cap(const ReducedParams &params, double delta);

/// Exact reduced-model state, advanced one iteration at a time.
class ReducedState {
  public:
    explicit ReducedState(const ReducedParams &params);

    void apply(const PhaseAngles &angles);

    const Vector2 &amplitudes() const { return amplitudes_; }
    double success_probability() const;

  private:
    double overlap_;
    double complement_;
    Vector2 amplitudes_;
};

/// Iterates the exact operator from the prepared state. The schedule holds
/// either one entry (reused every step) or at least j_max entries, where entry
/// k drives iteration k + 1. Returns j_max + 1 probabilities.
Trajectory simulate_reduced(std::span<const PhaseAngles> schedule, const ReducedParams &params,
                            std::size_t j_max);

inline Trajectory simulate_reduced(const PhaseAngles &angles, const ReducedParams &params,
                                   std::size_t j_max) {
    return simulate_reduced(std::span<const PhaseAngles>(&angles, 1), params, j_max);
}

}  // namespace gnoise
