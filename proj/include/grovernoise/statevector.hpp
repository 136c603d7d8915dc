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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "grovernoise/reduced_model.hpp"

namespace gnoise {

/// Dense 2^n amplitude vector. Qubit k is bit k of the basis index.
class StateVector {
  public:
    static constexpr int kMaxQubits = 26;

    /// All-zero amplitudes; throws std::domain_error outside [1, kMaxQubits].
    explicit StateVector(int n);

    int qubits() const { return n_; }
    std::size_t size() const { return amplitudes_.size(); }

    std::span<std::complex<double>> amplitudes() { return amplitudes_; }
    std::span<const std::complex<double>> amplitudes() const { return amplitudes_; }
    std::complex<double> operator[](std::size_t i) const { return amplitudes_[i]; }

    double norm_squared() const;

  private:
    int n_;
    std::vector<std::complex<double>> amplitudes_;
};

/// Per-qubit angle offsets eps_k of the one-qubit gate
/// R(eps) = [[cos(pi/4 + eps), sin(pi/4 + eps)], [sin(pi/4 + eps), -cos(pi/4 + eps)]].
/// R(0) is the Hadamard gate; every R(eps) is real, unitary and self-inverse.
class HadamardGateSpec {
  public:
    static HadamardGateSpec ideal(int n);
    static HadamardGateSpec uniform(int n, double epsilon);
    /// Throws std::domain_error unless every |eps_k| < pi/4 and finite.
    explicit HadamardGateSpec(std::vector<double> offsets);

    int qubits() const { return static_cast<int>(offsets_.size()); }
    std::span<const double> offsets() const { return offsets_; }

    /// <tau|U|0...0> = prod_k (bit k of tau ? sin : cos)(pi/4 + eps_k).
    double overlap(std::uint64_t marked) const;

  private:
    std::vector<double> offsets_;
};

StateVector prepare_basis_state(int n, std::uint64_t index);

StateVector apply_walsh_hadamard(StateVector state, const HadamardGateSpec &spec);

/// Multiplies amplitude `index` by e^{i angle}.
StateVector apply_selective_phase(StateVector state, std::uint64_t index, double angle);

/// One iteration acting on the computational-basis state (the frame in which the
/// marked amplitude is read): phase phi on `marked`, U^-1, phase theta on |0...0>,
/// U. This is U (-I_gamma U^-1 I_tau U) U^-1 with the global sign dropped.
StateVector grover_iteration_full(StateVector state, std::uint64_t marked, const PhaseAngles &angles,
                                  const HadamardGateSpec &spec);

/// |amplitude[marked]|^2, clamped as in clamp_probability().
double success_probability(const StateVector &state, std::uint64_t marked);

/// Prepares U|0...0> and records the success probability before and after each
/// of j_max iterations. The schedule follows the simulate_reduced() contract.
Trajectory run_full_search(int n, std::uint64_t marked, std::span<const PhaseAngles> schedule,
                           const HadamardGateSpec &spec, std::size_t j_max);

inline Trajectory run_full_search(int n, std::uint64_t marked, const PhaseAngles &angles,
                                  const HadamardGateSpec &spec, std::size_t j_max) {
    return run_full_search(n, marked, std::span<const PhaseAngles>(&angles, 1), spec, j_max);
}

/// Reduced-model parameters describing the same search exactly: the dynamics
/// stays in span{|0...0>, U|tau>} for any self-inverse U, with u = <tau|U|0...0>.
ReducedParams equivalent_reduced_params(const HadamardGateSpec &spec, std::uint64_t marked);

}  // namespace gnoise
