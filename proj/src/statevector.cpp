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

#include "grovernoise/statevector.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "grovernoise/kernels.hpp"

namespace gnoise {
namespace {

void require_index(const StateVector &state, std::uint64_t index) {
    if (index >= state.size()) {
        throw std::domain_error("basis index " + std::to_string(index) + " out of range for " +
                                std::to_string(state.qubits()) + " qubits");
    }
}

}  // namespace

StateVector::StateVector(int n) : n_(n) {
    if (n < 1 || n > kMaxQubits) {
        throw std::domain_error("full simulator supports 1.." + std::to_string(kMaxQubits) + " qubits, got " +
                                std::to_string(n));
    }
    amplitudes_.assign(std::size_t{1} << n, std::complex<double>{});
}

double StateVector::norm_squared() const { return kernels::active().norm_squared(amplitudes_); }

HadamardGateSpec::HadamardGateSpec(std::vector<double> offsets) : offsets_(std::move(offsets)) {
    for (double eps : offsets_) {
        if (!std::isfinite(eps) || std::abs(eps) >= kPi / 4.0) {
            throw std::domain_error("Hadamard angle offsets must be finite with |eps| < pi/4");
        }
    }
}

HadamardGateSpec HadamardGateSpec::ideal(int n) { return uniform(n, 0.0); }

HadamardGateSpec HadamardGateSpec::uniform(int n, double epsilon) {
    if (n < 1) {
        throw std::domain_error("qubit count must be positive");
    }
    return HadamardGateSpec(std::vector<double>(static_cast<std::size_t>(n), epsilon));
}

double HadamardGateSpec::overlap(std::uint64_t marked) const {
    double product = 1.0;
    for (std::size_t k = 0; k < offsets_.size(); ++k) {
        const double angle = kPi / 4.0 + offsets_[k];
        product *= ((marked >> k) & 1U) != 0 ? std::sin(angle) : std::cos(angle);
    }
    return product;
}

StateVector prepare_basis_state(int n, std::uint64_t index) {
    StateVector state(n);
    require_index(state, index);
    state.amplitudes()[index] = 1.0;
    return state;
}

StateVector apply_walsh_hadamard(StateVector state, const HadamardGateSpec &spec) {
    if (spec.qubits() != state.qubits()) {
        throw std::domain_error("Hadamard spec covers " + std::to_string(spec.qubits()) + " qubits, state has " +
                                std::to_string(state.qubits()));
    }
    const kernels::KernelTable &k = kernels::active();
    for (int q = 0; q < state.qubits(); ++q) {
        const double angle = kPi / 4.0 + spec.offsets()[static_cast<std::size_t>(q)];
        k.butterfly(state.amplitudes(), static_cast<unsigned>(q), std::cos(angle), std::sin(angle));
    }
    return state;
}

StateVector apply_selective_phase(StateVector state, std::uint64_t index, double angle) {
    require_index(state, index);
    state.amplitudes()[index] *= std::polar(1.0, angle);
    return state;
}

StateVector grover_iteration_full(StateVector state, std::uint64_t marked, const PhaseAngles &angles,
                                  const HadamardGateSpec &spec) {
    require_index(state, marked);
    state = apply_selective_phase(std::move(state), marked, angles.phi);
    state = apply_walsh_hadamard(std::move(state), spec);
    state = apply_selective_phase(std::move(state), 0, angles.theta);
    return apply_walsh_hadamard(std::move(state), spec);
}

double success_probability(const StateVector &state, std::uint64_t marked) {
    require_index(state, marked);
    return clamp_probability(std::norm(state[marked]));
}

Trajectory run_full_search(int n, std::uint64_t marked, std::span<const PhaseAngles> schedule,
                           const HadamardGateSpec &spec, std::size_t j_max) {
    if (schedule.empty()) {
        throw std::domain_error("angle schedule is empty");
    }
    if (schedule.size() != 1 && schedule.size() < j_max) {
        throw std::domain_error("angle schedule shorter than the iteration count");
    }
    StateVector state = apply_walsh_hadamard(prepare_basis_state(n, 0), spec);
    require_index(state, marked);
    std::vector<double> probabilities;
    probabilities.reserve(j_max + 1);
    probabilities.push_back(success_probability(state, marked));
    for (std::size_t j = 0; j < j_max; ++j) {
        state = grover_iteration_full(std::move(state), marked, schedule.size() == 1 ? schedule[0] : schedule[j], spec);
        probabilities.push_back(success_probability(state, marked));
    }
    return Trajectory(std::move(probabilities));
}

ReducedParams equivalent_reduced_params(const HadamardGateSpec &spec, std::uint64_t marked) {
    if (marked >= (std::uint64_t{1} << spec.qubits())) {
        throw std::domain_error("marked state out of range");
    }
    return ReducedParams::with_overlap(spec.qubits(), spec.overlap(marked));
}

}  // namespace gnoise
