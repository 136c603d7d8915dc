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

#include "grovernoise/experiments.hpp"

#include <algorithm>
#include <cstdio>
#include <atomic>
#include <cmath>
#include <exception>
#include <fstream>
#include <mutex>
#include <ostream>
#include <thread>

#include "grovernoise/statevector.hpp"

namespace gnoise {
namespace {

std::uint64_t marked_for(const SweepConfig &config, int n) {
    return config.marked.value_or((std::uint64_t{1} << n) - 1);
}

std::size_t grover_cap(double dimension) {
    return static_cast<std::size_t>(std::ceil(kPi / 4.0 * std::sqrt(dimension)));
}

SampleOutcome peak_of(const Trajectory &t) { return {t.peak_p(), t.peak_j()}; }

SampleOutcome phase_sample_reduced(const ErrorModel &model, const ReducedParams &params, RngStream &rng,
                                   std::size_t cap) {
    ReducedState state(params);
    SampleOutcome best{state.success_probability(), 0};
    for (std::size_t j = 1; j <= cap; ++j) {
        state.apply(split_mismatch_into_angles(sample_phase_mismatch(model, rng)));
        const double p = state.success_probability();
        if (p > best.p_max) {
            best = {p, j};
        }
    }
    return best;
}

SampleOutcome phase_sample_full(const ErrorModel &model, int n, std::uint64_t marked, RngStream &rng,
                                std::size_t cap) {
    const HadamardGateSpec spec = HadamardGateSpec::ideal(n);
    StateVector state = apply_walsh_hadamard(prepare_basis_state(n, 0), spec);
    SampleOutcome best{success_probability(state, marked), 0};
    for (std::size_t j = 1; j <= cap; ++j) {
        state = grover_iteration_full(std::move(state), marked,
                                      split_mismatch_into_angles(sample_phase_mismatch(model, rng)), spec);
        const double p = success_probability(state, marked);
        if (p > best.p_max) {
            best = {p, j};
        }
    }
    return best;
}

bool consecutive(const std::vector<SweepPoint> &points) {
    for (std::size_t i = 1; i < points.size(); ++i) {
        if (points[i].n != points[i - 1].n + 1) {
            return false;
        }
    }
    return true;
}

}  // namespace

void validate(const SweepConfig &config) {
    try {
        validate(config.model);
    } catch (const std::domain_error &e) {
        throw ConfigError(e.what());
    }
    if (config.n_values.empty()) {
        throw ConfigError("n_values must not be empty");
    }
    for (std::size_t i = 0; i < config.n_values.size(); ++i) {
        const int n = config.n_values[i];
        if (n < 1 || n > ReducedParams::kMaxQubits) {
            throw ConfigError("n = " + std::to_string(n) + " outside [1, " + std::to_string(ReducedParams::kMaxQubits) +
                              "]");
        }
        if (i > 0 && n <= config.n_values[i - 1]) {
            throw ConfigError("n_values must be strictly increasing");
        }
    }
    if (config.samples_per_n < 1) {
        throw ConfigError("samples_per_n must be at least 1");
    }
    if (!std::isfinite(config.j_cap_policy) || config.j_cap_policy <= 0.0) {
        throw ConfigError("j_cap_policy must be positive");
    }
    if (config.engine == Engine::kFull && config.n_values.back() > StateVector::kMaxQubits) {
        throw ConfigError("full engine is limited to n <= " + std::to_string(StateVector::kMaxQubits) + ", requested " +
                          std::to_string(config.n_values.back()));
    }
    if (config.marked) {
        const std::uint64_t limit = std::uint64_t{1} << config.n_values.front();
        if (*config.marked >= limit) {
            throw ConfigError("marked state " + std::to_string(*config.marked) + " out of range for n = " +
                              std::to_string(config.n_values.front()));
        }
    }
}

std::size_t iteration_cap(const SweepConfig &config, int n) {
    const ReducedParams params = ReducedParams::for_qubits(n);
    std::size_t cap = static_cast<std::size_t>(
        std::ceil(config.j_cap_policy * static_cast<double>(grover_cap(params.dimension()))));
    if (const auto *em1 = std::get_if<Em1>(&config.model)) {
        cap = std::min(cap, default_iteration_cap(params, em1->delta0));
    }
    return std::max<std::size_t>(cap, 1);
}

SampleOutcome simulate_sample(const SweepConfig &config, int n, std::size_t sample) {
    RngStream rng(config.seed, stream_index_for(static_cast<std::uint64_t>(n), sample));
    const std::size_t cap = iteration_cap(config, n);
    const std::uint64_t marked = marked_for(config, n);

    if (is_phase_model(config.model)) {
        if (config.engine == Engine::kFull) {
            return phase_sample_full(config.model, n, marked, rng, cap);
        }
        return phase_sample_reduced(config.model, ReducedParams::for_qubits(n), rng, cap);
    }
    if (const auto *sys = std::get_if<HadamardSystematic>(&config.model)) {
        const HadamardGateSpec spec = HadamardGateSpec::uniform(n, sys->epsilon);
        if (config.engine == Engine::kFull) {
            return peak_of(run_full_search(n, marked, PhaseAngles::ideal(), spec, cap));
        }
        return peak_of(simulate_reduced(PhaseAngles::ideal(), equivalent_reduced_params(spec, marked), cap));
    }
    const auto &leak = std::get<HadamardLeakage>(config.model);
    return peak_of(simulate_leakage_trajectory(std::ldexp(1.0, n), leak.delta1, cap).trajectory);
}

SweepResult run_sweep(const SweepConfig &config) {
    validate(config);
    const std::size_t per_n = config.samples_per_n;
    const std::size_t total = config.n_values.size() * per_n;
    std::vector<SampleOutcome> outcomes(total);

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t task = next.fetch_add(1); task < total; task = next.fetch_add(1)) {
            try {
                outcomes[task] = simulate_sample(config, config.n_values[task / per_n], task % per_n);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
                next.store(total);
            }
        }
    };

    unsigned threads = config.threads != 0 ? config.threads : std::max(1U, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, total));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back(worker);
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }

    // Fold in (n, sample) order so the result is independent of scheduling.
    SweepResult result{config, {}};
    result.points.reserve(config.n_values.size());
    for (std::size_t i = 0; i < config.n_values.size(); ++i) {
        const SampleOutcome *first = outcomes.data() + i * per_n;
        SweepPoint point;
        point.n = config.n_values[i];
        point.samples = per_n;
        point.min_pmax = first[0].p_max;
        point.max_pmax = first[0].p_max;
        double sum = 0.0;
        double sum_j = 0.0;
        for (std::size_t k = 0; k < per_n; ++k) {
            sum += first[k].p_max;
            sum_j += static_cast<double>(first[k].j_opt);
            point.min_pmax = std::min(point.min_pmax, first[k].p_max);
            point.max_pmax = std::max(point.max_pmax, first[k].p_max);
        }
        const double count = static_cast<double>(per_n);
        point.mean_pmax = std::clamp(sum / count, point.min_pmax, point.max_pmax);
        point.mean_j_opt = sum_j / count;
        if (per_n > 1) {
            double squares = 0.0;
            for (std::size_t k = 0; k < per_n; ++k) {
                const double d = first[k].p_max - point.mean_pmax;
                squares += d * d;
            }
            point.std_pmax = std::sqrt(squares / (count - 1.0));
        }
        result.points.push_back(point);
    }
    return result;
}

std::optional<int> transition_point(const SweepResult &result, double threshold) {
    if (!consecutive(result.points)) {
        throw std::domain_error("transition point needs consecutive n values");
    }
    for (const SweepPoint &point : result.points) {
        if (point.mean_pmax < threshold) {
            return point.n;
        }
    }
    return std::nullopt;
}

std::vector<AnalyticRow> compare_analytic(const SweepResult &result) {
    const auto *em1 = std::get_if<Em1>(&result.config.model);
    if (em1 == nullptr) {
        throw std::domain_error("closed forms exist only for EM1, got " + model_name(result.config.model));
    }
    const double delta = em1->delta0;
    std::vector<AnalyticRow> rows;
    rows.reserve(result.points.size());
    for (const SweepPoint &point : result.points) {
        const double dimension = std::ldexp(1.0, point.n);
        AnalyticRow row;
        row.n = point.n;
        row.simulated = point.mean_pmax;
        row.small_angle = p_max_small_angle(delta, dimension);
        const double raw = delta == 0.0 ? kUnbounded : 4.0 / (dimension * delta * delta);
        row.asymptotic = std::clamp(raw, 0.0, 1.0);
        row.asymptotic_clamped = raw > 1.0;
        row.small_angle_abs_diff = std::abs(row.simulated - row.small_angle);
        row.asymptotic_abs_diff = std::abs(row.simulated - row.asymptotic);
        rows.push_back(row);
    }
    return rows;
}

std::string format_real(double x) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.12g", x == 0.0 ? 0.0 : x);
    return buffer;
}

void emit_csv(const SweepResult &result, std::ostream &out) {
    const auto [param1, param2] = model_params(result.config.model);
    const std::string model = model_name(result.config.model);
    out << kCsvHeader << '\n';
    for (const SweepPoint &p : result.points) {
        out << p.n << ',' << (std::uint64_t{1} << p.n) << ',' << model << ',' << format_real(param1) << ','
            << format_real(param2) << ',' << p.samples << ',' << format_real(p.mean_pmax) << ','
            << format_real(p.std_pmax) << ',' << format_real(p.min_pmax) << ',' << format_real(p.max_pmax) << ','
            << format_real(p.mean_j_opt) << ',' << result.config.seed << '\n';
    }
}

void emit_csv(const SweepResult &result, const std::filesystem::path &destination) {
    std::ofstream out(destination, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot open '" + destination.string() + "' for writing");
    }
    emit_csv(result, out);
    out.flush();
    if (!out) {
        throw std::runtime_error("write to '" + destination.string() + "' failed");
    }
}

}  // namespace gnoise
