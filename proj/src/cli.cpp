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

#include "grovernoise/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>

#include "grovernoise/experiments.hpp"
#include "grovernoise/statevector.hpp"

namespace gnoise::cli {
namespace {

constexpr double kValidateTolerance = 1e-10;
constexpr int kValidateMaxQubits = 12;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

Engine parse_engine(const std::string &name) {
    if (name == "reduced") {
        return Engine::kReduced;
    }
    if (name == "full") {
        return Engine::kFull;
    }
    throw UsageError("unknown engine '" + name + "' (expected reduced or full)");
}

std::string figure_file_name(int figure, const ErrorModel &model) {
    const auto [p1, p2] = model_params(model);
    std::string name = "fig" + std::to_string(figure) + "_" + model_name(model);
    if (!std::holds_alternative<Em2>(model)) {
        name += "_delta0_" + format_real(p1);
    }
    if (!std::holds_alternative<Em1>(model)) {
        name += "_s_" + format_real(p2);
    }
    return name + ".csv";
}

struct CommonOptions {
    std::uint64_t seed = 42;
    std::optional<std::size_t> samples;
    std::string engine = "reduced";
    std::string out;
    std::string n_range;
    unsigned threads = 0;
};

void add_common(CLI::App *cmd, CommonOptions &opts) {
    cmd->add_option("--seed", opts.seed, "Random seed (u64)");
    cmd->add_option("--samples", opts.samples, "Monte Carlo samples per n")->check(CLI::PositiveNumber);
    cmd->add_option("--engine", opts.engine, "reduced | full");
    cmd->add_option("--n", opts.n_range, "Qubit counts: a..b, a,b,c or a");
    cmd->add_option("--threads", opts.threads, "Worker threads (0 = all cores)");
}

int cmd_figure(int which, const CommonOptions &opts, std::ostream &out, std::ostream &err) {
    const auto &presets = figure_presets();
    const auto it = std::find_if(presets.begin(), presets.end(), [&](const FigurePreset &p) { return p.figure == which; });
    if (it == presets.end()) {
        throw UsageError("figure must be 1, 2 or 3");
    }
    const std::filesystem::path dir = opts.out.empty() ? std::filesystem::path(".") : std::filesystem::path(opts.out);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
        throw std::runtime_error("cannot create output directory '" + dir.string() + "': " + ec.message());
    }
    for (const ErrorModel &model : it->curves) {
        SweepConfig config;
        config.model = model;
        config.n_values = parse_n_range(opts.n_range.empty() ? "4..32" : opts.n_range);
        config.samples_per_n = opts.samples.value_or(it->default_samples);
        config.seed = opts.seed;
        config.engine = parse_engine(opts.engine);
        config.threads = opts.threads;
        validate(config);
        const std::filesystem::path path = dir / figure_file_name(which, model);
        emit_csv(run_sweep(config), path);
        out << path.string() << '\n';
    }
    err << "figure " << which << ": " << it->caption << '\n';
    return kExitOk;
}

int cmd_bound(const std::string &kind, double param, std::ostream &out) {
    if (!std::isfinite(param) || param <= 0.0) {
        throw UsageError("bound parameter must be positive");
    }
    double bound = 0.0;
    if (kind == "phase") {
        bound = max_database_size_phase(param);
    } else if (kind == "hadamard") {
        bound = max_database_size_hadamard(param);
    } else if (kind == "combined") {
        bound = max_database_size_combined(param);
    } else {
        throw UsageError("bound kind must be phase, hadamard or combined");
    }
    out << "N_max=" << format_real(bound) << " log2=" << format_real(std::log2(bound)) << '\n';
    return kExitOk;
}

int cmd_validate(int max_n, std::size_t trials, std::uint64_t seed, std::ostream &out, std::ostream &err) {
    if (max_n < 1 || max_n > kValidateMaxQubits) {
        throw UsageError("--max-n must be in [1, " + std::to_string(kValidateMaxQubits) + "]");
    }
    if (trials == 0) {
        throw UsageError("--trials must be positive");
    }
    double worst = 0.0;
    bool ok = true;
    for (std::size_t t = 0; t < trials; ++t) {
        RngStream rng(seed, t);
        const int n = 1 + static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(max_n));
        const std::uint64_t marked = rng.next_u64() % (std::uint64_t{1} << n);
        const PhaseAngles angles = PhaseAngles::make(2.0 * kPi * rng.uniform(), 2.0 * kPi * rng.uniform());
        std::vector<double> offsets(static_cast<std::size_t>(n));
        for (double &eps : offsets) {
            eps = 0.2 * rng.uniform() - 0.1;
        }
        const HadamardGateSpec spec(offsets);
        const std::size_t j_max = 3 * static_cast<std::size_t>(std::ceil(kPi / 4.0 * std::sqrt(std::ldexp(1.0, n))));

        const Trajectory full = run_full_search(n, marked, angles, spec, j_max);
        const Trajectory reduced = simulate_reduced(angles, equivalent_reduced_params(spec, marked), j_max);
        double discrepancy = 0.0;
        for (std::size_t j = 0; j <= j_max; ++j) {
            discrepancy = std::max(discrepancy, std::abs(full[j] - reduced[j]));
        }
        worst = std::max(worst, discrepancy);
        if (discrepancy > kValidateTolerance) {
            ok = false;
            err << "mismatch: n=" << n << " marked=" << marked << " theta=" << format_real(angles.theta)
                << " phi=" << format_real(angles.phi) << " discrepancy=" << format_real(discrepancy) << '\n';
        }
    }
    out << "trials=" << trials << " max_n=" << max_n << " worst_discrepancy=" << format_real(worst) << '\n';
    return ok ? kExitOk : kExitFailure;
}

struct SweepFlags {
    bool em1 = false, em2 = false, em3 = false, hsys = false, leak = false;
    double delta0 = 0.0, s = 0.0, epsilon = 0.0, delta1 = 0.0;
    double j_cap = 3.0;
    std::optional<std::uint64_t> marked;
};

ErrorModel model_from_flags(const SweepFlags &f) {
    const int chosen = int(f.em1) + int(f.em2) + int(f.em3) + int(f.hsys) + int(f.leak);
    if (chosen != 1) {
        throw UsageError("choose exactly one of --em1, --em2, --em3, --hadamard, --leak");
    }
    if (f.em1) {
        return Em1{f.delta0};
    }
    if (f.em2) {
        return Em2{f.s};
    }
    if (f.em3) {
        return Em3{f.delta0, f.s};
    }
    if (f.hsys) {
        return HadamardSystematic{f.epsilon};
    }
    return HadamardLeakage{f.delta1};
}

int cmd_sweep(const SweepFlags &flags, const CommonOptions &opts, std::ostream &out) {
    SweepConfig config;
    config.model = model_from_flags(flags);
    if (opts.n_range.empty()) {
        throw UsageError("--n is required");
    }
    config.n_values = parse_n_range(opts.n_range);
    config.samples_per_n = opts.samples.value_or(is_phase_model(config.model) && !std::holds_alternative<Em1>(config.model) ? 200 : 1);
    config.seed = opts.seed;
    config.engine = parse_engine(opts.engine);
    config.j_cap_policy = flags.j_cap;
    config.marked = flags.marked;
    config.threads = opts.threads;
    validate(config);
    const SweepResult result = run_sweep(config);
    if (opts.out.empty() || opts.out == "-") {
        emit_csv(result, out);
    } else {
        emit_csv(result, std::filesystem::path(opts.out));
    }
    return kExitOk;
}

}  // namespace

const std::vector<FigurePreset> &figure_presets() {
    static const std::vector<FigurePreset> presets{
        {1, "EM1 with delta0 = 1e-2, 1e-3, 1e-4", {Em1{1e-2}, Em1{1e-3}, Em1{1e-4}}, 1},
        {2, "EM2 with delta0 = 0, s = 1e-2", {Em2{1e-2}}, 200},
        {3, "EM3 with delta0 = 1e-2, 1e-3, 1e-4, s = 1e-3", {Em3{1e-2, 1e-3}, Em3{1e-3, 1e-3}, Em3{1e-4, 1e-3}}, 200},
    };
    return presets;
}

std::vector<int> parse_n_range(const std::string &text) {
    auto to_int = [&](const std::string &s) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(s, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used == 0 || used != s.size()) {
            throw UsageError("bad qubit count '" + s + "' in --n " + text);
        }
        return v;
    };
    std::vector<int> values;
    if (const auto dots = text.find(".."); dots != std::string::npos) {
        const int lo = to_int(text.substr(0, dots));
        const int hi = to_int(text.substr(dots + 2));
        if (hi < lo) {
            throw UsageError("empty range in --n " + text);
        }
        for (int n = lo; n <= hi; ++n) {
            values.push_back(n);
        }
    } else {
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) {
            values.push_back(to_int(item));
        }
    }
    if (values.empty()) {
        throw UsageError("empty --n");
    }
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (values[i] <= values[i - 1]) {
            throw UsageError("--n values must be strictly increasing");
        }
    }
    return values;
}

int run(std::span<const std::string> args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Grover search under imperfect phase inversions and Walsh-Hadamard gates", "grover_noise"};
    app.require_subcommand(1, 1);

    CommonOptions figure_opts;
    int figure_which = 0;
    auto *figure = app.add_subcommand("figure", "Run the preset sweeps behind figure 1, 2 or 3");
    figure->add_option("which", figure_which, "Figure number")->required();
    add_common(figure, figure_opts);
    figure->add_option("--out", figure_opts.out, "Output directory (default .)");

    std::string bound_kind;
    double bound_param = 0.0;
    auto *bound = app.add_subcommand("bound", "Database-size bound for a given error level");
    bound->add_option("kind", bound_kind, "phase | hadamard | combined")->required();
    bound->add_option("param", bound_param, "delta, delta1 or Delta")->required();

    int validate_max_n = kValidateMaxQubits;
    std::size_t validate_trials = 25;
    std::uint64_t validate_seed = 1;
    auto *validate_cmd = app.add_subcommand("validate", "Cross-check reduced model against the full simulator");
    validate_cmd->add_option("--max-n", validate_max_n, "Largest qubit count (<= 12)");
    validate_cmd->add_option("--trials", validate_trials, "Random configurations");
    validate_cmd->add_option("--seed", validate_seed, "Random seed (u64)");

    CommonOptions sweep_opts;
    SweepFlags flags;
    auto *sweep = app.add_subcommand("sweep", "Monte Carlo sweep over n, written as CSV");
    add_common(sweep, sweep_opts);
    sweep->add_option("--out", sweep_opts.out, "Output CSV path (default stdout)");
    sweep->add_flag("--em1", flags.em1, "Constant mismatch delta0");
    sweep->add_flag("--em2", flags.em2, "Gaussian mismatch, mean 0, std s");
    sweep->add_flag("--em3", flags.em3, "Gaussian mismatch, mean delta0, std s");
    sweep->add_flag("--hadamard", flags.hsys, "Systematic Hadamard offset epsilon on every qubit");
    sweep->add_flag("--leak", flags.leak, "Hadamard leakage delta1");
    sweep->add_option("--delta0", flags.delta0, "Mean mismatch (radians)");
    sweep->add_option("--s", flags.s, "Mismatch standard deviation (radians)");
    sweep->add_option("--epsilon", flags.epsilon, "Hadamard angle offset (radians)");
    sweep->add_option("--delta1", flags.delta1, "Leakage per iteration");
    sweep->add_option("--j-cap", flags.j_cap, "Iterations scanned, in units of ceil(pi/4 sqrt(N))");
    sweep->add_option("--marked", flags.marked, "Marked basis index (default 2^n - 1)");

    std::vector<std::string> argv_rev(args.rbegin(), args.rend());
    try {
        app.parse(argv_rev);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (*figure) {
            return cmd_figure(figure_which, figure_opts, out, err);
        }
        if (*bound) {
            return cmd_bound(bound_kind, bound_param, out);
        }
        if (*validate_cmd) {
            return cmd_validate(validate_max_n, validate_trials, validate_seed, out, err);
        }
        return cmd_sweep(flags, sweep_opts, out);
    } catch (const UsageError &e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ConfigError &e) {
        err << "configuration error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
}

}  // namespace gnoise::cli
