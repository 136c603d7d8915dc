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

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "grovernoise/error_models.hpp"

namespace gnoise::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Parameters of one preset figure: one curve per error model.
struct FigurePreset {
    int figure;
    std::string caption;
    std::vector<ErrorModel> curves;
    std::size_t default_samples;
};

const std::vector<FigurePreset> &figure_presets();

/// Parses "a..b", "a,b,c" or "a" into a strictly increasing list.
std::vector<int> parse_n_range(const std::string &text);

/// Runs one command line (args excludes the program name). Data goes to `out`,
/// diagnostics to `err`. Returns the process exit status.
int run(std::span<const std::string> args, std::ostream &out, std::ostream &err);

}  // namespace gnoise::cli
