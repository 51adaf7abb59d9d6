// Copyright 2026 The qelm authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bounds/bounds.hpp"
#include "learn/learn.hpp"
#include "runner/table.hpp"

namespace qelm {

/// One emitted experiment result. Rows that carry dataset diagnostics
/// instead of a reconstruction error (the correlation table) reuse the
/// nmse_mean/nmse_std columns for the diagnostic mean and spread; the
/// target_label says which quantity the row holds.
struct ResultRow {
    std::string preset;
    std::string architecture;
    int n = 1;
    int input_qubits = 1;
    int reservoir_qubits = 1;
    std::uint64_t pvm_outcomes = 0;
    std::string target_label;
    double nmse_mean = 0.0;
    double nmse_std = 0.0;
    int n_runs = 0;
    int n_samples = 0;
    std::uint64_t master_seed = 0;
    double wall_time_seconds = 0.0;
};

Table results_table(const std::vector<ResultRow>& rows);
Table bounds_table(const std::vector<ResourceReport>& rows);

/// Command-line style overrides applied on top of a preset's defaults.
struct RunOverrides {
    std::optional<std::uint64_t> master_seed;
    std::optional<int> n_runs;
    std::optional<int> n_samples;
    std::optional<double> desk_scale;
    bool big_compute = false;
};

struct PresetInfo {
    std::string name;
    std::string description;
};

const std::vector<PresetInfo>& list_presets();

/// Runs a named preset and returns its rows (experiment presets produce the
/// ResultRow schema; the scaling presets produce the bounds schema).
Table run_preset(const std::string& name, const RunOverrides& overrides);

/// A fully explicit experiment composition.
struct ExplicitConfig {
    ArchitectureSpec arch;
    std::vector<TargetSpec> targets;
    int n_samples = 200;
    int n_runs = 100;
    std::optional<double> regularization;
};

/// Mirrors the JSON configuration file: exactly one of preset or explicit
/// block, plus seed/scale/output settings.
struct ExperimentConfig {
    std::optional<std::string> preset;
    std::optional<ExplicitConfig> explicit_config;
    std::uint64_t master_seed = 1;
    double desk_scale = 1.0;
    bool big_compute = false;
    std::optional<int> n_runs_override;
    std::optional<int> n_samples_override;
    std::string out;                        // empty -> stdout
    OutputFormat format = OutputFormat::Csv;
};

ExperimentConfig parse_config_json(const std::string& text);

Table run_config(const ExperimentConfig& config);

/// Scales runs by desk_scale (floored, at least one run). Sample counts are
/// scaled the same way but never drop below feature_length + 1.
int scaled_runs(int base_runs, double desk_scale);
int scaled_samples(int base_samples, double desk_scale, Eigen::Index feature_len);

} // namespace qelm
