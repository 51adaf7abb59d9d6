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

#include "runner/runner.hpp"

#include <cmath>

#include "common/errors.hpp"

namespace qelm {

namespace {

std::string int_cell(std::int64_t v) { return std::to_string(v); }

std::string uint_cell(std::uint64_t v, bool exact) {
    // Grid cells whose exact integer value exceeds 64 bits are left empty;
    // the qubit-count columns stay valid.
    return exact ? std::to_string(v) : std::string{};
}

} // namespace

Table results_table(const std::vector<ResultRow>& rows) {
    using CT = Table::CellType;
    Table table({{"preset", CT::String},
                 {"architecture", CT::String},
                 {"n", CT::Integer},
                 {"input_qubits", CT::Integer},
                 {"reservoir_qubits", CT::Integer},
                 {"pvm_outcomes", CT::Integer},
                 {"target_label", CT::String},
                 {"nmse_mean", CT::Float},
                 {"nmse_std", CT::Float},
                 {"n_runs", CT::Integer},
                 {"n_samples", CT::Integer},
                 {"master_seed", CT::Integer},
                 {"wall_time_seconds", CT::Float}});
    for (const ResultRow& r : rows) {
        table.add_row({r.preset, r.architecture, int_cell(r.n), int_cell(r.input_qubits),
                       int_cell(r.reservoir_qubits), std::to_string(r.pvm_outcomes),
                       r.target_label, Table::format_double(r.nmse_mean),
                       Table::format_double(r.nmse_std), int_cell(r.n_runs),
                       int_cell(r.n_samples), std::to_string(r.master_seed),
                       Table::format_double(r.wall_time_seconds)});
    }
    return table;
}

Table bounds_table(const std::vector<ResourceReport>& rows) {
    using CT = Table::CellType;
    Table table({{"architecture", CT::String},
                 {"input_qubits", CT::Integer},
                 {"n", CT::Integer},
                 {"min_reservoir_dim", CT::Integer},
                 {"min_reservoir_qubits", CT::Integer},
                 {"total_qubits", CT::Integer},
                 {"pvm_outcomes", CT::Integer}});
    for (const ResourceReport& r : rows) {
        table.add_row({to_string(r.kind), int_cell(r.input_qubits), int_cell(r.n),
                       uint_cell(r.min_reservoir_dim, r.dim_exact),
                       int_cell(r.min_reservoir_qubits), int_cell(r.total_qubits),
                       uint_cell(r.pvm_outcomes, r.outcomes_exact)});
    }
    return table;
}

int scaled_runs(int base_runs, double desk_scale) {
    return std::max(1, static_cast<int>(std::floor(base_runs * desk_scale)));
}

int scaled_samples(int base_samples, double desk_scale, Eigen::Index feature_len) {
    const int scaled = static_cast<int>(std::floor(base_samples * desk_scale));
    return std::max(scaled, static_cast<int>(feature_len) + 1);
}

// Runs the configured experiment and emits the rows to the configured sink
// (stdout when no path is set). The table is also returned for the C API.
Table run_config(const ExperimentConfig& config) {
    RunOverrides overrides;
    overrides.master_seed = config.master_seed;
    overrides.desk_scale = config.desk_scale;
    overrides.big_compute = config.big_compute;
    overrides.n_runs = config.n_runs_override;
    overrides.n_samples = config.n_samples_override;
    if (config.preset) {
        Table table = run_preset(*config.preset, overrides);
        table.write(config.out, config.format);
        return table;
    }
    if (!config.explicit_config) {
        throw UsageError("config carries neither a preset nor an explicit block");
    }
    const ExplicitConfig& ec = *config.explicit_config;
    const int runs = scaled_runs(ec.n_runs, config.desk_scale);
    const int samples =
        scaled_samples(ec.n_samples, config.desk_scale, feature_length(ec.arch));
    ExperimentOptions options;
    options.regularization = ec.regularization;
    const ExperimentSummary summary = run_experiment(ec.arch, ec.targets, samples, runs,
                                                     config.master_seed, options);
    std::vector<ResultRow> rows;
    for (const auto& t : summary.per_target) {
        ResultRow row;
        row.preset = "custom";
        row.architecture = to_string(ec.arch.kind);
        row.n = ec.arch.n;
        row.input_qubits = ec.arch.input_qubits;
        row.reservoir_qubits = ec.arch.reservoir_qubits;
        row.pvm_outcomes = static_cast<std::uint64_t>(feature_length(ec.arch));
        row.target_label = t.label;
        row.nmse_mean = t.nmse_mean;
        row.nmse_std = t.nmse_std;
        row.n_runs = runs;
        row.n_samples = samples;
        row.master_seed = config.master_seed;
        row.wall_time_seconds = summary.wall_seconds;
        rows.push_back(std::move(row));
    }
    Table table = results_table(rows);
    table.write(config.out, config.format);
    return table;
}

} // namespace qelm
