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

// qelm: configuration-driven experiment runner over the C API.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include <qelm/qelm.h>

namespace {

int fail(qelm_status status) {
    std::cerr << "qelm: " << qelm_last_error() << "\n";
    return static_cast<int>(status);
}

bool parse_range(const std::string& text, int& lo, int& hi) {
    const auto sep = text.find("..");
    try {
        if (sep == std::string::npos) {
            lo = hi = std::stoi(text);
        } else {
            lo = std::stoi(text.substr(0, sep));
            hi = std::stoi(text.substr(sep + 2));
        }
    } catch (const std::exception&) {
        return false;
    }
    return true;
}

int write_and_free(qelm_table* table, const std::string& out, const std::string& format) {
    const qelm_status status =
        qelm_table_write(table, out.empty() ? nullptr : out.c_str(), format.c_str());
    qelm_table_free(table);
    return status == QELM_OK ? 0 : fail(status);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"qelm - quantum extreme learning machine experiment runner"};
    app.require_subcommand(1);

    // run
    auto* run = app.add_subcommand("run", "run a preset or a JSON config file");
    std::string preset, config_path, out, format = "csv";
    std::int64_t seed = -1, runs = -1, samples = -1;
    double desk_scale = 0.0;
    bool big_compute = false;
    auto* preset_opt = run->add_option("--preset", preset, "preset name (see list-presets)");
    auto* config_opt = run->add_option("--config", config_path, "JSON config file");
    preset_opt->excludes(config_opt);
    run->add_option("--seed", seed, "master seed (default 1)");
    run->add_option("--runs", runs, "number of independent runs");
    run->add_option("--samples", samples, "dataset size per run");
    run->add_option("--desk-scale", desk_scale, "scale runs and samples by this factor (0,1]");
    run->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    run->add_option("--out", out, "output path (default stdout)");
    run->add_flag("--big-compute", big_compute, "unlock configurations beyond desk scale");

    // bounds
    auto* bounds = app.add_subcommand("bounds", "emit resource-bound grids");
    std::string arch, input_range = "1..10", n_range = "1..10";
    std::string bounds_out, bounds_format = "csv";
    bounds->add_option("--arch", arch, "S3L, SM, MI or D")->required();
    bounds->add_option("--input-qubits", input_range, "input size or range, e.g. 2 or 1..10");
    bounds->add_option("--n", n_range, "unit/injection count or range, e.g. 2 or 1..10");
    bounds->add_option("--format", bounds_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    bounds->add_option("--out", bounds_out, "output path (default stdout)");

    auto* list = app.add_subcommand("list-presets", "list available presets");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    if (run->parsed()) {
        if (preset.empty() == config_path.empty()) {
            std::cerr << "qelm: run needs exactly one of --preset or --config\n";
            return 2;
        }
        if (!config_path.empty()) {
            // Config files are self-contained; they name their own sink.
            std::ifstream file(config_path);
            if (!file) {
                std::cerr << "qelm: cannot read config file '" << config_path << "'\n";
                return 4;
            }
            std::ostringstream text;
            text << file.rdbuf();
            qelm_table* table = nullptr;
            const qelm_status status = qelm_run_config_json(text.str().c_str(), &table);
            if (status != QELM_OK) return fail(status);
            qelm_table_free(table);
            return 0;
        }
        qelm_run_options options;
        qelm_run_options_init(&options);
        options.master_seed = seed;
        options.n_runs = runs;
        options.n_samples = samples;
        options.desk_scale = desk_scale;
        options.big_compute = big_compute ? 1 : 0;
        qelm_table* table = nullptr;
        const qelm_status status = qelm_run_preset(preset.c_str(), &options, &table);
        if (status != QELM_OK) return fail(status);
        return write_and_free(table, out, format);
    }

    if (bounds->parsed()) {
        int in_lo = 0, in_hi = 0, n_lo = 0, n_hi = 0;
        if (!parse_range(input_range, in_lo, in_hi) || !parse_range(n_range, n_lo, n_hi)) {
            std::cerr << "qelm: ranges must look like 3 or 1..10\n";
            return 2;
        }
        qelm_table* table = nullptr;
        const qelm_status status =
            qelm_bounds_grid(arch.c_str(), in_lo, in_hi, n_lo, n_hi, &table);
        if (status != QELM_OK) return fail(status);
        return write_and_free(table, bounds_out, bounds_format);
    }

    if (list->parsed()) {
        qelm_table* table = nullptr;
        const qelm_status status = qelm_list_presets(&table);
        if (status != QELM_OK) return fail(status);
        for (size_t row = 0; row < qelm_table_rows(table); ++row) {
            std::cout << qelm_table_cell(table, row, 0) << "\n    "
                      << qelm_table_cell(table, row, 1) << "\n";
        }
        qelm_table_free(table);
        return 0;
    }
    return 2;
}
