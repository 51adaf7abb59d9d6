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

#include "qelm/qelm.h"

#include <string>
#include <utility>

#include "common/errors.hpp"
#include "runner/runner.hpp"

#ifdef QELM_HAVE_OPENBLAS
extern "C" void openblas_set_num_threads(int);
#endif

struct qelm_table {
    qelm::Table table;
};

namespace {

thread_local std::string g_last_error;

// BLAS kernels stay single-threaded; parallelism lives at the sample level
// where it cannot change results.
void init_backend() {
#ifdef QELM_HAVE_OPENBLAS
    static const bool once = [] {
        openblas_set_num_threads(1);
        return true;
    }();
    (void)once;
#endif
}

qelm_status status_for(const std::exception& e) {
    if (dynamic_cast<const qelm::UsageError*>(&e)) return QELM_ERR_USAGE;
    if (dynamic_cast<const qelm::SizeLimitError*>(&e)) return QELM_ERR_RESOURCE;
    if (dynamic_cast<const qelm::IoError*>(&e)) return QELM_ERR_IO;
    return QELM_ERR_INTERNAL;
}

template <typename Fn>
qelm_status guarded(qelm_table** out, Fn&& fn) {
    if (out == nullptr) {
        g_last_error = "output table pointer is null";
        return QELM_ERR_USAGE;
    }
    *out = nullptr;
    init_backend();
    try {
        *out = new qelm_table{fn()};
        return QELM_OK;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return status_for(e);
    } catch (...) {
        g_last_error = "unknown error";
        return QELM_ERR_INTERNAL;
    }
}

qelm::RunOverrides overrides_from(const qelm_run_options* options) {
    qelm::RunOverrides o;
    if (options == nullptr) return o;
    if (options->master_seed >= 0) {
        o.master_seed = static_cast<std::uint64_t>(options->master_seed);
    }
    if (options->n_runs >= 0) o.n_runs = static_cast<int>(options->n_runs);
    if (options->n_samples >= 0) o.n_samples = static_cast<int>(options->n_samples);
    if (options->desk_scale > 0.0) o.desk_scale = options->desk_scale;
    o.big_compute = options->big_compute != 0;
    return o;
}

} // namespace

extern "C" {

void qelm_run_options_init(qelm_run_options* options) {
    if (options == nullptr) return;
    options->master_seed = -1;
    options->n_runs = -1;
    options->n_samples = -1;
    options->desk_scale = 0.0;
    options->big_compute = 0;
}

const char* qelm_version(void) { return "0.1.0"; }

const char* qelm_last_error(void) { return g_last_error.c_str(); }

qelm_status qelm_run_preset(const char* name, const qelm_run_options* options,
                            qelm_table** out) {
    if (name == nullptr) {
        g_last_error = "preset name is null";
        return QELM_ERR_USAGE;
    }
    return guarded(out, [&] { return qelm::run_preset(name, overrides_from(options)); });
}

qelm_status qelm_run_config_json(const char* json_text, qelm_table** out) {
    if (json_text == nullptr) {
        g_last_error = "config text is null";
        return QELM_ERR_USAGE;
    }
    return guarded(out, [&] { return qelm::run_config(qelm::parse_config_json(json_text)); });
}

qelm_status qelm_bounds_grid(const char* arch_kind, int input_qubits_lo, int input_qubits_hi,
                             int n_lo, int n_hi, qelm_table** out) {
    if (arch_kind == nullptr) {
        g_last_error = "architecture kind is null";
        return QELM_ERR_USAGE;
    }
    return guarded(out, [&] {
        const qelm::ArchKind kind = qelm::arch_kind_from_string(arch_kind);
        return qelm::bounds_table(
            qelm::requirement_table(kind, input_qubits_lo, input_qubits_hi, n_lo, n_hi));
    });
}

qelm_status qelm_list_presets(qelm_table** out) {
    return guarded(out, [] {
        qelm::Table table({{"name", qelm::Table::CellType::String},
                           {"description", qelm::Table::CellType::String}});
        for (const auto& info : qelm::list_presets()) {
            table.add_row({info.name, info.description});
        }
        return table;
    });
}

size_t qelm_table_rows(const qelm_table* table) {
    return table == nullptr ? 0 : table->table.row_count();
}

size_t qelm_table_cols(const qelm_table* table) {
    return table == nullptr ? 0 : table->table.columns().size();
}

const char* qelm_table_column_name(const qelm_table* table, size_t col) {
    if (table == nullptr || col >= table->table.columns().size()) return nullptr;
    return table->table.columns()[col].name.c_str();
}

const char* qelm_table_cell(const qelm_table* table, size_t row, size_t col) {
    if (table == nullptr || row >= table->table.row_count() ||
        col >= table->table.columns().size()) {
        return nullptr;
    }
    return table->table.cell(row, col).c_str();
}

qelm_status qelm_table_write(const qelm_table* table, const char* path, const char* format) {
    if (table == nullptr) {
        g_last_error = "table is null";
        return QELM_ERR_USAGE;
    }
    try {
        const qelm::OutputFormat fmt =
            qelm::output_format_from_string(format == nullptr ? "csv" : format);
        table->table.write(path == nullptr ? std::string{} : std::string(path), fmt);
        return QELM_OK;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return status_for(e);
    }
}

void qelm_table_free(qelm_table* table) { delete table; }

} // extern "C"
