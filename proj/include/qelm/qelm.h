/* Copyright 2026 The qelm authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the qelm simulation library.
 *
 * All entry points return a qelm_status; QELM_OK means success and anything
 * else leaves a message retrievable with qelm_last_error() (thread-local).
 * Result data comes back as an opaque qelm_table that the caller must free
 * with qelm_table_free. The environment variables QELM_MAX_DIM (global
 * Hilbert-space dimension cap, default 65536) and QELM_THREADS (worker
 * thread cap) are honored by every call.
 */

#ifndef QELM_QELM_H
#define QELM_QELM_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define QELM_API __declspec(dllexport)
#else
#define QELM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qelm_status {
    QELM_OK = 0,
    QELM_ERR_INTERNAL = 1, /* numeric failures and unexpected errors */
    QELM_ERR_USAGE = 2,    /* unknown preset, malformed config or arguments */
    QELM_ERR_RESOURCE = 3, /* a requested object exceeds the dimension cap */
    QELM_ERR_IO = 4        /* file could not be read or written */
} qelm_status;

/* Opaque result table: named, typed columns over preformatted cells. */
typedef struct qelm_table qelm_table;

/* Optional knobs for qelm_run_preset. Initialize with qelm_run_options_init;
 * negative numbers mean "use the preset default". */
typedef struct qelm_run_options {
    int64_t master_seed;  /* < 0: preset default (1) */
    int64_t n_runs;       /* < 0: preset default, scaled by desk_scale */
    int64_t n_samples;    /* < 0: preset default, scaled by desk_scale */
    double desk_scale;    /* <= 0: 1.0; otherwise must lie in (0, 1] */
    int big_compute;      /* nonzero unlocks the 16-qubit entanglement rows */
} qelm_run_options;

QELM_API void qelm_run_options_init(qelm_run_options* options);

QELM_API const char* qelm_version(void);

/* Message describing the most recent failure on this thread. */
QELM_API const char* qelm_last_error(void);

/* Runs a named preset. On success *out owns the result table. */
QELM_API qelm_status qelm_run_preset(const char* name, const qelm_run_options* options,
                                     qelm_table** out);

/* Runs an experiment described by a JSON configuration document. */
QELM_API qelm_status qelm_run_config_json(const char* json_text, qelm_table** out);

/* Resource-bound grid for one architecture kind ("S3L", "SM", "MI", "D"). */
QELM_API qelm_status qelm_bounds_grid(const char* arch_kind, int input_qubits_lo,
                                      int input_qubits_hi, int n_lo, int n_hi,
                                      qelm_table** out);

/* Table of (name, description) rows for every available preset. */
QELM_API qelm_status qelm_list_presets(qelm_table** out);

QELM_API size_t qelm_table_rows(const qelm_table* table);
QELM_API size_t qelm_table_cols(const qelm_table* table);

/* Column name, or NULL when the index is out of range. */
QELM_API const char* qelm_table_column_name(const qelm_table* table, size_t col);

/* Cell text (floats carry 17 significant digits), or NULL out of range.
 * The pointer stays valid until the table is freed. */
QELM_API const char* qelm_table_cell(const qelm_table* table, size_t row, size_t col);

/* Serializes the table; format is "csv" or "json", path NULL means stdout. */
QELM_API qelm_status qelm_table_write(const qelm_table* table, const char* path,
                                      const char* format);

QELM_API void qelm_table_free(qelm_table* table);

#ifdef __cplusplus
}
#endif

#endif /* QELM_QELM_H */
