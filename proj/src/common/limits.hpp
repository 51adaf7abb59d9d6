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

#include <cstddef>

namespace qelm {

/// Global cap on Hilbert-space dimensions. Defaults to 2^16 and can be
/// overridden with the QELM_MAX_DIM environment variable (read once).
std::size_t max_dimension();

/// Programmatic override, mainly for tests.
void set_max_dimension(std::size_t dim);

/// Throws SizeLimitError if dim exceeds the cap. `what` names the object
/// being built so resource errors point at the offending configuration.
void check_dimension(std::size_t dim, const char* what);

/// Number of worker threads for sample-level parallelism. Defaults to the
/// hardware concurrency, capped by the QELM_THREADS environment variable.
int worker_threads();

} // namespace qelm
