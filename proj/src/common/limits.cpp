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

#include "common/limits.hpp"

#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>

#include "common/errors.hpp"

namespace qelm {

namespace {

std::size_t initial_max_dimension() {
    if (const char* env = std::getenv("QELM_MAX_DIM")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && v > 0) {
            return static_cast<std::size_t>(v);
        }
    }
    return std::size_t{1} << 16;
}

std::atomic<std::size_t>& max_dim_storage() {
    static std::atomic<std::size_t> value{initial_max_dimension()};
    return value;
}

} // namespace

std::size_t max_dimension() { return max_dim_storage().load(); }

void set_max_dimension(std::size_t dim) { max_dim_storage().store(dim); }

void check_dimension(std::size_t dim, const char* what) {
    if (dim == 0 || dim > max_dimension()) {
        throw SizeLimitError(std::string(what) + ": dimension " + std::to_string(dim) +
                             " exceeds the cap of " + std::to_string(max_dimension()) +
                             " (override with QELM_MAX_DIM)");
    }
}

int worker_threads() {
    int n = static_cast<int>(std::thread::hardware_concurrency());
    if (n <= 0) n = 1;
    if (const char* env = std::getenv("QELM_THREADS")) {
        const int cap = std::atoi(env);
        if (cap > 0 && cap < n) n = cap;
    }
    return n;
}

} // namespace qelm
