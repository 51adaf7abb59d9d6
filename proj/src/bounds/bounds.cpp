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

#include "bounds/bounds.hpp"

#include <cmath>
#include <limits>
#include <optional>
#include <string>

#include "common/errors.hpp"

namespace qelm {

namespace {

bool is_power_of_two(std::uint64_t x) { return x != 0 && (x & (x - 1)) == 0; }

int qubits_for_dim(std::uint64_t dim) {
    int q = 0;
    while ((std::uint64_t{1} << q) < dim) ++q;
    return q;
}

std::optional<std::uint64_t> checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out)) return std::nullopt;
    return out;
}

// C(a, b) by the multiplicative formula; each intermediate C(a-b+i, i) is an
// integer, so multiply-then-divide stays exact. Uses 128-bit intermediates.
std::optional<std::uint64_t> try_binomial(std::uint64_t a, std::uint64_t b) {
    if (b > a) return 0;
    b = std::min(b, a - b);
    unsigned __int128 result = 1;
    for (std::uint64_t i = 1; i <= b; ++i) {
        result = result * (a - b + i);
        result /= i;
        if (result > std::numeric_limits<std::uint64_t>::max()) {
            // A later division can no longer bring this back into range for
            // the sizes we ever multiply by, so treat it as overflow.
            return std::nullopt;
        }
    }
    return static_cast<std::uint64_t>(result);
}

std::optional<std::uint64_t> try_sym_dim(std::uint64_t s, std::uint64_t n) {
    const auto s2 = checked_mul(s, s);
    if (!s2) return std::nullopt;
    return try_binomial(*s2 - 1 + n, n);
}

// Smallest m >= 1 with (m * s)^n >= d; equivalent to ceil(d^(1/n) / s).
std::uint64_t smallest_root_factor(std::uint64_t d, std::uint64_t s, int n) {
    auto power_reaches = [&](std::uint64_t m) {
        unsigned __int128 acc = 1;
        const unsigned __int128 base = static_cast<unsigned __int128>(m) * s;
        for (int i = 0; i < n; ++i) {
            acc *= base;
            if (acc >= d) return true;
        }
        return acc >= d;
    };
    std::uint64_t lo = 1, hi = 1;
    while (!power_reaches(hi)) hi *= 2;
    while (lo < hi) {
        const std::uint64_t mid = lo + (hi - lo) / 2;
        if (power_reaches(mid)) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    return lo;
}

void require_power_of_two_input(std::uint64_t s, const char* who) {
    if (s < 2 || !is_power_of_two(s)) {
        throw ContractError(std::string(who) + ": input dimension must be a power of 2, got " +
                            std::to_string(s));
    }
}

void fill_outcomes(ResourceReport& r) {
    if (r.measured_qubits < 63) {
        const std::uint64_t per_block = std::uint64_t{1} << r.measured_qubits;
        if (const auto total = checked_mul(per_block, static_cast<std::uint64_t>(r.measured_blocks))) {
            r.pvm_outcomes = *total;
            r.outcomes_exact = true;
            return;
        }
    }
    r.pvm_outcomes = 0;
    r.outcomes_exact = false;
}

} // namespace

std::uint64_t sym_dim(std::uint64_t s, std::uint64_t n) {
    if (s < 2) throw ContractError("sym_dim: s must be >= 2");
    if (n < 1) throw ContractError("sym_dim: n must be >= 1");
    const auto value = try_sym_dim(s, n);
    if (!value) {
        throw SizeLimitError("sym_dim(" + std::to_string(s) + ", " + std::to_string(n) +
                             ") exceeds the 64-bit integer range");
    }
    return *value;
}

double sym_dim_log2(std::uint64_t s, std::uint64_t n) {
    const double a = static_cast<double>(s) * static_cast<double>(s) - 1.0 +
                     static_cast<double>(n);
    const double b = static_cast<double>(n);
    return (std::lgamma(a + 1.0) - std::lgamma(b + 1.0) - std::lgamma(a - b + 1.0)) /
           std::log(2.0);
}

ResourceReport s3l_bound(std::uint64_t s) {
    require_power_of_two_input(s, "s3l_bound");
    ResourceReport r;
    r.kind = ArchKind::S3L;
    r.input_qubits = qubits_for_dim(s);
    r.n = 1;
    r.min_reservoir_dim = s;
    r.min_reservoir_qubits = qubits_for_dim(s);
    r.total_qubits = r.input_qubits + r.min_reservoir_qubits;
    r.measured_qubits = r.input_qubits + r.min_reservoir_qubits;
    r.measured_blocks = 1;
    fill_outcomes(r);
    return r;
}

ResourceReport sm_bound(std::uint64_t s, int n) {
    require_power_of_two_input(s, "sm_bound");
    if (n < 1) throw ContractError("sm_bound: n must be >= 1");
    ResourceReport r;
    r.kind = ArchKind::SM;
    r.input_qubits = qubits_for_dim(s);
    r.n = n;
    // ceil((s + (n-1)/s) / n) = ceil((s^2 + n - 1) / (n s)), all in integers.
    const std::uint64_t numerator = s * s + static_cast<std::uint64_t>(n) - 1;
    const std::uint64_t denominator = static_cast<std::uint64_t>(n) * s;
    r.min_reservoir_dim = (numerator + denominator - 1) / denominator;
    r.min_reservoir_qubits = qubits_for_dim(r.min_reservoir_dim);
    r.total_qubits = n * (r.input_qubits + r.min_reservoir_qubits);
    r.measured_qubits = r.input_qubits + r.min_reservoir_qubits;
    r.measured_blocks = n;
    fill_outcomes(r);
    return r;
}

ResourceReport mi_bound(std::uint64_t s, int n) {
    require_power_of_two_input(s, "mi_bound");
    if (n < 1) throw ContractError("mi_bound: n must be >= 1");
    ResourceReport r;
    r.kind = ArchKind::MI;
    r.input_qubits = qubits_for_dim(s);
    r.n = n;
    if (const auto d = try_sym_dim(s, static_cast<std::uint64_t>(n))) {
        r.min_reservoir_dim = (*d + s - 1) / s;
        r.dim_exact = true;
        r.min_reservoir_qubits = qubits_for_dim(r.min_reservoir_dim);
    } else {
        // Exact d_sn no longer fits; the qubit count only needs log2(d_sn).
        // lgamma is accurate to ~1e-13 relative, far from any ceiling
        // boundary these binomials produce.
        const double excess = sym_dim_log2(s, static_cast<std::uint64_t>(n)) -
                              std::log2(static_cast<double>(s));
        r.min_reservoir_dim = 0;
        r.dim_exact = false;
        r.min_reservoir_qubits = static_cast<int>(std::ceil(excess - 1e-9));
    }
    r.total_qubits = r.input_qubits + r.min_reservoir_qubits;
    r.measured_qubits = r.input_qubits + r.min_reservoir_qubits;
    r.measured_blocks = 1;
    fill_outcomes(r);
    return r;
}

ResourceReport d_bound(std::uint64_t s, int n) {
    require_power_of_two_input(s, "d_bound");
    if (n < 1) throw ContractError("d_bound: n must be >= 1");
    ResourceReport r;
    r.kind = ArchKind::D;
    r.input_qubits = qubits_for_dim(s);
    r.n = n;
    if (const auto d = try_sym_dim(s, static_cast<std::uint64_t>(n))) {
        r.min_reservoir_dim = smallest_root_factor(*d, s, n);
        r.dim_exact = true;
    } else {
        const double root = sym_dim_log2(s, static_cast<std::uint64_t>(n)) / n -
                            std::log2(static_cast<double>(s));
        r.min_reservoir_dim =
            static_cast<std::uint64_t>(std::max(1.0, std::ceil(std::exp2(root) - 1e-9)));
        r.dim_exact = true; // the per-reservoir dimension itself is small
    }
    r.min_reservoir_qubits = qubits_for_dim(r.min_reservoir_dim);
    r.total_qubits = n * (r.input_qubits + r.min_reservoir_qubits);
    r.measured_qubits = n * (r.input_qubits + r.min_reservoir_qubits);
    r.measured_blocks = 1;
    fill_outcomes(r);
    return r;
}

std::vector<ResourceReport> requirement_table(ArchKind kind, int input_qubits_lo,
                                              int input_qubits_hi, int n_lo, int n_hi) {
    if (input_qubits_lo < 1 || input_qubits_hi < input_qubits_lo) {
        throw ContractError("requirement_table: bad input-qubit range");
    }
    if (n_lo < 1 || n_hi < n_lo) throw ContractError("requirement_table: bad n range");
    std::vector<ResourceReport> rows;
    for (int in_q = input_qubits_lo; in_q <= input_qubits_hi; ++in_q) {
        const std::uint64_t s = std::uint64_t{1} << in_q;
        for (int n = n_lo; n <= n_hi; ++n) {
            ResourceReport row;
            switch (kind) {
                case ArchKind::S3L:
                    row = s3l_bound(s);
                    row.n = n; // constant across n, kept for grid alignment
                    break;
                case ArchKind::SM: row = sm_bound(s, n); break;
                case ArchKind::MI: row = mi_bound(s, n); break;
                case ArchKind::D: row = d_bound(s, n); break;
            }
            rows.push_back(row);
        }
    }
    return rows;
}

} // namespace qelm
