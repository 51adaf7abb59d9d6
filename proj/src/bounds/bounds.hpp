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
#include <vector>

#include "architectures/kind.hpp"

namespace qelm {

/// Minimum resources an architecture needs for informationally complete
/// reconstruction, under computational-basis PVMs.
///
/// Bounds are stated on Hilbert-space dimension; hardware rounds the ceiled
/// dimension up to full qubits, which reproduces the staircase plots and the
/// deliberate overallocation of uniform reservoir sizes. For grid cells whose
/// exact integer values exceed 64 bits, `dim_exact` / `outcomes_exact` are
/// false, the corresponding field is 0, and the qubit counts (computed in log
/// space) remain valid.
struct ResourceReport {
    ArchKind kind = ArchKind::S3L;
    int input_qubits = 0;
    int n = 1; // units for SM/D, injections for MI, 1 for S3L
    std::uint64_t min_reservoir_dim = 1;
    bool dim_exact = true;
    int min_reservoir_qubits = 0;
    int total_qubits = 0;
    std::uint64_t pvm_outcomes = 0;
    bool outcomes_exact = true;
    int measured_qubits = 0;   // qubits per measured block
    int measured_blocks = 1;   // 1 except for SM, where each unit is a block
};

/// d_sn = C(s^2 - 1 + n, n): the dimension of the space of operators on the
/// symmetric subspace of n copies of an s-dimensional input.
/// Throws SizeLimitError when the exact value does not fit in 64 bits.
std::uint64_t sym_dim(std::uint64_t s, std::uint64_t n);

/// log2 of d_sn, valid far beyond the 64-bit range.
double sym_dim_log2(std::uint64_t s, std::uint64_t n);

/// dim(H_R) >= dim(H_S); s must be a power of 2.
ResourceReport s3l_bound(std::uint64_t s);

/// dim(H_R) >= (s + (n-1)/s) / n per reservoir, n equal units.
ResourceReport sm_bound(std::uint64_t s, int n);

/// dim(H_R) >= d_sn / s, one reservoir re-used for n injections.
ResourceReport mi_bound(std::uint64_t s, int n);

/// dim(H_R) >= d_sn^(1/n) / s per reservoir, n entangled units.
ResourceReport d_bound(std::uint64_t s, int n);

/// Bound evaluated over a grid of input sizes (in qubits) and unit counts.
std::vector<ResourceReport> requirement_table(ArchKind kind, int input_qubits_lo,
                                              int input_qubits_hi, int n_lo, int n_hi);

} // namespace qelm
