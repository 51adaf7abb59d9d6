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

#include "dynamics/ising.hpp"

#include <cmath>
#include <string>

#include "common/errors.hpp"
#include "common/limits.hpp"

namespace qelm {

RealMatrix sample_couplings(int n_qubits, double j_scale, RandomSource& rng) {
    if (n_qubits < 1) throw ContractError("sample_couplings: n_qubits must be >= 1");
    if (j_scale < 0) throw ContractError("sample_couplings: j_scale must be >= 0");
    RealMatrix j = RealMatrix::Zero(n_qubits, n_qubits);
    for (int i = 0; i < n_qubits; ++i) {
        for (int k = i + 1; k < n_qubits; ++k) {
            const double value = rng.uniform(-j_scale, j_scale);
            j(i, k) = value;
            j(k, i) = value;
        }
    }
    return j;
}

HermitianObservable build_ising_hamiltonian(const IsingParams& p) {
    if (p.n_qubits < 1) throw ContractError("build_ising_hamiltonian: n_qubits must be >= 1");
    if (p.time < 0) throw ContractError("build_ising_hamiltonian: time must be >= 0");
    if (p.n_qubits > 1 &&
        (p.couplings.rows() != p.n_qubits || p.couplings.cols() != p.n_qubits)) {
        throw ContractError("build_ising_hamiltonian: coupling matrix size mismatch");
    }
    check_dimension(std::size_t{1} << p.n_qubits, "build_ising_hamiltonian");
    const Eigen::Index dim = Eigen::Index{1} << p.n_qubits;
    ComplexMatrix h = ComplexMatrix::Zero(dim, dim);
    // Assemble by basis index: qubit q occupies bit (n-1-q), so sx_i sx_j
    // couples b to b ^ mask and sz contributes the spin signs on the
    // diagonal. Equivalent to summing pauli_string terms, without the
    // intermediate Kronecker products.
    for (Eigen::Index b = 0; b < dim; ++b) {
        double diag = 0.0;
        for (int q = 0; q < p.n_qubits; ++q) {
            const bool set = (b >> (p.n_qubits - 1 - q)) & 1;
            diag += set ? -p.field : p.field;
        }
        h(b, b) = diag;
    }
    for (int i = 0; i < p.n_qubits; ++i) {
        for (int j = 0; j < i; ++j) {
            const double coupling = 0.5 * p.couplings(i, j);
            if (coupling == 0.0) continue;
            const Eigen::Index mask = (Eigen::Index{1} << (p.n_qubits - 1 - i)) |
                                      (Eigen::Index{1} << (p.n_qubits - 1 - j));
            for (Eigen::Index b = 0; b < dim; ++b) h(b ^ mask, b) += coupling;
        }
    }
    return HermitianObservable{std::move(h)};
}

UnitaryChannel channel_from_ising(const IsingParams& p) {
    const HermitianObservable h = build_ising_hamiltonian(p);
    const Eigen::Index dim = h.dim();
    if (p.n_qubits < 8) return UnitaryChannel{expm_hermitian(h.mat, p.time)};
    // The coupling terms flip two bits and the field is diagonal, so H
    // conserves the sz-string parity and splits into two half-size blocks.
    std::vector<Eigen::Index> sector[2];
    for (Eigen::Index b = 0; b < dim; ++b) {
        sector[__builtin_popcountll(static_cast<unsigned long long>(b)) & 1].push_back(b);
    }
    ComplexMatrix u = ComplexMatrix::Zero(dim, dim);
    for (const auto& idx : sector) {
        const Eigen::Index size = static_cast<Eigen::Index>(idx.size());
        ComplexMatrix block(size, size);
        for (Eigen::Index j = 0; j < size; ++j)
            for (Eigen::Index i = 0; i < size; ++i)
                block(i, j) = h.mat(idx[static_cast<std::size_t>(i)],
                                    idx[static_cast<std::size_t>(j)]);
        const ComplexMatrix u_block = expm_hermitian(block, p.time);
        for (Eigen::Index j = 0; j < size; ++j)
            for (Eigen::Index i = 0; i < size; ++i)
                u(idx[static_cast<std::size_t>(i)], idx[static_cast<std::size_t>(j)]) =
                    u_block(i, j);
    }
    return UnitaryChannel{std::move(u)};
}

UnitaryChannel sample_ising_channel(int n_qubits, const DynamicsProfile& profile,
                                    RandomSource& rng) {
    IsingParams params;
    params.n_qubits = n_qubits;
    params.couplings = sample_couplings(n_qubits, profile.j_scale, rng);
    params.field = profile.field;
    params.time = profile.time;
    return channel_from_ising(params);
}

DensityMatrix apply_channel(const UnitaryChannel& c, const DensityMatrix& rho) {
    if (c.dim() != rho.dim()) throw ContractError("apply_channel: dimension mismatch");
    return DensityMatrix::unchecked(c.u * rho.mat * c.u.adjoint());
}

UnitaryChannel build_entangling_map(const std::vector<int>& unit_dims,
                                    const DynamicsProfile& profile, RandomSource& rng) {
    if (unit_dims.empty()) throw ContractError("build_entangling_map: no units");
    int total_qubits = 0;
    std::size_t total_dim = 1;
    for (int d : unit_dims) {
        if (d < 1 || (d & (d - 1)) != 0) {
            throw ContractError("build_entangling_map: unit dimension must be a power of 2");
        }
        int q = 0;
        while ((1 << q) < d) ++q;
        total_qubits += q;
        total_dim *= static_cast<std::size_t>(d);
    }
    check_dimension(total_dim, "build_entangling_map");
    IsingParams params;
    params.n_qubits = total_qubits;
    params.couplings = sample_couplings(total_qubits, profile.j_scale, rng);
    params.field = profile.field;
    params.time = profile.time;
    return channel_from_ising(params);
}

} // namespace qelm
