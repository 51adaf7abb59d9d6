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

#include "architectures/architecture.hpp"

#include <string>

#include "bounds/bounds.hpp"
#include "common/errors.hpp"
#include "common/limits.hpp"
#include "common/parallel.hpp"

namespace qelm {

namespace {

// Joint dimension above which the expanded (polynomial-coefficient) route
// pays for its probe evaluations, and the largest symmetric-subspace
// dimension we are willing to probe.
constexpr Eigen::Index kExpandDimThreshold = 2048;
constexpr std::uint64_t kExpandSymLimit = 4096;
constexpr int kExpandExtraProbes = 32;

Eigen::Index joint_dim(const ArchitectureSpec& spec) {
    Eigen::Index d = 1;
    for (int i = 0; i < (spec.kind == ArchKind::D ? spec.n : 1); ++i) d *= spec.unit_dim();
    return d;
}

// M <- (H^(x)qubits) * M without forming the Hadamard product matrix.
void left_hadamard_all_inplace(ComplexMatrix& m, int qubits) {
    static const ComplexMatrix h =
        (ComplexMatrix(2, 2) << 1, 1, 1, -1).finished() / std::sqrt(2.0);
    ComplexMatrix t = m.transpose();
    std::vector<const ComplexMatrix*> blocks(static_cast<std::size_t>(qubits), &h);
    std::vector<int> dims(static_cast<std::size_t>(qubits), 2);
    right_kron_apply_inplace(t, blocks, dims); // H is symmetric
    m = t.transpose();
}

// Column permutation taking the inputs-first layout (x_1..x_n, e_1..e_n) to
// the physical unit-interleaved layout (x_1, e_1, x_2, e_2, ...).
std::vector<Eigen::Index> grouped_to_interleaved(int n, Eigen::Index s, Eigen::Index r) {
    const Eigen::Index u = s * r;
    Eigen::Index total = 1;
    for (int i = 0; i < n; ++i) total *= u;
    std::vector<Eigen::Index> map(static_cast<std::size_t>(total));
    std::vector<Eigen::Index> x(static_cast<std::size_t>(n)), e(static_cast<std::size_t>(n));
    for (Eigen::Index g = 0; g < total; ++g) {
        Eigen::Index rest = g;
        for (int i = n - 1; i >= 0; --i) {
            e[static_cast<std::size_t>(i)] = rest % r;
            rest /= r;
        }
        for (int i = n - 1; i >= 0; --i) {
            x[static_cast<std::size_t>(i)] = rest % s;
            rest /= s;
        }
        Eigen::Index inter = 0;
        for (int i = 0; i < n; ++i) {
            inter = inter * u + x[static_cast<std::size_t>(i)] * r + e[static_cast<std::size_t>(i)];
        }
        map[static_cast<std::size_t>(g)] = inter;
    }
    return map;
}

std::vector<std::string> pauli_basis_strings(int qubits) {
    static const char letters[4] = {'I', 'X', 'Y', 'Z'};
    const std::size_t count = std::size_t{1} << (2 * qubits);
    std::vector<std::string> out;
    out.reserve(count);
    for (std::size_t idx = 0; idx < count; ++idx) {
        std::string s(static_cast<std::size_t>(qubits), 'I');
        std::size_t rest = idx;
        for (int q = qubits - 1; q >= 0; --q) {
            s[static_cast<std::size_t>(q)] = letters[rest % 4];
            rest /= 4;
        }
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<std::vector<int>> multisets(int symbols, int size) {
    std::vector<std::vector<int>> out;
    std::vector<int> current(static_cast<std::size_t>(size), 0);
    while (true) {
        out.push_back(current);
        int pos = size - 1;
        while (pos >= 0 && current[static_cast<std::size_t>(pos)] == symbols - 1) --pos;
        if (pos < 0) break;
        const int next = current[static_cast<std::size_t>(pos)] + 1;
        for (int i = pos; i < size; ++i) current[static_cast<std::size_t>(i)] = next;
    }
    return out;
}

RealVector pauli_coefficients(const PreparedArchitecture& arch, const ComplexMatrix& rho) {
    RealVector c(static_cast<Eigen::Index>(arch.coeff_basis.size()));
    for (std::size_t i = 0; i < arch.coeff_basis.size(); ++i) {
        c(static_cast<Eigen::Index>(i)) =
            arch.coeff_basis[i].transpose().cwiseProduct(rho).sum().real();
    }
    return c;
}

RealVector monomial_vector(const PreparedArchitecture& arch, const RealVector& c) {
    RealVector m(static_cast<Eigen::Index>(arch.monomials.size()));
    for (std::size_t i = 0; i < arch.monomials.size(); ++i) {
        double prod = 1.0;
        for (int idx : arch.monomials[i]) prod *= c(idx);
        m(static_cast<Eigen::Index>(i)) = prod;
    }
    return m;
}

void build_expanded_route(PreparedArchitecture& arch) {
    const Eigen::Index s = arch.spec.input_dim();
    const std::uint64_t d_sn = sym_dim(static_cast<std::uint64_t>(s),
                                       static_cast<std::uint64_t>(arch.spec.n));
    if (d_sn > kExpandSymLimit) {
        throw SizeLimitError("distributed feature expansion: d_sn = " + std::to_string(d_sn) +
                             " exceeds the probe limit");
    }
    arch.coeff_basis.clear();
    for (const std::string& letters : pauli_basis_strings(arch.spec.input_qubits)) {
        arch.coeff_basis.push_back(pauli_string(letters));
    }
    arch.monomials = multisets(static_cast<int>(arch.coeff_basis.size()), arch.spec.n);

    const int n_probes = static_cast<int>(d_sn) + kExpandExtraProbes;
    RandomSource probe_rng = arch.aux_stream.derive(1);
    std::vector<DensityMatrix> probes;
    probes.reserve(static_cast<std::size_t>(n_probes));
    for (int i = 0; i < n_probes; ++i) {
        probes.push_back(random_density_matrix(static_cast<int>(s), probe_rng));
    }

    const Eigen::Index p = feature_length(arch.spec);
    RealMatrix probe_features(p, n_probes);
    RealMatrix probe_monomials(static_cast<Eigen::Index>(arch.monomials.size()), n_probes);
    parallel_for(static_cast<std::size_t>(n_probes), [&](std::size_t i) {
        const auto col = static_cast<Eigen::Index>(i);
        probe_features.col(col) = features_d(arch, probes[i]).values;
        probe_monomials.col(col) = monomial_vector(arch, pauli_coefficients(arch, probes[i].mat));
    });

    // probabilities(rho) = A * monomials(rho): least-squares fit of A over the
    // probe set, exact because the probabilities are degree-n polynomials.
    Eigen::ColPivHouseholderQR<RealMatrix> qr(probe_monomials.transpose());
    arch.poly_coeffs = qr.solve(probe_features.transpose()).transpose();
    arch.strategy = FeatureStrategy::Expanded;
}

FeatureVector unit_block_features(const PreparedArchitecture& arch, int unit,
                                  const DensityMatrix& rho) {
    const int s = static_cast<int>(arch.spec.input_dim());
    const int r = static_cast<int>(arch.spec.reservoir_dim());
    const std::size_t u = static_cast<std::size_t>(unit);
    RealVector values = diag_sandwich(arch.measure_ops[u],
                                      {&rho.mat, &arch.reservoir_states[u].mat}, {s, r});
    return FeatureVector{std::move(values), 1};
}

} // namespace

void validate_spec(const ArchitectureSpec& spec) {
    if (spec.n < 1) throw ContractError("architecture: n must be >= 1");
    if (spec.kind == ArchKind::S3L && spec.n != 1) {
        throw ContractError("architecture: S3L requires n = 1");
    }
    if (spec.input_qubits < 1) throw ContractError("architecture: input_qubits must be >= 1");
    if (spec.reservoir_qubits < 0) {
        throw ContractError("architecture: reservoir_qubits must be >= 0");
    }
    if (spec.dynamics.j_scale < 0) throw ContractError("architecture: j_scale must be >= 0");
    if (spec.dynamics.time < 0) throw ContractError("architecture: time must be >= 0");
    check_dimension(static_cast<std::size_t>(spec.unit_dim()), "architecture unit");
    std::size_t joint = 1;
    for (int i = 0; i < (spec.kind == ArchKind::D ? spec.n : 1); ++i) {
        joint *= static_cast<std::size_t>(spec.unit_dim());
        check_dimension(joint, "architecture joint space");
    }
}

Eigen::Index feature_length(const ArchitectureSpec& spec) {
    switch (spec.kind) {
        case ArchKind::S3L:
        case ArchKind::MI: return spec.unit_dim();
        case ArchKind::SM: return spec.n * spec.unit_dim();
        case ArchKind::D: return joint_dim(spec);
    }
    throw ContractError("feature_length: unknown kind");
}

PreparedArchitecture prepare_from_parts(const ArchitectureSpec& spec,
                                        std::vector<UnitaryChannel> channels,
                                        std::vector<DensityMatrix> reservoirs,
                                        std::optional<UnitaryChannel> entangler,
                                        RandomSource aux, FeatureStrategy strategy) {
    validate_spec(spec);
    const Eigen::Index u = spec.unit_dim();
    const std::size_t parts = (spec.kind == ArchKind::SM || spec.kind == ArchKind::D)
                                  ? static_cast<std::size_t>(spec.n)
                                  : 1;
    if (channels.size() != parts || reservoirs.size() != parts) {
        throw ContractError("prepare_from_parts: wrong number of channels or reservoirs");
    }
    for (const auto& c : channels) {
        if (c.dim() != u) throw ContractError("prepare_from_parts: channel dimension mismatch");
    }
    for (const auto& eta : reservoirs) {
        if (eta.dim() != spec.reservoir_dim()) {
            throw ContractError("prepare_from_parts: reservoir dimension mismatch");
        }
    }

    PreparedArchitecture arch;
    arch.spec = spec;
    arch.unit_channels = std::move(channels);
    arch.entangler = std::move(entangler);
    arch.reservoir_states = std::move(reservoirs);
    arch.aux_stream = aux;

    const int unit_qubits = spec.input_qubits + spec.reservoir_qubits;
    if (spec.kind != ArchKind::D) {
        for (const auto& c : arch.unit_channels) {
            ComplexMatrix w = c.u;
            if (spec.basis == MeasurementBasis::XBasis) left_hadamard_all_inplace(w, unit_qubits);
            arch.measure_ops.push_back(std::move(w));
        }
    } else {
        if (arch.entangler && arch.entangler->dim() != joint_dim(spec)) {
            throw ContractError("prepare_from_parts: entangler dimension mismatch");
        }
        const Eigen::Index s = spec.input_dim();
        const Eigen::Index r = spec.reservoir_dim();
        ComplexMatrix w;
        std::vector<const ComplexMatrix*> blocks;
        std::vector<int> dims;
        for (int i = 0; i < spec.n; ++i) {
            blocks.push_back(&arch.unit_channels[static_cast<std::size_t>(i)].u);
            dims.push_back(static_cast<int>(u));
        }
        if (arch.entangler) {
            w = arch.entangler->u;
            right_kron_apply_inplace(w, blocks, dims);
        } else if (spec.n == 1) {
            w = arch.unit_channels[0].u;
        } else {
            w = ComplexMatrix::Identity(joint_dim(spec), joint_dim(spec));
            right_kron_apply_inplace(w, blocks, dims);
        }
        if (spec.basis == MeasurementBasis::XBasis) {
            left_hadamard_all_inplace(w, spec.n * unit_qubits);
        }
        // Group the inputs in front and absorb the fixed reservoir factor.
        const auto map = grouped_to_interleaved(spec.n, s, r);
        ComplexMatrix grouped(w.rows(), w.cols());
        for (Eigen::Index g = 0; g < grouped.cols(); ++g) {
            grouped.col(g) = w.col(map[static_cast<std::size_t>(g)]);
        }
        w.resize(0, 0);
        Eigen::Index s_pow = 1, r_pow = 1;
        for (int i = 0; i < spec.n; ++i) {
            s_pow *= s;
            r_pow *= r;
        }
        if (r_pow > 1) {
            ComplexMatrix env = arch.reservoir_states[0].mat;
            for (int i = 1; i < spec.n; ++i) env = kron(env, arch.reservoir_states[static_cast<std::size_t>(i)].mat);
            const ComplexMatrix env_root = psd_sqrt(env);
            right_kron_apply_inplace(grouped, {nullptr, &env_root},
                                     {static_cast<int>(s_pow), static_cast<int>(r_pow)});
        }
        arch.d_collect = std::move(grouped);
    }

    FeatureStrategy resolved = strategy;
    if (resolved == FeatureStrategy::Auto) {
        bool expand = false;
        if (spec.kind == ArchKind::D && joint_dim(spec) >= kExpandDimThreshold) {
            const auto s64 = static_cast<std::uint64_t>(spec.input_dim());
            try {
                expand = sym_dim(s64, static_cast<std::uint64_t>(spec.n)) <= kExpandSymLimit;
            } catch (const SizeLimitError&) {
                expand = false;
            }
        }
        resolved = expand ? FeatureStrategy::Expanded : FeatureStrategy::Direct;
    }
    if (resolved == FeatureStrategy::Expanded && spec.kind != ArchKind::D) {
        throw ContractError("feature expansion is only defined for the distributed design");
    }
    arch.strategy = FeatureStrategy::Direct;
    if (resolved == FeatureStrategy::Expanded) build_expanded_route(arch);
    return arch;
}

PreparedArchitecture prepare(const ArchitectureSpec& spec, RandomSource& rng,
                             FeatureStrategy strategy) {
    validate_spec(spec);
    const int unit_qubits = spec.input_qubits + spec.reservoir_qubits;
    const int parts = (spec.kind == ArchKind::SM || spec.kind == ArchKind::D) ? spec.n : 1;
    std::vector<UnitaryChannel> channels;
    std::vector<DensityMatrix> reservoirs;
    for (int i = 0; i < parts; ++i) {
        channels.push_back(sample_ising_channel(unit_qubits, spec.dynamics, rng));
        if (spec.reservoir_qubits > 0) {
            reservoirs.push_back(
                random_density_matrix(static_cast<int>(spec.reservoir_dim()), rng));
        } else {
            reservoirs.push_back(DensityMatrix::unchecked(ComplexMatrix::Identity(1, 1)));
        }
    }
    std::optional<UnitaryChannel> entangler;
    if (spec.kind == ArchKind::D && spec.n >= 2) {
        // With a single unit there is nothing to entangle and the design
        // reduces to the plain three-layer map.
        const std::vector<int> unit_dims(static_cast<std::size_t>(spec.n),
                                         static_cast<int>(spec.unit_dim()));
        entangler = build_entangling_map(unit_dims, spec.dynamics, rng);
    }
    return prepare_from_parts(spec, std::move(channels), std::move(reservoirs),
                              std::move(entangler), rng.derive(0x517), strategy);
}

FeatureVector features_s3l(const PreparedArchitecture& arch, const DensityMatrix& rho) {
    if (rho.dim() != arch.spec.input_dim()) {
        throw ContractError("features: input dimension mismatch");
    }
    return unit_block_features(arch, 0, rho);
}

FeatureVector features_sm(const PreparedArchitecture& arch, const DensityMatrix& rho) {
    if (rho.dim() != arch.spec.input_dim()) {
        throw ContractError("features: input dimension mismatch");
    }
    const Eigen::Index block = arch.spec.unit_dim();
    RealVector values(arch.spec.n * block);
    for (int i = 0; i < arch.spec.n; ++i) {
        values.segment(i * block, block) = unit_block_features(arch, i, rho).values;
    }
    return FeatureVector{std::move(values), arch.spec.n};
}

FeatureVector features_mi(const PreparedArchitecture& arch, const DensityMatrix& rho) {
    if (rho.dim() != arch.spec.input_dim()) {
        throw ContractError("features: input dimension mismatch");
    }
    const int s = static_cast<int>(arch.spec.input_dim());
    const int r = static_cast<int>(arch.spec.reservoir_dim());
    const ComplexMatrix& u = arch.unit_channels[0].u;
    ComplexMatrix eta = arch.reservoir_states[0].mat;
    for (int i = 1; i < arch.spec.n; ++i) {
        const ComplexMatrix joint = kron(rho.mat, eta);
        const ComplexMatrix evolved = u * joint * u.adjoint();
        eta = partial_trace(evolved, {s, r}, {1});
    }
    RealVector values = diag_sandwich(arch.measure_ops[0], {&rho.mat, &eta}, {s, r});
    return FeatureVector{std::move(values), 1};
}

FeatureVector features_d(const PreparedArchitecture& arch, const DensityMatrix& rho) {
    if (rho.dim() != arch.spec.input_dim()) {
        throw ContractError("features: input dimension mismatch");
    }
    if (arch.strategy == FeatureStrategy::Expanded) {
        const RealVector c = pauli_coefficients(arch, rho.mat);
        RealVector values = arch.poly_coeffs * monomial_vector(arch, c);
        return FeatureVector{std::move(values), 1};
    }
    const int s = static_cast<int>(arch.spec.input_dim());
    Eigen::Index r_pow = 1;
    for (int i = 0; i < arch.spec.n; ++i) r_pow *= arch.spec.reservoir_dim();
    const ComplexMatrix root = psd_sqrt(rho.mat);
    std::vector<const ComplexMatrix*> blocks(static_cast<std::size_t>(arch.spec.n), &root);
    std::vector<int> dims(static_cast<std::size_t>(arch.spec.n), s);
    if (r_pow > 1) {
        blocks.push_back(nullptr);
        dims.push_back(static_cast<int>(r_pow));
    }
    ComplexMatrix t = arch.d_collect;
    right_kron_apply_inplace(t, blocks, dims);
    RealVector values = t.cwiseAbs2().rowwise().sum();
    return FeatureVector{std::move(values), 1};
}

FeatureVector features_d_reference(const PreparedArchitecture& arch, const DensityMatrix& rho) {
    const Eigen::Index total = joint_dim(arch.spec);
    check_dimension(static_cast<std::size_t>(total) * 2, "features_d_reference");
    ComplexMatrix state = kron(rho.mat, arch.reservoir_states[0].mat);
    for (int i = 1; i < arch.spec.n; ++i) {
        state = kron(state, kron(rho.mat, arch.reservoir_states[static_cast<std::size_t>(i)].mat));
    }
    ComplexMatrix full = arch.unit_channels[0].u;
    for (int i = 1; i < arch.spec.n; ++i) {
        full = kron(full, arch.unit_channels[static_cast<std::size_t>(i)].u);
    }
    if (arch.entangler) full = arch.entangler->u * full;
    if (arch.spec.basis == MeasurementBasis::XBasis) {
        left_hadamard_all_inplace(full, arch.spec.n * (arch.spec.input_qubits +
                                                       arch.spec.reservoir_qubits));
    }
    const ComplexMatrix evolved = full * state * full.adjoint();
    return FeatureVector{evolved.diagonal().real(), 1};
}

FeatureVector features(const PreparedArchitecture& arch, const DensityMatrix& rho) {
    switch (arch.spec.kind) {
        case ArchKind::S3L: return features_s3l(arch, rho);
        case ArchKind::SM: return features_sm(arch, rho);
        case ArchKind::MI: return features_mi(arch, rho);
        case ArchKind::D: return features_d(arch, rho);
    }
    throw ContractError("features: unknown kind");
}

RealVector linear_feature_map(const PreparedArchitecture& arch, const ComplexMatrix& input) {
    if (arch.spec.kind != ArchKind::S3L && arch.spec.kind != ArchKind::SM) {
        throw ContractError("linear_feature_map: only defined for the linear designs");
    }
    if (input.rows() != arch.spec.input_dim() || input.cols() != arch.spec.input_dim()) {
        throw ContractError("linear_feature_map: input dimension mismatch");
    }
    const int s = static_cast<int>(arch.spec.input_dim());
    const int r = static_cast<int>(arch.spec.reservoir_dim());
    const Eigen::Index block = arch.spec.unit_dim();
    const int units = arch.spec.kind == ArchKind::SM ? arch.spec.n : 1;
    RealVector values(units * block);
    for (int i = 0; i < units; ++i) {
        values.segment(i * block, block) =
            diag_sandwich(arch.measure_ops[static_cast<std::size_t>(i)],
                          {&input, &arch.reservoir_states[static_cast<std::size_t>(i)].mat},
                          {s, r});
    }
    return values;
}

} // namespace qelm
