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

#include <Eigen/SVD>

#include "architectures/architecture.hpp"
#include "bounds/bounds.hpp"
#include "common/errors.hpp"
#include "common/limits.hpp"
#include "common/parallel.hpp"

namespace qelm {

namespace {

constexpr double kRankCutoff = 1e-8;
constexpr std::uint64_t kProbeLimit = 4096;

void check_povm_budget(Eigen::Index outcomes, Eigen::Index op_dim) {
    const std::size_t entries = static_cast<std::size_t>(outcomes) *
                                static_cast<std::size_t>(op_dim) *
                                static_cast<std::size_t>(op_dim);
    if (entries > (std::size_t{1} << 24)) {
        throw SizeLimitError("effective_povm: operator list would need " +
                             std::to_string(entries) + " entries");
    }
}

// Effective POVM of one three-layer block: E_k = Tr_R[W^dag |k><k| W (I (x) eta)].
std::vector<HermitianObservable> block_povm(const ComplexMatrix& w, const ComplexMatrix& eta,
                                            int s, int r) {
    const ComplexMatrix env = kron(ComplexMatrix::Identity(s, s), eta);
    std::vector<HermitianObservable> out;
    out.reserve(static_cast<std::size_t>(w.rows()));
    for (Eigen::Index k = 0; k < w.rows(); ++k) {
        const ComplexMatrix outer = w.row(k).adjoint() * w.row(k);
        ComplexMatrix reduced = partial_trace(outer * env, {s, r}, {0});
        reduced = 0.5 * (reduced + reduced.adjoint()).eval();
        out.push_back(HermitianObservable{std::move(reduced)});
    }
    return out;
}

int rank_of(const RealMatrix& design) {
    Eigen::BDCSVD<RealMatrix> svd(design);
    const RealVector& sv = svd.singularValues();
    if (sv.size() == 0 || sv(0) <= 0.0) return 0;
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        if (sv(i) > kRankCutoff * sv(0)) ++rank;
    }
    return rank;
}

std::vector<ComplexMatrix> hermitian_basis(int dim) {
    std::vector<ComplexMatrix> basis;
    basis.reserve(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim));
    for (int a = 0; a < dim; ++a) {
        ComplexMatrix e = ComplexMatrix::Zero(dim, dim);
        e(a, a) = 1.0;
        basis.push_back(e);
    }
    for (int a = 0; a < dim; ++a) {
        for (int b = a + 1; b < dim; ++b) {
            ComplexMatrix re = ComplexMatrix::Zero(dim, dim);
            re(a, b) = 1.0;
            re(b, a) = 1.0;
            basis.push_back(re);
            ComplexMatrix im = ComplexMatrix::Zero(dim, dim);
            im(a, b) = Complex(0.0, 1.0);
            im(b, a) = Complex(0.0, -1.0);
            basis.push_back(im);
        }
    }
    return basis;
}

} // namespace

std::vector<HermitianObservable> effective_povm(const PreparedArchitecture& arch) {
    const int s = static_cast<int>(arch.spec.input_dim());
    const int r = static_cast<int>(arch.spec.reservoir_dim());
    switch (arch.spec.kind) {
        case ArchKind::S3L: {
            check_povm_budget(arch.spec.unit_dim(), s);
            return block_povm(arch.measure_ops[0], arch.reservoir_states[0].mat, s, r);
        }
        case ArchKind::SM: {
            check_povm_budget(arch.spec.n * arch.spec.unit_dim(), s);
            std::vector<HermitianObservable> out;
            for (int i = 0; i < arch.spec.n; ++i) {
                auto unit = block_povm(arch.measure_ops[static_cast<std::size_t>(i)],
                                       arch.reservoir_states[static_cast<std::size_t>(i)].mat,
                                       s, r);
                out.insert(out.end(), std::make_move_iterator(unit.begin()),
                           std::make_move_iterator(unit.end()));
            }
            return out;
        }
        case ArchKind::MI: {
            // Sequential injections written as one global map Lambda on the
            // n-copy space: E_k = Tr_R[Lambda^dag[E_k] (I^(x)n (x) eta_0)].
            const int n = arch.spec.n;
            Eigen::Index s_pow = 1;
            for (int i = 0; i < n; ++i) s_pow *= s;
            check_dimension(static_cast<std::size_t>(s_pow) * static_cast<std::size_t>(r),
                            "effective_povm n-copy space");
            check_povm_budget(arch.spec.unit_dim(), s_pow);
            std::vector<int> dims(static_cast<std::size_t>(n), s);
            dims.push_back(r);
            ComplexMatrix g = ComplexMatrix::Identity(s_pow * r, s_pow * r);
            for (int i = 0; i < n; ++i) {
                g = embed_operator(arch.unit_channels[0].u, dims, {i, n}) * g;
            }
            const ComplexMatrix env =
                kron(ComplexMatrix::Identity(s_pow, s_pow), arch.reservoir_states[0].mat);
            std::vector<int> keep(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) keep[static_cast<std::size_t>(i)] = i;
            std::vector<HermitianObservable> out;
            for (Eigen::Index k = 0; k < arch.spec.unit_dim(); ++k) {
                const ComplexMatrix meas =
                    arch.measure_ops[0].row(k).adjoint() * arch.measure_ops[0].row(k);
                const ComplexMatrix lifted = embed_operator(meas, dims, {n - 1, n});
                ComplexMatrix reduced =
                    partial_trace(g.adjoint() * lifted * g * env, dims, keep);
                reduced = 0.5 * (reduced + reduced.adjoint()).eval();
                out.push_back(HermitianObservable{std::move(reduced)});
            }
            return out;
        }
        case ArchKind::D: {
            // The reservoir square roots absorbed into d_collect play the role
            // of the (I (x) eta) factor under the partial trace.
            Eigen::Index s_pow = 1, r_pow = 1;
            for (int i = 0; i < arch.spec.n; ++i) {
                s_pow *= s;
                r_pow *= r;
            }
            check_povm_budget(arch.d_collect.rows(), s_pow);
            std::vector<HermitianObservable> out;
            for (Eigen::Index k = 0; k < arch.d_collect.rows(); ++k) {
                const ComplexMatrix outer =
                    arch.d_collect.row(k).adjoint() * arch.d_collect.row(k);
                ComplexMatrix reduced =
                    r_pow == 1
                        ? outer
                        : partial_trace(outer, {static_cast<int>(s_pow),
                                                static_cast<int>(r_pow)}, {0});
                reduced = 0.5 * (reduced + reduced.adjoint()).eval();
                out.push_back(HermitianObservable{std::move(reduced)});
            }
            return out;
        }
    }
    throw ContractError("effective_povm: unknown kind");
}

int design_matrix_rank(const PreparedArchitecture& arch) {
    const Eigen::Index p = feature_length(arch.spec);
    if (arch.spec.kind == ArchKind::S3L || arch.spec.kind == ArchKind::SM) {
        const auto basis = hermitian_basis(static_cast<int>(arch.spec.input_dim()));
        RealMatrix design(static_cast<Eigen::Index>(basis.size()), p);
        for (std::size_t i = 0; i < basis.size(); ++i) {
            design.row(static_cast<Eigen::Index>(i)) = linear_feature_map(arch, basis[i]);
        }
        return rank_of(design);
    }
    const std::uint64_t d_sn = sym_dim(static_cast<std::uint64_t>(arch.spec.input_dim()),
                                       static_cast<std::uint64_t>(arch.spec.n));
    if (d_sn > kProbeLimit) {
        throw SizeLimitError("design_matrix_rank: d_sn = " + std::to_string(d_sn) +
                             " exceeds the probe limit");
    }
    const int probes = static_cast<int>(d_sn) + 8;
    RandomSource rng = arch.aux_stream.derive(2);
    std::vector<DensityMatrix> states;
    states.reserve(static_cast<std::size_t>(probes));
    for (int i = 0; i < probes; ++i) {
        states.push_back(random_density_matrix(static_cast<int>(arch.spec.input_dim()), rng));
    }
    RealMatrix design(probes, p);
    parallel_for(static_cast<std::size_t>(probes), [&](std::size_t i) {
        design.row(static_cast<Eigen::Index>(i)) = features(arch, states[i]).values;
    });
    return rank_of(design);
}

} // namespace qelm
