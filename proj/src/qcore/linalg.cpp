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

#include "qcore/linalg.hpp"

#include <algorithm>
#include <numeric>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/KroneckerProduct>

#include "common/errors.hpp"
#include "common/limits.hpp"

#ifdef QELM_HAVE_LAPACKE
#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>
#endif

namespace qelm {

namespace {

constexpr Complex kI{0.0, 1.0};

// Below this size LAPACK call overhead outweighs its blocked kernels.
constexpr int kLapackMinDim = 48;

std::vector<int> complement(const std::vector<int>& keep, int count) {
    std::vector<int> rest;
    rest.reserve(count);
    for (int i = 0; i < count; ++i) {
        if (std::find(keep.begin(), keep.end(), i) == keep.end()) rest.push_back(i);
    }
    return rest;
}

// Offsets into a flat index for every assignment of the listed subsystems.
std::vector<Eigen::Index> subsystem_offsets(const std::vector<int>& dims,
                                            const std::vector<int>& subsystems) {
    std::vector<Eigen::Index> strides(dims.size());
    Eigen::Index acc = 1;
    for (int i = static_cast<int>(dims.size()) - 1; i >= 0; --i) {
        strides[static_cast<std::size_t>(i)] = acc;
        acc *= dims[static_cast<std::size_t>(i)];
    }
    Eigen::Index total = 1;
    for (int s : subsystems) total *= dims[static_cast<std::size_t>(s)];
    std::vector<Eigen::Index> offsets(static_cast<std::size_t>(total), 0);
    Eigen::Index repeat = 1;
    for (auto it = subsystems.rbegin(); it != subsystems.rend(); ++it) {
        const Eigen::Index dim = dims[static_cast<std::size_t>(*it)];
        const Eigen::Index stride = strides[static_cast<std::size_t>(*it)];
        for (Eigen::Index idx = 0; idx < total; ++idx) {
            const Eigen::Index digit = (idx / repeat) % dim;
            offsets[static_cast<std::size_t>(idx)] += digit * stride;
        }
        repeat *= dim;
    }
    return offsets;
}

} // namespace

const ComplexMatrix& pauli_x() {
    static const ComplexMatrix m = (ComplexMatrix(2, 2) << 0, 1, 1, 0).finished();
    return m;
}

const ComplexMatrix& pauli_y() {
    static const ComplexMatrix m = (ComplexMatrix(2, 2) << 0, -kI, kI, 0).finished();
    return m;
}

const ComplexMatrix& pauli_z() {
    static const ComplexMatrix m = (ComplexMatrix(2, 2) << 1, 0, 0, -1).finished();
    return m;
}

const ComplexMatrix& identity2() {
    static const ComplexMatrix m = ComplexMatrix::Identity(2, 2);
    return m;
}

const ComplexMatrix& pauli(char letter) {
    switch (letter) {
        case 'I': case 'i': return identity2();
        case 'X': case 'x': return pauli_x();
        case 'Y': case 'y': return pauli_y();
        case 'Z': case 'z': return pauli_z();
        default: throw ContractError(std::string("unknown Pauli letter '") + letter + "'");
    }
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    const std::size_t rows = static_cast<std::size_t>(a.rows()) * static_cast<std::size_t>(b.rows());
    const std::size_t cols = static_cast<std::size_t>(a.cols()) * static_cast<std::size_t>(b.cols());
    check_dimension(std::max(rows, cols), "kron");
    return Eigen::kroneckerProduct(a, b);
}

ComplexMatrix kron_all(const std::vector<const ComplexMatrix*>& factors) {
    if (factors.empty()) throw ContractError("kron_all: empty factor list");
    ComplexMatrix out = *factors.front();
    for (std::size_t i = 1; i < factors.size(); ++i) out = kron(out, *factors[i]);
    return out;
}

ComplexMatrix pauli_string(const std::string& letters) {
    if (letters.empty()) throw ContractError("pauli_string: empty specification");
    ComplexMatrix out = pauli(letters[0]);
    for (std::size_t i = 1; i < letters.size(); ++i) out = kron(out, pauli(letters[i]));
    return out;
}

void hermitian_eigensystem(const ComplexMatrix& h, RealVector& values, ComplexMatrix& vectors) {
    const int n = static_cast<int>(h.rows());
    if (h.cols() != n) throw ContractError("hermitian_eigensystem: matrix not square");
#ifdef QELM_HAVE_LAPACKE
    if (n >= kLapackMinDim) {
        vectors = h;
        values.resize(n);
        const lapack_int info = LAPACKE_zheevd(LAPACK_COL_MAJOR, 'V', 'L', n,
                                               vectors.data(), n, values.data());
        if (info != 0) {
            throw NumericError("zheevd failed to converge (info=" + std::to_string(info) + ")");
        }
        return;
    }
#endif
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
    if (solver.info() != Eigen::Success) {
        throw NumericError("Hermitian eigendecomposition failed to converge");
    }
    values = solver.eigenvalues();
    vectors = solver.eigenvectors();
}

RealVector hermitian_eigenvalues(const ComplexMatrix& h) {
    const int n = static_cast<int>(h.rows());
    if (h.cols() != n) throw ContractError("hermitian_eigenvalues: matrix not square");
#ifdef QELM_HAVE_LAPACKE
    if (n >= kLapackMinDim) {
        ComplexMatrix work = h;
        RealVector values(n);
        const lapack_int info = LAPACKE_zheevd(LAPACK_COL_MAJOR, 'N', 'L', n,
                                               work.data(), n, values.data());
        if (info != 0) {
            throw NumericError("zheevd failed to converge (info=" + std::to_string(info) + ")");
        }
        return values;
    }
#endif
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw NumericError("Hermitian eigendecomposition failed to converge");
    }
    return solver.eigenvalues();
}

ComplexMatrix expm_hermitian(const ComplexMatrix& h, double t) {
    if (hermiticity_defect(h) > kValidityTol) {
        throw ContractError("expm_hermitian: generator is not Hermitian");
    }
    RealVector values;
    ComplexMatrix vectors;
    hermitian_eigensystem(h, values, vectors);
    ComplexVector phases(values.size());
    for (Eigen::Index i = 0; i < values.size(); ++i) {
        phases(i) = std::exp(-kI * (values(i) * t));
    }
    return vectors * phases.asDiagonal() * vectors.adjoint();
}

ComplexMatrix psd_sqrt(const ComplexMatrix& h) {
    RealVector values;
    ComplexMatrix vectors;
    hermitian_eigensystem(h, values, vectors);
    RealVector roots(values.size());
    for (Eigen::Index i = 0; i < values.size(); ++i) {
        roots(i) = std::sqrt(std::max(values(i), 0.0));
    }
    return vectors * roots.asDiagonal() * vectors.adjoint();
}

ComplexMatrix matrix_power(const ComplexMatrix& rho, int k) {
    if (k < 1) throw ContractError("matrix_power: exponent must be >= 1");
    ComplexMatrix out = rho;
    for (int i = 1; i < k; ++i) out = out * rho;
    return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, const std::vector<int>& dims,
                            const std::vector<int>& keep) {
    Eigen::Index total = 1;
    for (int d : dims) {
        if (d < 1) throw ContractError("partial_trace: subsystem dimension < 1");
        total *= d;
    }
    if (m.rows() != total || m.cols() != total) {
        throw ContractError("partial_trace: subsystem dimensions do not match the matrix");
    }
    if (keep.empty()) throw ContractError("partial_trace: keep set must be non-empty");
    for (std::size_t i = 0; i < keep.size(); ++i) {
        if (keep[i] < 0 || keep[i] >= static_cast<int>(dims.size())) {
            throw ContractError("partial_trace: keep index out of range");
        }
        if (i > 0 && keep[i] <= keep[i - 1]) {
            throw ContractError("partial_trace: keep indices must be ascending");
        }
    }
    const std::vector<int> traced = complement(keep, static_cast<int>(dims.size()));
    const auto kept_off = subsystem_offsets(dims, keep);
    const auto traced_off = subsystem_offsets(dims, traced);
    const Eigen::Index dk = static_cast<Eigen::Index>(kept_off.size());
    ComplexMatrix out = ComplexMatrix::Zero(dk, dk);
    for (Eigen::Index b = 0; b < dk; ++b) {
        for (Eigen::Index a = 0; a < dk; ++a) {
            Complex sum = 0;
            for (const Eigen::Index off : traced_off) {
                sum += m(kept_off[static_cast<std::size_t>(a)] + off,
                         kept_off[static_cast<std::size_t>(b)] + off);
            }
            out(a, b) = sum;
        }
    }
    return out;
}

ComplexMatrix partial_transpose_b(const ComplexMatrix& m, int dim_a, int dim_b) {
    if (m.rows() != static_cast<Eigen::Index>(dim_a) * dim_b || m.rows() != m.cols()) {
        throw ContractError("partial_transpose_b: dimensions do not match the matrix");
    }
    ComplexMatrix out(m.rows(), m.cols());
    for (int a = 0; a < dim_a; ++a)
        for (int b = 0; b < dim_b; ++b)
            for (int ap = 0; ap < dim_a; ++ap)
                for (int bp = 0; bp < dim_b; ++bp)
                    out(a * dim_b + b, ap * dim_b + bp) = m(a * dim_b + bp, ap * dim_b + b);
    return out;
}

ComplexMatrix embed_operator(const ComplexMatrix& op, const std::vector<int>& dims,
                             const std::vector<int>& targets) {
    Eigen::Index total = 1;
    for (int d : dims) total *= d;
    Eigen::Index target_dim = 1;
    for (int t : targets) {
        if (t < 0 || t >= static_cast<int>(dims.size())) {
            throw ContractError("embed_operator: target index out of range");
        }
        target_dim *= dims[static_cast<std::size_t>(t)];
    }
    if (op.rows() != target_dim || op.cols() != target_dim) {
        throw ContractError("embed_operator: operator does not match target dimensions");
    }
    const std::vector<int> rest = complement(targets, static_cast<int>(dims.size()));
    const auto target_off = subsystem_offsets(dims, targets);
    const auto rest_off = subsystem_offsets(dims, rest);
    ComplexMatrix out = ComplexMatrix::Zero(total, total);
    const Eigen::Index dt = static_cast<Eigen::Index>(target_off.size());
    for (const Eigen::Index r : rest_off) {
        for (Eigen::Index j = 0; j < dt; ++j) {
            for (Eigen::Index i = 0; i < dt; ++i) {
                out(target_off[static_cast<std::size_t>(i)] + r,
                    target_off[static_cast<std::size_t>(j)] + r) = op(i, j);
            }
        }
    }
    return out;
}

ComplexMatrix hadamard_all(int qubits) {
    static const ComplexMatrix h =
        (ComplexMatrix(2, 2) << 1, 1, 1, -1).finished() / std::sqrt(2.0);
    if (qubits < 1) throw ContractError("hadamard_all: qubit count must be >= 1");
    ComplexMatrix out = h;
    for (int i = 1; i < qubits; ++i) out = kron(out, h);
    return out;
}

void right_kron_apply_inplace(ComplexMatrix& m, const std::vector<const ComplexMatrix*>& blocks,
                              const std::vector<int>& dims) {
    if (blocks.size() != dims.size()) {
        throw ContractError("right_kron_apply: blocks and dims differ in length");
    }
    Eigen::Index total = 1;
    for (int d : dims) total *= d;
    if (m.cols() != total) {
        throw ContractError("right_kron_apply: column count does not match dims");
    }
    const Eigen::Index rows = m.rows();
    Eigen::Index left = 1;
    Eigen::Index right = total;
    ComplexMatrix tmp;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        const Eigen::Index mid = dims[i];
        right /= mid;
        if (blocks[i] != nullptr) {
            const ComplexMatrix& b = *blocks[i];
            if (b.rows() != mid || b.cols() != mid) {
                throw ContractError("right_kron_apply: block dimension mismatch");
            }
            for (Eigen::Index a = 0; a < left; ++a) {
                for (Eigen::Index r = 0; r < right; ++r) {
                    Eigen::Map<ComplexMatrix, 0, Eigen::OuterStride<>> sub(
                        m.data() + (a * mid * right + r) * rows, rows, mid,
                        Eigen::OuterStride<>(right * rows));
                    tmp.noalias() = sub * b;
                    sub = tmp;
                }
            }
        }
        left *= mid;
    }
}

RealVector diag_sandwich(const ComplexMatrix& w, const std::vector<const ComplexMatrix*>& blocks,
                         const std::vector<int>& dims) {
    ComplexMatrix t = w;
    right_kron_apply_inplace(t, blocks, dims);
    return (t.array() * w.array().conjugate()).rowwise().sum().real();
}

double unitarity_defect(const ComplexMatrix& u) {
    return (u.adjoint() * u - ComplexMatrix::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff();
}

double hermiticity_defect(const ComplexMatrix& m) {
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

} // namespace qelm
