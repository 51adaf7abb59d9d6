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

#include <string>
#include <vector>

#include "qcore/types.hpp"

namespace qelm {

// Qubit ordering convention: qubit 0 is the leftmost tensor factor, i.e. the
// most significant digit of a computational-basis index. All modules inherit
// this convention.

const ComplexMatrix& pauli_x();
const ComplexMatrix& pauli_y();
const ComplexMatrix& pauli_z();
const ComplexMatrix& identity2();

/// Single-qubit operator by letter: 'I', 'X', 'Y', 'Z'.
const ComplexMatrix& pauli(char letter);

/// Kronecker product with the global dimension cap enforced on the result.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Kronecker product of a list, folded left to right.
ComplexMatrix kron_all(const std::vector<const ComplexMatrix*>& factors);

/// Tensor product of single-qubit Paulis, e.g. "XZI" -> sx (x) sz (x) id.
ComplexMatrix pauli_string(const std::string& letters);

/// Sorted eigenvalues (ascending) of a Hermitian matrix.
RealVector hermitian_eigenvalues(const ComplexMatrix& h);

/// Eigendecomposition of a Hermitian matrix; eigenvalues ascending and
/// eigenvectors in matching columns. Large matrices go through LAPACK's
/// divide-and-conquer solver when available.
void hermitian_eigensystem(const ComplexMatrix& h, RealVector& values, ComplexMatrix& vectors);

/// exp(-i t h) through the eigendecomposition of the Hermitian generator h;
/// the result is unitary to within kDerivedTol.
ComplexMatrix expm_hermitian(const ComplexMatrix& h, double t);

/// PSD square root with eigenvalues clamped at zero before the root.
ComplexMatrix psd_sqrt(const ComplexMatrix& h);

/// rho^k by repeated multiplication, k >= 1.
ComplexMatrix matrix_power(const ComplexMatrix& rho, int k);

/// Reduces `m` on the subsystems listed in `keep` (ascending order), tracing
/// out the rest. `dims` are the subsystem dimensions in tensor order.
ComplexMatrix partial_trace(const ComplexMatrix& m, const std::vector<int>& dims,
                            const std::vector<int>& keep);

/// Partial transpose over the second factor of a dim_a x dim_b bipartition.
ComplexMatrix partial_transpose_b(const ComplexMatrix& m, int dim_a, int dim_b);

/// Embeds `op` (acting on the listed target subsystems, in that order) into
/// the full space described by `dims`.
ComplexMatrix embed_operator(const ComplexMatrix& op, const std::vector<int>& dims,
                             const std::vector<int>& targets);

/// H^(x)m: the basis change from the computational to the x basis.
ComplexMatrix hadamard_all(int qubits);

/// In-place right multiplication M <- M * (b0 (x) b1 (x) ...). A nullptr
/// block stands for the identity of the corresponding dimension. This is a
/// sequence of mode contractions, so it never forms the Kronecker product.
void right_kron_apply_inplace(ComplexMatrix& m, const std::vector<const ComplexMatrix*>& blocks,
                              const std::vector<int>& dims);

/// diag(W K W^dag) for K = b0 (x) b1 (x) ..., returned as a real vector.
/// Exact for Hermitian K; the residual imaginary part is discarded.
RealVector diag_sandwich(const ComplexMatrix& w, const std::vector<const ComplexMatrix*>& blocks,
                         const std::vector<int>& dims);

/// Max absolute entry of (U^dag U - I).
double unitarity_defect(const ComplexMatrix& u);

/// Max absolute entry of (m - m^dag).
double hermiticity_defect(const ComplexMatrix& m);

} // namespace qelm
