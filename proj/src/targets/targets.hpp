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

#include <optional>
#include <string>
#include <vector>

#include "qcore/states.hpp"

namespace qelm {

// Entropies use the natural logarithm throughout. The base only rescales
// entropy targets and NMSE is invariant under target scaling, so learned
// errors are unaffected.

/// Tr[O rho^k]; k = 1 reduces to a plain expectation.
double polynomial_target(const HermitianObservable& o, const DensityMatrix& rho, int k);

/// S_alpha = ln(Tr[rho^alpha]) / (1 - alpha), alpha > 0, alpha != 1.
/// Eigenvalues are clamped at zero before the fractional power.
double renyi_entropy(const DensityMatrix& rho, double alpha);

/// S = -Tr[rho ln rho], with 0 ln 0 := 0.
double von_neumann_entropy(const DensityMatrix& rho);

/// I(A:B) = S(rho_A) + S(rho_B) - S(rho_AB) on a dim_a x dim_b bipartition.
double mutual_information(const DensityMatrix& rho_ab, int dim_a, int dim_b);

/// Two-qubit concurrence C = max(0, l1 - l2 - l3 - l4) from the square roots
/// of the eigenvalues of rho * rho_tilde (spectrally equivalent to the
/// sqrt(sqrt(rho) rho_tilde sqrt(rho)) form, without the matrix square roots).
double concurrence(const DensityMatrix& rho);

/// Two-qubit negativity (|| rho^{T_B} ||_1 - 1) / 2.
double negativity(const DensityMatrix& rho);

/// Bloch component Tr[sigma_axis rho] of a single-qubit state.
double bloch_component(const DensityMatrix& rho, char axis);

enum class TargetKind {
    LinearObservable,
    Polynomial,
    Purity,
    Renyi,
    Concurrence,
    Negativity,
    BlochComponent,
    MutualInformation,
};

/// One learnable functional of the input state.
struct TargetSpec {
    TargetKind kind = TargetKind::LinearObservable;
    std::optional<HermitianObservable> observable; // LinearObservable, Polynomial
    int degree = 1;                                // Polynomial
    double alpha = 2.0;                            // Renyi
    int dim_a = 2;                                 // MutualInformation split
    char axis = 'z';                               // BlochComponent
    std::string label;                             // carried into result rows

    static TargetSpec linear(HermitianObservable o, std::string label);
    static TargetSpec polynomial(HermitianObservable o, int degree, std::string label);
    static TargetSpec purity();
    static TargetSpec renyi(double alpha);
    static TargetSpec concurrence_target();
    static TargetSpec negativity_target();
    static TargetSpec bloch(char axis);
    static TargetSpec mutual_information_target(int dim_a);
};

/// Checks the spec invariants against an input dimension; throws ContractError.
void validate_target(const TargetSpec& spec, Eigen::Index input_dim);

double evaluate_target(const TargetSpec& spec, const DensityMatrix& rho);

} // namespace qelm
