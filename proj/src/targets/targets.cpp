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

#include "targets/targets.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "common/errors.hpp"

namespace qelm {

namespace {

RealVector clamped_spectrum(const DensityMatrix& rho) {
    RealVector eigs = hermitian_eigenvalues(rho.mat);
    for (Eigen::Index i = 0; i < eigs.size(); ++i) eigs(i) = std::max(eigs(i), 0.0);
    return eigs;
}

double entropy_from_spectrum(const RealVector& eigs) {
    double s = 0.0;
    for (Eigen::Index i = 0; i < eigs.size(); ++i) {
        if (eigs(i) > 0.0) s -= eigs(i) * std::log(eigs(i));
    }
    return s;
}

} // namespace

double polynomial_target(const HermitianObservable& o, const DensityMatrix& rho, int k) {
    if (k < 1) throw ContractError("polynomial_target: degree must be >= 1");
    if (o.dim() != rho.dim()) throw ContractError("polynomial_target: dimension mismatch");
    const Complex value = (o.mat * matrix_power(rho.mat, k)).trace();
    return value.real();
}

double renyi_entropy(const DensityMatrix& rho, double alpha) {
    if (alpha <= 0.0 || alpha == 1.0) {
        throw ContractError("renyi_entropy: alpha must be positive and != 1 "
                            "(use von_neumann_entropy at alpha = 1)");
    }
    const RealVector eigs = clamped_spectrum(rho);
    double sum = 0.0;
    for (Eigen::Index i = 0; i < eigs.size(); ++i) {
        if (eigs(i) > 0.0) sum += std::pow(eigs(i), alpha);
    }
    return std::log(sum) / (1.0 - alpha);
}

double von_neumann_entropy(const DensityMatrix& rho) {
    return entropy_from_spectrum(clamped_spectrum(rho));
}

double mutual_information(const DensityMatrix& rho_ab, int dim_a, int dim_b) {
    if (static_cast<Eigen::Index>(dim_a) * dim_b != rho_ab.dim()) {
        throw ContractError("mutual_information: bipartition does not match the state");
    }
    const ComplexMatrix rho_a = partial_trace(rho_ab.mat, {dim_a, dim_b}, {0});
    const ComplexMatrix rho_b = partial_trace(rho_ab.mat, {dim_a, dim_b}, {1});
    return von_neumann_entropy(DensityMatrix::unchecked(rho_a)) +
           von_neumann_entropy(DensityMatrix::unchecked(rho_b)) -
           von_neumann_entropy(rho_ab);
}

double concurrence(const DensityMatrix& rho) {
    if (rho.dim() != 4) throw ContractError("concurrence: requires a two-qubit state");
    const ComplexMatrix yy = kron(pauli_y(), pauli_y());
    const ComplexMatrix rho_tilde = yy * rho.mat.conjugate() * yy;
    // rho * rho_tilde is similar to a PSD product; its spectrum is real and
    // nonnegative up to rounding.
    Eigen::ComplexEigenSolver<ComplexMatrix> solver(rho.mat * rho_tilde);
    if (solver.info() != Eigen::Success) {
        throw NumericError("concurrence: eigendecomposition failed");
    }
    std::vector<double> roots(4);
    for (int i = 0; i < 4; ++i) {
        roots[static_cast<std::size_t>(i)] =
            std::sqrt(std::max(solver.eigenvalues()(i).real(), 0.0));
    }
    std::sort(roots.begin(), roots.end(), std::greater<double>());
    const double c = roots[0] - roots[1] - roots[2] - roots[3];
    return std::clamp(c, 0.0, 1.0);
}

double negativity(const DensityMatrix& rho) {
    if (rho.dim() != 4) throw ContractError("negativity: requires a two-qubit state");
    const ComplexMatrix pt = partial_transpose_b(rho.mat, 2, 2);
    const RealVector eigs = hermitian_eigenvalues(pt);
    return 0.5 * (eigs.cwiseAbs().sum() - 1.0);
}

double bloch_component(const DensityMatrix& rho, char axis) {
    if (rho.dim() != 2) throw ContractError("bloch_component: requires a single-qubit state");
    return expectation(HermitianObservable{pauli(axis)}, rho);
}

TargetSpec TargetSpec::linear(HermitianObservable o, std::string label) {
    TargetSpec s;
    s.kind = TargetKind::LinearObservable;
    s.observable = std::move(o);
    s.label = std::move(label);
    return s;
}

TargetSpec TargetSpec::polynomial(HermitianObservable o, int degree, std::string label) {
    TargetSpec s;
    s.kind = TargetKind::Polynomial;
    s.observable = std::move(o);
    s.degree = degree;
    s.label = std::move(label);
    return s;
}

TargetSpec TargetSpec::purity() {
    TargetSpec s;
    s.kind = TargetKind::Purity;
    s.label = "purity";
    return s;
}

TargetSpec TargetSpec::renyi(double alpha) {
    TargetSpec s;
    s.kind = TargetKind::Renyi;
    s.alpha = alpha;
    s.label = "renyi_" + std::to_string(alpha).substr(0, 4);
    return s;
}

TargetSpec TargetSpec::concurrence_target() {
    TargetSpec s;
    s.kind = TargetKind::Concurrence;
    s.label = "concurrence";
    return s;
}

TargetSpec TargetSpec::negativity_target() {
    TargetSpec s;
    s.kind = TargetKind::Negativity;
    s.label = "negativity";
    return s;
}

TargetSpec TargetSpec::bloch(char axis) {
    TargetSpec s;
    s.kind = TargetKind::BlochComponent;
    s.axis = axis;
    s.label = std::string("bloch_") + axis;
    return s;
}

TargetSpec TargetSpec::mutual_information_target(int dim_a) {
    TargetSpec s;
    s.kind = TargetKind::MutualInformation;
    s.dim_a = dim_a;
    s.label = "mutual_information";
    return s;
}

void validate_target(const TargetSpec& spec, Eigen::Index input_dim) {
    switch (spec.kind) {
        case TargetKind::LinearObservable:
            if (!spec.observable) throw ContractError("linear target needs an observable");
            if (spec.observable->dim() != input_dim) {
                throw ContractError("linear target observable dimension mismatch");
            }
            break;
        case TargetKind::Polynomial:
            if (!spec.observable) throw ContractError("polynomial target needs an observable");
            if (spec.degree < 1) throw ContractError("polynomial target needs degree >= 1");
            if (spec.observable->dim() != input_dim) {
                throw ContractError("polynomial target observable dimension mismatch");
            }
            break;
        case TargetKind::Renyi:
            if (spec.alpha <= 0.0 || spec.alpha == 1.0) {
                throw ContractError("renyi target needs alpha > 0, alpha != 1");
            }
            break;
        case TargetKind::Concurrence:
        case TargetKind::Negativity:
            if (input_dim != 4) {
                throw ContractError("entanglement targets need a two-qubit input");
            }
            break;
        case TargetKind::BlochComponent:
            if (input_dim != 2) throw ContractError("bloch target needs a single-qubit input");
            break;
        case TargetKind::MutualInformation:
            if (spec.dim_a < 2 || input_dim % spec.dim_a != 0 || input_dim / spec.dim_a < 2) {
                throw ContractError("mutual information target needs a valid bipartition");
            }
            break;
        case TargetKind::Purity:
            break;
    }
}

double evaluate_target(const TargetSpec& spec, const DensityMatrix& rho) {
    switch (spec.kind) {
        case TargetKind::LinearObservable:
            return expectation(*spec.observable, rho);
        case TargetKind::Polynomial:
            return polynomial_target(*spec.observable, rho, spec.degree);
        case TargetKind::Purity:
            return (rho.mat * rho.mat).trace().real();
        case TargetKind::Renyi:
            return renyi_entropy(rho, spec.alpha);
        case TargetKind::Concurrence:
            return concurrence(rho);
        case TargetKind::Negativity:
            return negativity(rho);
        case TargetKind::BlochComponent:
            return bloch_component(rho, spec.axis);
        case TargetKind::MutualInformation:
            return mutual_information(rho, spec.dim_a,
                                      static_cast<int>(rho.dim()) / spec.dim_a);
    }
    throw ContractError("evaluate_target: unknown target kind");
}

} // namespace qelm
