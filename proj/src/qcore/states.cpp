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

#include "qcore/states.hpp"

#include "common/errors.hpp"
#include "common/limits.hpp"

namespace qelm {

std::string density_defect(const ComplexMatrix& m) {
    if (m.rows() != m.cols()) return "matrix is not square";
    if (!m.allFinite()) return "matrix has non-finite entries";
    const double herm = hermiticity_defect(m);
    if (herm > kValidityTol) {
        return "hermiticity defect " + std::to_string(herm);
    }
    const double trace_err = std::abs(m.trace() - Complex(1.0, 0.0));
    if (trace_err > kValidityTol) {
        return "trace deviates from 1 by " + std::to_string(trace_err);
    }
    const RealVector eigs = hermitian_eigenvalues(m);
    if (eigs.minCoeff() < -kValidityTol) {
        return "smallest eigenvalue " + std::to_string(eigs.minCoeff());
    }
    return {};
}

DensityMatrix density_from(ComplexMatrix m) {
    const std::string defect = density_defect(m);
    if (!defect.empty()) throw ContractError("density_from: " + defect);
    return DensityMatrix{std::move(m)};
}

HermitianObservable observable_from(ComplexMatrix m) {
    if (m.rows() != m.cols()) throw ContractError("observable_from: matrix is not square");
    const double herm = hermiticity_defect(m);
    if (herm > kValidityTol) {
        throw ContractError("observable_from: hermiticity defect " + std::to_string(herm));
    }
    return HermitianObservable{std::move(m)};
}

DensityMatrix random_density_matrix(int dim, RandomSource& rng, StateEnsemble ensemble) {
    if (dim < 2) throw ContractError("random_density_matrix: dim must be >= 2");
    check_dimension(static_cast<std::size_t>(dim), "random_density_matrix");
    switch (ensemble) {
        case StateEnsemble::Ginibre: {
            const ComplexMatrix g = rng.ginibre(dim, dim);
            ComplexMatrix rho = g * g.adjoint();
            rho /= rho.trace();
            // Symmetrize away the last bits of rounding noise.
            rho = (ComplexMatrix(0.5 * (rho + rho.adjoint())));
            return DensityMatrix::unchecked(std::move(rho));
        }
        case StateEnsemble::HaarPure: {
            ComplexVector psi(dim);
            for (int i = 0; i < dim; ++i) psi(i) = rng.complex_normal();
            psi /= psi.norm();
            return DensityMatrix::unchecked(psi * psi.adjoint());
        }
    }
    throw ContractError("random_density_matrix: unknown ensemble");
}

double expectation(const HermitianObservable& o, const DensityMatrix& rho) {
    if (o.dim() != rho.dim()) throw ContractError("expectation: dimension mismatch");
    const Complex value = (o.mat * rho.mat).trace();
    if (std::abs(value.imag()) > kValidityTol) {
        throw NumericError("expectation: imaginary part " + std::to_string(value.imag()) +
                           " exceeds tolerance");
    }
    return value.real();
}

} // namespace qelm
