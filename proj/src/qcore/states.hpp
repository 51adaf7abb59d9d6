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

#include "qcore/linalg.hpp"
#include "qcore/random.hpp"
#include "qcore/types.hpp"

namespace qelm {

/// Unit-trace positive-semidefinite Hermitian matrix. Construct through
/// `density_from` (validating) or `DensityMatrix::unchecked` when the
/// construction guarantees the invariants.
struct DensityMatrix {
    ComplexMatrix mat;

    Eigen::Index dim() const { return mat.rows(); }

    static DensityMatrix unchecked(ComplexMatrix m) { return DensityMatrix{std::move(m)}; }
};

struct HermitianObservable {
    ComplexMatrix mat;

    Eigen::Index dim() const { return mat.rows(); }
};

/// Validates hermiticity (1e-10), unit trace (1e-10) and positivity
/// (smallest eigenvalue >= -1e-10) before wrapping.
DensityMatrix density_from(ComplexMatrix m);

/// Returns a human-readable reason the matrix fails the density invariants,
/// or an empty string if it passes.
std::string density_defect(const ComplexMatrix& m);

/// Validates hermiticity before wrapping.
HermitianObservable observable_from(ComplexMatrix m);

enum class StateEnsemble {
    Ginibre,  // rho = G G^dag / Tr, G i.i.d. complex Gaussian (Hilbert-Schmidt measure)
    HaarPure, // projector onto a Haar-random pure state
};

/// Random density matrix of the given dimension. The Ginibre ensemble is the
/// default everywhere; Haar pure states are exposed for sensitivity checks.
DensityMatrix random_density_matrix(int dim, RandomSource& rng,
                                    StateEnsemble ensemble = StateEnsemble::Ginibre);

/// Tr[O rho]. Throws NumericError if the imaginary part exceeds 1e-10.
double expectation(const HermitianObservable& o, const DensityMatrix& rho);

} // namespace qelm
