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
#include <vector>

#include "architectures/kind.hpp"
#include "dynamics/ising.hpp"
#include "qcore/random.hpp"
#include "qcore/states.hpp"

namespace qelm {

enum class MeasurementBasis {
    Computational, // projectors onto |j>
    XBasis,        // projectors onto |+/->^n, used for the dynamical-regime studies
};

/// Which of the four designs to build and how large each piece is.
/// `n` counts units for SM/D and injections for MI; it must be 1 for S3L.
struct ArchitectureSpec {
    ArchKind kind = ArchKind::S3L;
    int n = 1;
    int input_qubits = 1;
    int reservoir_qubits = 1; // per reservoir
    DynamicsProfile dynamics{};
    MeasurementBasis basis = MeasurementBasis::Computational;
    StateEnsemble input_ensemble = StateEnsemble::Ginibre;

    Eigen::Index input_dim() const { return Eigen::Index{1} << input_qubits; }
    Eigen::Index reservoir_dim() const { return Eigen::Index{1} << reservoir_qubits; }
    Eigen::Index unit_dim() const { return input_dim() * reservoir_dim(); }
};

void validate_spec(const ArchitectureSpec& spec);

/// Number of entries in the feature vector: 2^(in+res) for S3L and MI,
/// n * 2^(in+res) for SM, and 2^(n(in+res)) for D.
Eigen::Index feature_length(const ArchitectureSpec& spec);

/// Computational-basis outcome probabilities, the layer fed to regression.
/// For SM the vector is a concatenation of `blocks` unit blocks, each
/// normalized to 1; the other kinds produce a single normalized block.
struct FeatureVector {
    RealVector values;
    int blocks = 1;
};

/// How feature vectors for the D design are produced. Both routes evaluate
/// the same map exactly; Expanded precomputes the polynomial coefficients of
/// the probabilities in the input state from probe evaluations, which pays
/// off once the joint space is large and many samples are needed.
enum class FeatureStrategy { Auto, Direct, Expanded };

/// Everything drawn in prepare() stays fixed for the architecture's
/// lifetime, so the effective POVM is constant across a dataset; fresh draws
/// happen only across independent experimental runs. Immutable after
/// prepare() and safe to share across threads.
struct PreparedArchitecture {
    ArchitectureSpec spec;
    std::vector<UnitaryChannel> unit_channels;   // Gamma_i; one entry for S3L/MI
    std::optional<UnitaryChannel> entangler;     // Phi, D with n >= 2 only
    std::vector<DensityMatrix> reservoir_states; // eta_i; one entry for S3L/MI

    // Precomputed measurement pipelines.
    std::vector<ComplexMatrix> measure_ops; // per unit: (basis change) * U_i
    ComplexMatrix d_collect;  // D: global collect matrix, inputs grouped in
                              // front, fixed reservoir square roots absorbed
    FeatureStrategy strategy = FeatureStrategy::Direct;

    // Expanded-route data (D): probabilities = poly_coeffs * monomials(rho).
    RealMatrix poly_coeffs;
    std::vector<ComplexMatrix> coeff_basis;  // Pauli-string basis of the input space
    std::vector<std::vector<int>> monomials; // multisets over coeff_basis indices

    RandomSource aux_stream{0, 0}; // derived stream for probe draws
};

/// Samples one reservoir state per reservoir and one channel per unit
/// (independent couplings, same field and time), plus the entangling map for
/// the distributed design. Draw order per unit: couplings first, then the
/// reservoir state; the entangler couplings come last.
PreparedArchitecture prepare(const ArchitectureSpec& spec, RandomSource& rng,
                             FeatureStrategy strategy = FeatureStrategy::Auto);

/// Builds the measurement pipelines around externally supplied parts; used
/// by tests that need forced channels or a trivial entangler.
PreparedArchitecture prepare_from_parts(const ArchitectureSpec& spec,
                                        std::vector<UnitaryChannel> channels,
                                        std::vector<DensityMatrix> reservoirs,
                                        std::optional<UnitaryChannel> entangler,
                                        RandomSource aux,
                                        FeatureStrategy strategy = FeatureStrategy::Auto);

FeatureVector features(const PreparedArchitecture& arch, const DensityMatrix& rho);

// Per-design entry points; `features` dispatches on spec.kind.
FeatureVector features_s3l(const PreparedArchitecture& arch, const DensityMatrix& rho);
FeatureVector features_sm(const PreparedArchitecture& arch, const DensityMatrix& rho);
FeatureVector features_mi(const PreparedArchitecture& arch, const DensityMatrix& rho);
FeatureVector features_d(const PreparedArchitecture& arch, const DensityMatrix& rho);

/// Reference implementation of the distributed feature map by dense
/// composition (build the joint state, apply every channel, read the
/// diagonal). Used as an oracle against the production paths.
FeatureVector features_d_reference(const PreparedArchitecture& arch, const DensityMatrix& rho);

/// The feature map applied to an arbitrary Hermitian input. Only meaningful
/// for the linear designs (S3L/SM), where probabilities are linear in rho.
RealVector linear_feature_map(const PreparedArchitecture& arch, const ComplexMatrix& input);

/// Effective measurement operators induced on the input: for S3L the POVM
/// on H_S; for SM the concatenation of each unit's POVM (each block sums to
/// the identity); for MI/D the POVM on the n-copy input space H_S^(x)n.
std::vector<HermitianObservable> effective_povm(const PreparedArchitecture& arch);

/// Numerical rank (singular values > 1e-8 of the largest) of the feature map
/// over a spanning set: a Hermitian operator basis for the linear designs, at
/// least d_sn random states for MI/D.
int design_matrix_rank(const PreparedArchitecture& arch);

} // namespace qelm
