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

#include <vector>

#include "qcore/random.hpp"
#include "qcore/states.hpp"

namespace qelm {

/// All-to-all transverse Ising model
///   H = 1/2 sum_{i>j} J_ij sx_i sx_j + h sum_i sz_i
/// with couplings drawn uniformly from [-J_s, J_s].
struct IsingParams {
    int n_qubits = 1;
    RealMatrix couplings; // symmetric, diagonal unused
    double field = 1.0;
    double time = 10.0;
};

/// The J_s = 1, h = 1, t = 10 profile places the dynamics in the ergodic
/// regime, where information spreads through the reservoir.
struct DynamicsProfile {
    double j_scale = 1.0;
    double field = 1.0;
    double time = 10.0;
};

struct UnitaryChannel {
    ComplexMatrix u;

    Eigen::Index dim() const { return u.rows(); }
};

/// Symmetric coupling matrix with every off-diagonal i.i.d. uniform on
/// [-j_scale, j_scale]; upper triangle drawn row-major and mirrored.
RealMatrix sample_couplings(int n_qubits, double j_scale, RandomSource& rng);

HermitianObservable build_ising_hamiltonian(const IsingParams& p);

/// exp(-i H t) wrapped as a CPTP map Gamma(.) = U . U^dag.
UnitaryChannel channel_from_ising(const IsingParams& p);

/// Convenience: sample couplings for `n_qubits` and build the channel.
UnitaryChannel sample_ising_channel(int n_qubits, const DynamicsProfile& profile,
                                    RandomSource& rng);

DensityMatrix apply_channel(const UnitaryChannel& c, const DensityMatrix& rho);

/// Second CPTP map Phi for the distributed design: an all-to-all Ising
/// unitary over every qubit of every unit, with fresh couplings and the same
/// field and time. `unit_dims` lists the composite dimension of each unit.
UnitaryChannel build_entangling_map(const std::vector<int>& unit_dims,
                                    const DynamicsProfile& profile, RandomSource& rng);

} // namespace qelm
