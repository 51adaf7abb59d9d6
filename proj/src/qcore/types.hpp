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

#include <complex>

#include <Eigen/Dense>

namespace qelm {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

// Validity checks (hermiticity, trace, positivity) run at kValidityTol;
// derived quantities (unitarity of exponentials, POVM completeness) at
// kDerivedTol, which absorbs the accumulation of eigensolver error on
// matrices up to a few thousand dimensions.
inline constexpr double kValidityTol = 1e-10;
inline constexpr double kDerivedTol = 1e-9;
inline constexpr double kEigClampTol = 1e-12;

} // namespace qelm
