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

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "architectures/architecture.hpp"
#include "targets/targets.hpp"

namespace qelm {

/// Sampled inputs with their feature vectors and exact target values.
/// features: one row per sample; targets: one column per target spec.
struct Dataset {
    std::vector<DensityMatrix> inputs;
    RealMatrix features; // N x p
    RealMatrix targets;  // N x N_tg
    std::vector<TargetSpec> target_specs;
    int feature_blocks = 1;

    Eigen::Index size() const { return features.rows(); }
};

/// Trained linear readout W (N_tg x p); predictions are W * f.
struct ReadoutWeights {
    RealMatrix w;
};

Dataset generate_dataset(const PreparedArchitecture& arch, const std::vector<TargetSpec>& targets,
                         int n_samples, RandomSource& rng);

/// First floor(fraction * N) samples train, the rest test. Samples are
/// already i.i.d., so no shuffle is needed; pass a RandomSource to draw a
/// random permutation first.
std::pair<Dataset, Dataset> split(const Dataset& ds, double train_fraction,
                                  RandomSource* shuffle_rng = nullptr);

/// Least squares through a singular-value pseudoinverse with relative cutoff
/// 1e-10, or ridge regression when `regularization` is set. Warns (without
/// failing) when the training count does not exceed the feature count.
ReadoutWeights fit_readout(const Dataset& train, std::optional<double> regularization = {});

RealVector predict(const ReadoutWeights& w, const FeatureVector& f);

/// Normalized mean squared error: mean((y - yhat)^2) / Var(y), with the
/// population variance of y_true in the denominator so a constant-mean
/// predictor scores exactly 1.
double nmse(const RealVector& y_true, const RealVector& y_pred);

struct TargetErrorSummary {
    std::string label;
    double nmse_mean = 0.0;
    double nmse_std = 0.0;
};

struct ExperimentSummary {
    std::vector<TargetErrorSummary> per_target;
    int n_runs = 0;
    int n_samples = 0;
    double wall_seconds = 0.0;
};

struct ExperimentOptions {
    double train_fraction = 0.8;
    std::optional<double> regularization;
    FeatureStrategy strategy = FeatureStrategy::Auto;
};

/// The full protocol: per run, derive a seed, prepare the architecture,
/// generate a dataset, split 80/20, fit, evaluate test NMSE; aggregate mean
/// and standard deviation across runs per target. A run failure aborts with
/// the run index attached.
ExperimentSummary run_experiment(const ArchitectureSpec& spec,
                                 const std::vector<TargetSpec>& targets, int n_samples,
                                 int n_runs, std::uint64_t master_seed,
                                 const ExperimentOptions& options = {});

} // namespace qelm
