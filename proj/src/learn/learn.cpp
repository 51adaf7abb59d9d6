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

#include "learn/learn.hpp"

#include <chrono>
#include <cmath>
#include <iostream>
#include <numeric>

#include <Eigen/Cholesky>
#include <Eigen/SVD>

#include "common/errors.hpp"
#include "common/parallel.hpp"

namespace qelm {

namespace {

constexpr double kPinvCutoff = 1e-10;
constexpr double kVarianceFloor = 1e-14;

Dataset take_rows(const Dataset& ds, Eigen::Index start, Eigen::Index count,
                  const std::vector<Eigen::Index>& order) {
    Dataset out;
    out.target_specs = ds.target_specs;
    out.feature_blocks = ds.feature_blocks;
    out.features.resize(count, ds.features.cols());
    out.targets.resize(count, ds.targets.cols());
    out.inputs.reserve(static_cast<std::size_t>(count));
    for (Eigen::Index i = 0; i < count; ++i) {
        const Eigen::Index src = order[static_cast<std::size_t>(start + i)];
        out.features.row(i) = ds.features.row(src);
        out.targets.row(i) = ds.targets.row(src);
        out.inputs.push_back(ds.inputs[static_cast<std::size_t>(src)]);
    }
    return out;
}

} // namespace

Dataset generate_dataset(const PreparedArchitecture& arch, const std::vector<TargetSpec>& targets,
                         int n_samples, RandomSource& rng) {
    if (n_samples < 1) throw ContractError("generate_dataset: n_samples must be >= 1");
    if (targets.empty()) throw ContractError("generate_dataset: no targets");
    for (const auto& t : targets) validate_target(t, arch.spec.input_dim());

    Dataset ds;
    ds.target_specs = targets;
    ds.feature_blocks = arch.spec.kind == ArchKind::SM ? arch.spec.n : 1;
    ds.inputs.reserve(static_cast<std::size_t>(n_samples));
    for (int i = 0; i < n_samples; ++i) {
        ds.inputs.push_back(random_density_matrix(static_cast<int>(arch.spec.input_dim()), rng,
                                                  arch.spec.input_ensemble));
    }
    ds.features.resize(n_samples, feature_length(arch.spec));
    ds.targets.resize(n_samples, static_cast<Eigen::Index>(targets.size()));
    parallel_for(static_cast<std::size_t>(n_samples), [&](std::size_t i) {
        const auto row = static_cast<Eigen::Index>(i);
        ds.features.row(row) = features(arch, ds.inputs[i]).values;
        for (std::size_t t = 0; t < targets.size(); ++t) {
            ds.targets(row, static_cast<Eigen::Index>(t)) =
                evaluate_target(targets[t], ds.inputs[i]);
        }
    });
    return ds;
}

std::pair<Dataset, Dataset> split(const Dataset& ds, double train_fraction,
                                  RandomSource* shuffle_rng) {
    if (!(train_fraction > 0.0 && train_fraction < 1.0)) {
        throw ContractError("split: train fraction must lie in (0, 1)");
    }
    const Eigen::Index n = ds.size();
    const Eigen::Index n_train = static_cast<Eigen::Index>(
        std::floor(train_fraction * static_cast<double>(n)));
    if (n_train < 1 || n_train >= n) {
        throw ContractError("split: both sides must be non-empty");
    }
    std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    if (shuffle_rng != nullptr) {
        for (Eigen::Index i = n - 1; i > 0; --i) {
            const auto j = static_cast<Eigen::Index>(
                shuffle_rng->uniform(0.0, static_cast<double>(i + 1)));
            std::swap(order[static_cast<std::size_t>(i)],
                      order[static_cast<std::size_t>(std::min(j, i))]);
        }
    }
    return {take_rows(ds, 0, n_train, order), take_rows(ds, n_train, n - n_train, order)};
}

ReadoutWeights fit_readout(const Dataset& train, std::optional<double> regularization) {
    const Eigen::Index n = train.size();
    const Eigen::Index p = train.features.cols();
    if (n < 1) throw ContractError("fit_readout: empty training set");
    if (train.features.cwiseAbs().maxCoeff() == 0.0) {
        throw NumericError("fit_readout: all-zero feature matrix");
    }
    if (n <= p) {
        std::cerr << "[qelm] warning: training samples (" << n
                  << ") do not exceed the PVM outcome count (" << p
                  << "); the regression may be underdetermined\n";
    }
    if (regularization) {
        const double lambda = *regularization;
        if (lambda < 0) throw ContractError("fit_readout: negative ridge strength");
        const RealMatrix gram = train.features.transpose() * train.features +
                                lambda * RealMatrix::Identity(p, p);
        const RealMatrix rhs = train.features.transpose() * train.targets;
        return ReadoutWeights{Eigen::LDLT<RealMatrix>(gram).solve(rhs).transpose()};
    }
    Eigen::BDCSVD<RealMatrix> svd(train.features, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const RealVector& sv = svd.singularValues();
    const double cutoff = sv.size() > 0 ? kPinvCutoff * sv(0) : 0.0;
    RealVector inv = RealVector::Zero(sv.size());
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        if (sv(i) > cutoff) inv(i) = 1.0 / sv(i);
    }
    // W^T = V diag(1/s) U^T Y, the minimum-norm least-squares solution.
    const RealMatrix wt =
        svd.matrixV() * inv.asDiagonal() * (svd.matrixU().transpose() * train.targets);
    return ReadoutWeights{wt.transpose()};
}

RealVector predict(const ReadoutWeights& w, const FeatureVector& f) {
    if (w.w.cols() != f.values.size()) throw ContractError("predict: dimension mismatch");
    return w.w * f.values;
}

double nmse(const RealVector& y_true, const RealVector& y_pred) {
    if (y_true.size() != y_pred.size()) throw ContractError("nmse: length mismatch");
    if (y_true.size() < 2) throw ContractError("nmse: needs at least two samples");
    const double mean = y_true.mean();
    const double var = (y_true.array() - mean).square().mean();
    if (var <= kVarianceFloor) {
        throw NumericError("nmse: target variance " + std::to_string(var) +
                           " is too small to normalize");
    }
    const double mse = (y_true - y_pred).array().square().mean();
    return mse / var;
}

ExperimentSummary run_experiment(const ArchitectureSpec& spec,
                                 const std::vector<TargetSpec>& targets, int n_samples,
                                 int n_runs, std::uint64_t master_seed,
                                 const ExperimentOptions& options) {
    if (n_runs < 1) throw ContractError("run_experiment: n_runs must be >= 1");
    validate_spec(spec);
    const auto t0 = std::chrono::steady_clock::now();
    const auto n_targets = static_cast<Eigen::Index>(targets.size());
    RealMatrix errors(n_runs, n_targets);
    for (int run = 0; run < n_runs; ++run) {
        try {
            RandomSource run_rng(master_seed, static_cast<std::uint64_t>(run));
            RandomSource arch_rng = run_rng.derive(0);
            RandomSource data_rng = run_rng.derive(1);
            const PreparedArchitecture arch = prepare(spec, arch_rng, options.strategy);
            const Dataset ds = generate_dataset(arch, targets, n_samples, data_rng);
            const auto [train, test] = split(ds, options.train_fraction);
            const ReadoutWeights w = fit_readout(train, options.regularization);
            const RealMatrix predictions = test.features * w.w.transpose();
            for (Eigen::Index t = 0; t < n_targets; ++t) {
                errors(run, t) = nmse(test.targets.col(t), predictions.col(t));
            }
        } catch (const Error& e) {
            throw NumericError("run " + std::to_string(run) + " failed: " + e.what());
        }
    }
    ExperimentSummary summary;
    summary.n_runs = n_runs;
    summary.n_samples = n_samples;
    for (Eigen::Index t = 0; t < n_targets; ++t) {
        TargetErrorSummary s;
        s.label = targets[static_cast<std::size_t>(t)].label;
        s.nmse_mean = errors.col(t).mean();
        if (n_runs > 1) {
            s.nmse_std = std::sqrt((errors.col(t).array() - s.nmse_mean).square().sum() /
                                   static_cast<double>(n_runs - 1));
        }
        summary.per_target.push_back(std::move(s));
    }
    summary.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return summary;
}

} // namespace qelm
