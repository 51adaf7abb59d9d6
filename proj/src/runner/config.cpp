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

#include <json.hpp>

#include "common/errors.hpp"
#include "runner/runner.hpp"

namespace qelm {

namespace {

using nlohmann::json;

HermitianObservable parse_observable(const std::string& text, int input_qubits) {
    if (text.rfind("proj:", 0) == 0) {
        const std::string bits = text.substr(5);
        if (static_cast<int>(bits.size()) != input_qubits) {
            throw UsageError("projector '" + text + "' does not match the input qubit count");
        }
        Eigen::Index index = 0;
        for (char c : bits) {
            if (c != '0' && c != '1') throw UsageError("bad projector bitstring '" + text + "'");
            index = index * 2 + (c - '0');
        }
        const Eigen::Index dim = Eigen::Index{1} << input_qubits;
        ComplexMatrix proj = ComplexMatrix::Zero(dim, dim);
        proj(index, index) = 1.0;
        return HermitianObservable{std::move(proj)};
    }
    if (static_cast<int>(text.size()) != input_qubits) {
        throw UsageError("Pauli string '" + text + "' does not match the input qubit count");
    }
    return HermitianObservable{pauli_string(text)};
}

TargetSpec parse_target(const json& j, int input_qubits) {
    if (!j.is_object() || !j.contains("kind")) {
        throw UsageError("each target needs a 'kind' field");
    }
    const std::string kind = j.at("kind").get<std::string>();
    TargetSpec spec;
    if (kind == "linear") {
        spec = TargetSpec::linear(parse_observable(j.at("observable").get<std::string>(),
                                                   input_qubits),
                                  j.at("observable").get<std::string>());
    } else if (kind == "polynomial") {
        const int degree = j.at("degree").get<int>();
        const std::string obs = j.at("observable").get<std::string>();
        spec = TargetSpec::polynomial(parse_observable(obs, input_qubits), degree,
                                      obs + "_rho^" + std::to_string(degree));
    } else if (kind == "purity") {
        spec = TargetSpec::purity();
    } else if (kind == "renyi") {
        spec = TargetSpec::renyi(j.at("alpha").get<double>());
    } else if (kind == "concurrence") {
        spec = TargetSpec::concurrence_target();
    } else if (kind == "negativity") {
        spec = TargetSpec::negativity_target();
    } else if (kind == "bloch") {
        spec = TargetSpec::bloch(j.at("axis").get<std::string>().at(0));
    } else if (kind == "mutual-information") {
        spec = TargetSpec::mutual_information_target(j.at("dim_a").get<int>());
    } else {
        throw UsageError("unknown target kind '" + kind + "'");
    }
    if (j.contains("label")) spec.label = j.at("label").get<std::string>();
    return spec;
}

ArchitectureSpec parse_architecture(const json& j) {
    ArchitectureSpec spec;
    spec.kind = arch_kind_from_string(j.at("kind").get<std::string>());
    if (j.contains("n")) spec.n = j.at("n").get<int>();
    spec.input_qubits = j.at("input_qubits").get<int>();
    spec.reservoir_qubits = j.at("reservoir_qubits").get<int>();
    if (j.contains("basis")) {
        const std::string basis = j.at("basis").get<std::string>();
        if (basis == "computational" || basis == "z") {
            spec.basis = MeasurementBasis::Computational;
        } else if (basis == "x") {
            spec.basis = MeasurementBasis::XBasis;
        } else {
            throw UsageError("unknown measurement basis '" + basis + "'");
        }
    }
    if (j.contains("ensemble")) {
        const std::string ensemble = j.at("ensemble").get<std::string>();
        if (ensemble == "ginibre") {
            spec.input_ensemble = StateEnsemble::Ginibre;
        } else if (ensemble == "haar-pure") {
            spec.input_ensemble = StateEnsemble::HaarPure;
        } else {
            throw UsageError("unknown state ensemble '" + ensemble + "'");
        }
    }
    return spec;
}

DynamicsProfile parse_dynamics(const json& j) {
    DynamicsProfile profile;
    if (j.is_string()) {
        if (j.get<std::string>() != "paper-default") {
            throw UsageError("unknown dynamics profile '" + j.get<std::string>() + "'");
        }
        return profile;
    }
    if (j.contains("j_scale")) profile.j_scale = j.at("j_scale").get<double>();
    if (j.contains("field")) profile.field = j.at("field").get<double>();
    if (j.contains("time")) profile.time = j.at("time").get<double>();
    return profile;
}

} // namespace

ExperimentConfig parse_config_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw UsageError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw UsageError("config must be a JSON object");

    ExperimentConfig config;
    const bool has_preset = j.contains("preset");
    const bool has_explicit = j.contains("architecture");
    if (has_preset == has_explicit) {
        throw UsageError("config needs exactly one of 'preset' or 'architecture'");
    }
    try {
        if (has_preset) {
            config.preset = j.at("preset").get<std::string>();
        } else {
            ExplicitConfig ec;
            ec.arch = parse_architecture(j.at("architecture"));
            if (j.contains("dynamics")) ec.arch.dynamics = parse_dynamics(j.at("dynamics"));
            if (!j.contains("targets") || !j.at("targets").is_array() ||
                j.at("targets").empty()) {
                throw UsageError("explicit config needs a non-empty 'targets' array");
            }
            for (const auto& t : j.at("targets")) {
                ec.targets.push_back(parse_target(t, ec.arch.input_qubits));
            }
            if (j.contains("n_samples")) ec.n_samples = j.at("n_samples").get<int>();
            if (j.contains("n_runs")) ec.n_runs = j.at("n_runs").get<int>();
            if (j.contains("regularization")) {
                ec.regularization = j.at("regularization").get<double>();
            }
            config.explicit_config = std::move(ec);
        }
        if (j.contains("master_seed")) {
            config.master_seed = j.at("master_seed").get<std::uint64_t>();
        }
        if (j.contains("desk_scale")) config.desk_scale = j.at("desk_scale").get<double>();
        if (j.contains("n_runs") && has_preset) {
            config.n_runs_override = j.at("n_runs").get<int>();
        }
        if (j.contains("n_samples") && has_preset) {
            config.n_samples_override = j.at("n_samples").get<int>();
        }
        if (j.contains("big_compute")) config.big_compute = j.at("big_compute").get<bool>();
        if (j.contains("out")) config.out = j.at("out").get<std::string>();
        if (j.contains("format")) {
            config.format = output_format_from_string(j.at("format").get<std::string>());
        }
    } catch (const json::exception& e) {
        throw UsageError(std::string("malformed config: ") + e.what());
    }
    if (!(config.desk_scale > 0.0 && config.desk_scale <= 1.0)) {
        throw UsageError("desk_scale must lie in (0, 1]");
    }
    return config;
}

} // namespace qelm
