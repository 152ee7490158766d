// Copyright 2026 The sbovqa authors
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

#include "sbovqa/problem.hpp"

#include <stdexcept>

namespace sbovqa {

StateVector Problem::state(const Eigen::VectorXd &theta) const {
    if (theta.size() != dimension()) {
        throw std::invalid_argument("parameter dimension mismatch");
    }
    if (ansatz == Ansatz::Qaoa) {
        QaoaParams params;
        params.gammas = theta.head(layers);
        params.betas = theta.tail(layers);
        return qaoa_state(graph, params, max_qubits);
    }
    return hardware_efficient_state(num_qubits, layers, theta, max_qubits);
}

double Problem::exact_value(const Eigen::VectorXd &theta) const {
    return exact_expectation(state(theta), observable);
}

double Problem::sample_value(const Eigen::VectorXd &theta,
                             long long total_shots, RngStream &rng) const {
    const ShotPlan plan =
        ShotPlan::split_total(observable.num_bases(), total_shots);
    return sample_estimate(state(theta), observable, plan, rng);
}

NoisyObjective Problem::objective() const {
    return [problem = *this](const Eigen::VectorXd &theta, long long shots,
                             RngStream &rng) {
        return problem.sample_value(theta, shots, rng);
    };
}

Problem Problem::qaoa(Graph graph, int p, int max_qubits) {
    if (p < 1) {
        throw std::invalid_argument("need p >= 1");
    }
    Problem problem;
    problem.ansatz = Ansatz::Qaoa;
    problem.observable = maxcut_observable(graph);
    problem.num_qubits = graph.num_vertices;
    problem.graph = std::move(graph);
    problem.layers = p;
    problem.max_qubits = max_qubits;
    return problem;
}

Problem Problem::hardware_efficient(int n, int layers, Observable obs,
                                    int max_qubits) {
    if (layers < 1) {
        throw std::invalid_argument("need layers >= 1");
    }
    if (obs.num_qubits != n) {
        throw std::invalid_argument("observable qubit count mismatch");
    }
    Problem problem;
    problem.ansatz = Ansatz::HardwareEfficient;
    problem.observable = std::move(obs);
    problem.num_qubits = n;
    problem.layers = layers;
    problem.max_qubits = max_qubits;
    return problem;
}

} // namespace sbovqa
