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

#pragma once

#include "sbovqa/sbo.hpp"
#include "sbovqa/statevector.hpp"

namespace sbovqa {

/// A fully resolved variational problem: an ansatz family plus the observable
/// it is scored against. Provides exact and shot-sampled cost evaluations.
struct Problem {
    enum class Ansatz { Qaoa, HardwareEfficient };

    Ansatz ansatz = Ansatz::Qaoa;
    Graph graph;    // QAOA only
    int layers = 1; // QAOA p, or hardware-efficient repetitions
    Observable observable;
    int num_qubits = 0;
    int max_qubits = kDefaultMaxQubits;

    int dimension() const {
        return ansatz == Ansatz::Qaoa ? 2 * layers : num_qubits * layers;
    }

    StateVector state(const Eigen::VectorXd &theta) const;
    double exact_value(const Eigen::VectorXd &theta) const;

    /// Shot estimate with `total_shots` split over the measurement bases.
    double sample_value(const Eigen::VectorXd &theta, long long total_shots,
                        RngStream &rng) const;

    /// The noisy cost estimator in the optimizer-facing form.
    NoisyObjective objective() const;

    static Problem qaoa(Graph graph, int p,
                        int max_qubits = kDefaultMaxQubits);
    static Problem hardware_efficient(int n, int layers, Observable obs,
                                      int max_qubits = kDefaultMaxQubits);
};

} // namespace sbovqa
