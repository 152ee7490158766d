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

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "sbovqa/pauli.hpp"
#include "sbovqa/rng.hpp"

namespace sbovqa {

inline constexpr int kDefaultMaxQubits = 16;

/// Pure n-qubit state. amplitudes[z] is the amplitude of basis state z, with
/// qubit q stored in bit q of z (qubit 0 = least significant bit).
struct StateVector {
    Eigen::VectorXcd amplitudes;
    int num_qubits = 0;
};

/// QAOA angles; gammas drive the problem phases, betas the X mixer. D = 2p.
struct QaoaParams {
    Eigen::VectorXd gammas;
    Eigen::VectorXd betas;

    int layers() const { return static_cast<int>(gammas.size()); }
};

/// Per-basis measurement shot counts K_1..K_nu. The `exact` sentinel makes
/// sample_estimate return the noiseless expectation instead of sampling.
struct ShotPlan {
    std::vector<long long> per_basis;
    bool exact = false;

    static ShotPlan exact_plan() {
        ShotPlan plan;
        plan.exact = true;
        return plan;
    }

    static ShotPlan uniform(int num_bases, long long shots_per_basis);

    /// Spreads `total` shots over the bases as evenly as possible; the first
    /// total % num_bases bases receive one extra shot.
    static ShotPlan split_total(int num_bases, long long total);

    long long total() const;
};

/// p-layer QAOA state for the MaxCut Hamiltonian of g: starting from the
/// uniform superposition, each layer applies the diagonal edge phases
/// exp(-i gamma_l w_ij Z_i Z_j) and then exp(-i beta_l X) on every qubit.
StateVector qaoa_state(const Graph &g, const QaoaParams &params,
                       int max_qubits = kDefaultMaxQubits);

/// Hardware-efficient ansatz on |0...0>: per layer, a Y rotation by one
/// parameter per qubit (params[layer * n + q]) followed by a ladder of
/// controlled-Z gates on neighboring qubits (q, q+1).
StateVector hardware_efficient_state(int n, int layers,
                                     const Eigen::VectorXd &params,
                                     int max_qubits = kDefaultMaxQubits);

/// Noiseless expectation of obs in state: per measurement basis, rotates a
/// copy of the state into the computational frame and sums eigenvalue-
/// weighted probabilities for each member term.
double exact_expectation(const StateVector &state, const Observable &obs);

/// Shot-noise estimator of exact_expectation: draws K_i bitstrings per basis
/// from the rotated state's distribution, maps each to the basis's summed
/// coefficient-weighted eigenvalue, and averages. Unbiased.
double sample_estimate(const StateVector &state, const Observable &obs,
                       const ShotPlan &plan, RngStream &rng);

} // namespace sbovqa
