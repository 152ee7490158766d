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

#include <functional>
#include <optional>

#include "sbovqa/patch.hpp"
#include "sbovqa/sbo.hpp"
#include "sbovqa/trace.hpp"

namespace sbovqa {

/// Simultaneous-perturbation stochastic approximation gains. Step sizes
/// follow a_k = a / (k + 1 + A)^alpha and perturbations c_k = c / (k + 1)^gamma
/// with k starting at 0.
struct SpsaConfig {
    double a = 0.2;
    double c = 0.2;
    double alpha = 0.602;
    double gamma = 0.101;
    double stability_offset = 0.0; // A
    int iterations = 100;
    long long shots_per_iteration = 200; // split over the two probes

    void validate() const;
};

/// SPSA: each iteration draws a Rademacher direction, probes the objective at
/// theta +- c_k * delta (consuming shots_per_iteration in total), forms the
/// two-point gradient estimate, and steps against it.
RunTrace spsa_run(const NoisyObjective &objective,
                  const Eigen::VectorXd &theta0, const SpsaConfig &cfg,
                  const RngStream &rng);

struct QuasiNewtonConfig {
    double fd_step = 1e-2; // central-difference step on the noisy objective
    double max_step = 0.5; // trust cap on the BFGS step length
    int iterations = 100;
    long long shots_per_iteration = 900; // split over the 2D + 1 estimates

    void validate() const;
};

/// Bounded quasi-Newton baseline on the noisy objective: per iteration one
/// center estimate plus 2D central-difference estimates (2D + 1 calls,
/// together consuming exactly shots_per_iteration), a damped BFGS update, and
/// a norm-capped step projected onto the bounds when given.
RunTrace quasi_newton_run(const NoisyObjective &objective,
                          const Eigen::VectorXd &theta0,
                          const std::optional<Box> &bounds,
                          const QuasiNewtonConfig &cfg, const RngStream &rng);

struct BfgsOptions {
    double grad_tol = 1e-8;
    double step_tol = 1e-12;
    double fd_step = 1e-4;
    int max_iterations = 300;
};

struct BfgsResult {
    Eigen::VectorXd x;
    double value = 0.0;
    double grad_norm = 0.0;
    int iterations = 0;
};

/// Deterministic bounded BFGS with backtracking line search and central
/// finite-difference gradients, for cheap noiseless objectives (surrogate-free
/// reference optimization, true-optimum search).
BfgsResult
bfgs_minimize_bounded(const std::function<double(const Eigen::VectorXd &)> &f,
                      const Eigen::VectorXd &x0, const Box &bounds,
                      const BfgsOptions &opts = {});

} // namespace sbovqa
