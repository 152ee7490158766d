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
#include <functional>

#include "sbovqa/patch.hpp"
#include "sbovqa/rng.hpp"
#include "sbovqa/surrogate.hpp"
#include "sbovqa/trace.hpp"

namespace sbovqa {

/// A shot-budgeted noisy objective: returns an estimate of the cost at theta
/// formed from `shots` circuit executions drawn from `rng`.
using NoisyObjective =
    std::function<double(const Eigen::VectorXd &, long long, RngStream &)>;

struct InnerMinimizeOptions {
    int restarts = 4;
    double grad_tol = 1e-8;
    double step_tol = 1e-10;
    int max_iterations = 500;
};

/// Settings of the surrogate patch walk. The shrink margins default to the
/// working heuristics eps_initial = 0, eps_interior = side/20 and
/// eps_final = side/2; negative values mean "derive from patch_size".
struct SboConfig {
    double patch_size = 0.2;      // hypercube side, per dimension
    int tau = 20;                 // samples per patch
    int iterations = 100;         // M
    long long shots_per_sample = 100; // shots per cost estimate
    double eps_initial = 0.0;
    double eps_interior = -1.0;
    double eps_final = -1.0;
    double fixed_bandwidth = 0.0; // <= 0: Silverman from (tau, dim)
    InnerMinimizeOptions inner;

    double interior_margin() const {
        return eps_interior < 0.0 ? patch_size / 20.0 : eps_interior;
    }
    double final_margin() const {
        return eps_final < 0.0 ? patch_size / 2.0 : eps_final;
    }

    void validate() const;
};

/// Linear shrink schedule: eps grows from eps_initial at iteration 1 to
/// 0.95 * patch_size at iteration M (the last box keeps 5% of the side so the
/// constrained minimization never degenerates). iteration is 1-based.
double epsilon_schedule(int iteration, const SboConfig &cfg);

/// Minimizes the surrogate over the box by projected gradient descent with
/// backtracking line search, multi-started from the box center, the lowest
/// sample point, and restarts - 2 random interior points. Returns the
/// feasible point with the lowest surrogate value among all starts.
Eigen::VectorXd inner_minimize(const SurrogateModel<double> &m,
                               const Box &bounds,
                               const InnerMinimizeOptions &opts,
                               RngStream &rng);

/// Running state of one optimization: the current patch center, how many
/// iterations completed, the accepted interior minima, and the trace so far.
struct SboState {
    Eigen::VectorXd center;
    int iteration = 0;
    std::vector<Eigen::VectorXd> minima;
    RunTrace trace;
};

SboState sbo_init(const Eigen::VectorXd &theta0, const SboConfig &cfg);

/// One patch iteration: Latin-hypercube samples the patch, estimates the
/// objective at each point, fits the surrogate, minimizes it over the
/// eps-shrunk box, moves the center there, and appends the minimizer to the
/// minima list when it is interior to the eps_interior box. Randomness comes
/// from per-iteration substreams of `rng`, so replays are exact and the tau
/// estimates may be evaluated concurrently.
void sbo_iterate(SboState &state, const NoisyObjective &objective,
                 const SboConfig &cfg, const RngStream &rng);

/// Coordinate-wise mean of the recorded minima that fall inside the hypercube
/// of side patch_size - eps_final around the final iterate; the final iterate
/// itself when that set is empty.
Eigen::VectorXd sbo_finalize(const SboState &state, const SboConfig &cfg);

/// theta_opt the run would report had it stopped after `iterations` records
/// of the trace. Used to score intermediate progress without extra shots.
Eigen::VectorXd sbo_theta_opt_at(const RunTrace &trace, int iterations,
                                 const SboConfig &cfg);

/// Full run: M iterations from a patch centered at theta0, then finalize.
/// Total shots are exactly shots_per_sample * tau * iterations.
RunTrace sbo_run(const NoisyObjective &objective, const Eigen::VectorXd &theta0,
                 const SboConfig &cfg, const RngStream &rng);

} // namespace sbovqa
