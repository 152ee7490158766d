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
#include <string>
#include <vector>

#include "sbovqa/rng.hpp"

namespace sbovqa {

/// Per-parameter compilation complexity of a variational ansatz: lambdas[j]
/// single-qubit Z rotations realize the rotation generated by the j-th
/// parameter. D is the parameter count.
struct AnsatzComplexity {
    std::vector<int> lambdas;

    int dimension() const { return static_cast<int>(lambdas.size()); }
    long long lambda_sum() const;

    void validate() const;
};

/// Bezout-style bound (4 sum lambda_j)^D on the number of critical points of
/// the cost landscape. The value overflows quickly in D, so it is carried in
/// log space; `value` is +inf when not representable as a double.
struct CriticalPointBound {
    double log_value = 0.0; // natural log of the bound
    double value = 0.0;     // exp(log_value), or +inf if too large
};

CriticalPointBound critical_point_bound(const AnsatzComplexity &c);

/// Patch-side lower-bound guide 1 / (4 sum lambda_j), from requiring about
/// one critical point per patch volume.
double patch_size_heuristic(const AnsatzComplexity &c);

/// The heuristic specialized to p-layer QAOA on kappa-regular graphs
/// (per-layer lambdas 1 and kappa): 1 / (4 p (kappa + 1)).
double qaoa_patch_size(int p, int kappa);

/// Ansatz complexity of p-layer QAOA on a kappa-regular graph, lambdas
/// alternating 1 (mixer) and kappa (phase layer) over 2p parameters.
AnsatzComplexity qaoa_complexity(int p, int kappa);

/// Final optimization error of one run at patch size ell; run_index
/// distinguishes the independent repetitions.
using PatchErrorFn =
    std::function<double(double ell, int run_index, RngStream &rng)>;

struct SweepResult {
    std::vector<double> grid;       // patch sizes, strictly increasing
    std::vector<double> mean_error; // mean final error per grid point
    std::vector<double> stderr_error;
    int runs = 0;
    double ell_star = 0.0; // spline-smoothed minimizer over the grid
};

/// Runs `runs` repetitions of the error function at every grid point,
/// averages, fits a natural cubic spline through (ell, mean error), and
/// locates the spline minimizer by a 1e-3-resolution scan. Repetitions use
/// independent substreams keyed by (grid index, run index).
SweepResult sweep_patch_size(const PatchErrorFn &final_error,
                             const std::vector<double> &grid, int runs,
                             const RngStream &rng);

/// Evenly spaced grid {lo, lo + step, ..., hi} (endpoints included).
std::vector<double> sweep_grid(double lo, double hi, double step);

/// CSV with columns ell, mean_error, stderr, runs.
std::string sweep_to_csv(const SweepResult &result);

struct PatchScalePoint {
    int p = 0;
    int kappa = 0;
    double ell_star = 0.0;
};

struct ScalingFit {
    double alpha = 0.0;
    double beta = 0.0;
    double residual_norm = 0.0; // of the log-space least squares
};

/// Least-squares fit of ell_star = beta * (kappa p + kappa)^(-alpha) on the
/// log-transformed model. Needs >= 2 points with distinct kappa (p + 1).
ScalingFit fit_scaling(const std::vector<PatchScalePoint> &points);

} // namespace sbovqa
