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

#include <map>
#include <string>
#include <vector>

#include "sbovqa/baselines.hpp"
#include "sbovqa/problem.hpp"

namespace sbovqa {

struct TrueOptimum {
    double value = 0.0;
    Eigen::VectorXd argmin;
    std::vector<double> basin_values; // one refined value per start, in order
};

struct TrueOptimumOptions {
    int starts = 50;
    int dimension_cap = 16;
    BfgsOptions refine;
};

/// Global reference optimum of the exact (noiseless) objective: multi-start
/// bounded quasi-Newton from Latin-hypercube starts over [0, 2pi)^D, refined
/// until the projected gradient is below refine.grad_tol.
TrueOptimum true_optimum(const Problem &problem,
                         const TrueOptimumOptions &opts, const RngStream &rng);

/// |1 - v_opt / v_min|. Throws when v_min == 0 (the metric is undefined).
double relative_abs_error(double v_opt, double v_min);

/// One scored point of an optimization run.
struct BenchmarkRow {
    std::string optimizer;
    std::uint64_t seed = 0;
    int iteration = 0;
    long long shots = 0;
    double rel_err = 0.0;
};

struct BenchmarkConfig {
    Problem problem;
    std::vector<std::string> optimizers = {"sbo", "spsa"}; // of sbo, spsa, qn
    int runs = 20;
    std::uint64_t base_seed = 1;
    long long shots_per_iteration = 5000; // equal for every optimizer
    int iterations = 100;
    SboConfig sbo;
    SpsaConfig spsa;
    QuasiNewtonConfig qn;
    TrueOptimumOptions optimum;

    void validate() const;
};

struct BenchmarkSummarySeries {
    std::vector<int> iterations;
    std::vector<long long> shots;
    std::vector<double> mean_rel_err;
    std::vector<double> stderr_rel_err;
};

struct BenchmarkResult {
    TrueOptimum optimum;
    Eigen::VectorXd theta0; // shared initial point
    std::vector<BenchmarkRow> rows;
    std::map<std::string, BenchmarkSummarySeries> summary;
    std::vector<RunTrace> traces; // one per (optimizer, seed), row order
};

/// Checkpoints at which intermediate error is scored: every iteration up to
/// M = 200, a geometric subset (always containing 1 and M) beyond that.
std::vector<int> checkpoint_iterations(int iterations);

/// Seed-derived initial parameter point, uniform over [0, 2pi)^dim. The
/// benchmark uses one such point (from its base seed) for all runs.
Eigen::VectorXd initial_point(int dim, std::uint64_t seed);

/// Runs every optimizer for every seed at the same per-iteration shot budget
/// from one shared initial point, scoring intermediate iterates on the exact
/// objective against the true optimum. Runs execute concurrently on
/// independent substreams; outputs are deterministic for a fixed config.
BenchmarkResult run_benchmark(const BenchmarkConfig &cfg);

/// CSV with header optimizer,seed,iter,shots,rel_err.
std::string benchmark_rows_to_csv(const std::vector<BenchmarkRow> &rows);

/// JSON document with per-optimizer mean / standard-error series plus the
/// reference optimum and run metadata.
std::string benchmark_summary_to_json(const BenchmarkConfig &cfg,
                                      const BenchmarkResult &result);

} // namespace sbovqa
