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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>
#include <numbers>

#include "sbovqa/benchmark.hpp"

using namespace sbovqa;

namespace {

Graph single_edge() {
    Graph g;
    g.num_vertices = 2;
    g.edges = {{0, 1, 1.0}};
    return g;
}

BenchmarkConfig tiny_benchmark() {
    RngStream graph_rng(11);
    BenchmarkConfig cfg;
    cfg.problem = Problem::qaoa(random_connected_graph(4, 0.5, graph_rng), 1);
    cfg.optimizers = {"sbo", "spsa", "qn"};
    cfg.runs = 2;
    cfg.base_seed = 5;
    cfg.shots_per_iteration = 200;
    cfg.iterations = 5;
    cfg.sbo.tau = 10;
    cfg.optimum.starts = 12;
    return cfg;
}

} // namespace

TEST_CASE("relative absolute error closed forms") {
    CHECK(relative_abs_error(-2.0, -2.0) == 0.0);
    CHECK(relative_abs_error(0.0, -2.0) == 1.0);
    CHECK(relative_abs_error(-1.8, -2.0) == doctest::Approx(0.1));
    CHECK_THROWS_AS(relative_abs_error(1.0, 0.0), std::invalid_argument);
}

TEST_CASE("single-edge maxcut reaches the perfect cut at p=1") {
    const Problem problem = Problem::qaoa(single_edge(), 1);
    const TrueOptimum opt = true_optimum(problem, {}, RngStream(1));
    CHECK(opt.value == doctest::Approx(-1.0).epsilon(1e-8));
    CHECK(static_cast<int>(opt.basin_values.size()) == 50);

    // Coarse grid-scan oracle over the period.
    double grid_best = 1e9;
    for (double gamma = 0.0; gamma < 2.0 * std::numbers::pi; gamma += 0.01) {
        for (double beta = 0.0; beta < std::numbers::pi; beta += 0.01) {
            Eigen::VectorXd theta(2);
            theta << gamma, beta;
            grid_best = std::min(grid_best, problem.exact_value(theta));
        }
    }
    CHECK(opt.value <= grid_best + 1e-6);
}

TEST_CASE("zero angles give zero cost, so the optimum is never positive") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        RngStream rng(seed);
        const Problem problem =
            Problem::qaoa(random_connected_graph(4, 0.6, rng), 2);
        CHECK(problem.exact_value(Eigen::VectorXd::Zero(4)) ==
              doctest::Approx(0.0).epsilon(1e-12));
        TrueOptimumOptions opts;
        opts.starts = 20;
        const TrueOptimum opt = true_optimum(problem, opts, RngStream(seed));
        CHECK(opt.value < 0.0);
    }
}

TEST_CASE("true optimum replays identically and respects the cap") {
    const Problem problem = Problem::qaoa(single_edge(), 1);
    const TrueOptimum a = true_optimum(problem, {}, RngStream(3));
    const TrueOptimum b = true_optimum(problem, {}, RngStream(3));
    CHECK(a.value == b.value);
    CHECK((a.argmin - b.argmin).norm() == 0.0);

    TrueOptimumOptions capped;
    capped.dimension_cap = 1;
    CHECK_THROWS_AS(true_optimum(problem, capped, RngStream(0)),
                    std::runtime_error);
}

TEST_CASE("a benchmark run is budget-matched, scored, and deterministic") {
    const BenchmarkConfig cfg = tiny_benchmark();
    const BenchmarkResult result = run_benchmark(cfg);

    const std::size_t checkpoints = 5;
    REQUIRE(result.rows.size() == 3 * 2 * checkpoints);

    // Budget matching: identical cumulative shots across optimizers at every
    // checkpoint, and errors are non-negative.
    std::map<int, std::set<long long>> shots_at_iter;
    for (const auto &row : result.rows) {
        shots_at_iter[row.iteration].insert(row.shots);
        CHECK(row.rel_err >= 0.0);
    }
    for (const auto &[iter, shots] : shots_at_iter) {
        CHECK(shots.size() == 1);
        CHECK(*shots.begin() == iter * cfg.shots_per_iteration);
    }

    // Every run's trace accounts the same exact budget.
    for (const auto &trace : result.traces) {
        CHECK(trace.total_shots ==
              static_cast<long long>(cfg.iterations) *
                  cfg.shots_per_iteration);
    }

    const BenchmarkResult again = run_benchmark(cfg);
    CHECK(benchmark_rows_to_csv(again.rows) ==
          benchmark_rows_to_csv(result.rows));
    CHECK(benchmark_summary_to_json(cfg, again) ==
          benchmark_summary_to_json(cfg, result));
}

TEST_CASE("one seed and one iteration produce one row per optimizer") {
    BenchmarkConfig cfg = tiny_benchmark();
    cfg.runs = 1;
    cfg.iterations = 1;
    const BenchmarkResult result = run_benchmark(cfg);
    CHECK(result.rows.size() == 3);
    const std::string csv = benchmark_rows_to_csv(result.rows);
    CHECK(csv.rfind("optimizer,seed,iter,shots,rel_err\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
}

TEST_CASE("config validation catches bad shot splits and names") {
    BenchmarkConfig cfg = tiny_benchmark();
    cfg.shots_per_iteration = 205; // not divisible by tau = 10
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = tiny_benchmark();
    cfg.optimizers = {"sbo", "sbo"};
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = tiny_benchmark();
    cfg.optimizers = {"nelder-mead"};
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("checkpoint cadence is dense up to 200 and sparse beyond") {
    CHECK(checkpoint_iterations(5) == std::vector<int>{1, 2, 3, 4, 5});
    const auto dense = checkpoint_iterations(200);
    CHECK(dense.size() == 200);
    const auto sparse = checkpoint_iterations(100000);
    CHECK(sparse.size() < 250);
    CHECK(sparse.front() == 1);
    CHECK(sparse.back() == 100000);
    for (std::size_t i = 1; i < sparse.size(); ++i) {
        CHECK(sparse[i] > sparse[i - 1]);
    }
}

TEST_CASE("hardware-efficient problems with multiple bases benchmark too") {
    const Observable obs = group_commuting(
        {{1.0, "ZZI"}, {1.0, "IZZ"}, {0.5, "XII"}, {0.5, "IXI"}, {0.5, "IIX"}});
    REQUIRE(obs.num_bases() == 2);
    BenchmarkConfig cfg;
    cfg.problem = Problem::hardware_efficient(3, 2, obs);
    cfg.optimizers = {"sbo", "spsa"};
    cfg.runs = 1;
    cfg.iterations = 3;
    cfg.shots_per_iteration = 240;
    cfg.sbo.tau = 8;
    cfg.optimum.starts = 8;
    const BenchmarkResult result = run_benchmark(cfg);
    CHECK(result.rows.size() == 6);
    for (const auto &row : result.rows) {
        CHECK(std::isfinite(row.rel_err));
    }
}
