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

#include "sbovqa/benchmark.hpp"

#include <cmath>
#include <numbers>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "sbovqa/io.hpp"
#include "sbovqa/parallel.hpp"
#include "sbovqa/sampling.hpp"

namespace sbovqa {

TrueOptimum true_optimum(const Problem &problem,
                         const TrueOptimumOptions &opts, const RngStream &rng) {
    const int dim = problem.dimension();
    if (dim > opts.dimension_cap) {
        throw std::runtime_error("problem dimension " + std::to_string(dim) +
                                 " exceeds the true-optimum cap of " +
                                 std::to_string(opts.dimension_cap));
    }
    if (opts.starts < 1) {
        throw std::invalid_argument("need at least one start");
    }
    const Box domain = Box::cube(
        Eigen::VectorXd::Constant(dim, std::numbers::pi), 2.0 * std::numbers::pi);
    RngStream starts_rng = rng.substream(0);
    const Eigen::MatrixXd starts = scale_to_box(
        latin_hypercube(opts.starts, dim, starts_rng), domain);
    const auto exact = [&problem](const Eigen::VectorXd &theta) {
        return problem.exact_value(theta);
    };
    TrueOptimum best;
    best.value = std::numeric_limits<double>::infinity();
    best.basin_values.reserve(static_cast<std::size_t>(opts.starts));
    for (int s = 0; s < opts.starts; ++s) {
        const BfgsResult res =
            bfgs_minimize_bounded(exact, starts.col(s), domain, opts.refine);
        best.basin_values.push_back(res.value);
        if (res.value < best.value) {
            best.value = res.value;
            best.argmin = res.x;
        }
    }
    return best;
}

double relative_abs_error(double v_opt, double v_min) {
    if (v_min == 0.0) {
        throw std::invalid_argument(
            "relative error undefined: reference optimum is zero");
    }
    return std::abs(1.0 - v_opt / v_min);
}

void BenchmarkConfig::validate() const {
    if (optimizers.empty()) {
        throw std::invalid_argument("no optimizers selected");
    }
    const std::set<std::string> known = {"sbo", "spsa", "qn"};
    std::set<std::string> seen;
    for (const auto &name : optimizers) {
        if (!known.count(name)) {
            throw std::invalid_argument("unknown optimizer: " + name);
        }
        if (!seen.insert(name).second) {
            throw std::invalid_argument("duplicate optimizer: " + name);
        }
    }
    if (runs < 1) {
        throw std::invalid_argument("need runs >= 1");
    }
    if (iterations < 1) {
        throw std::invalid_argument("need iterations >= 1");
    }
    if (shots_per_iteration < 1) {
        throw std::invalid_argument("need shots_per_iteration >= 1");
    }
    if (shots_per_iteration % sbo.tau != 0) {
        throw std::invalid_argument(
            "shots_per_iteration must be divisible by tau so every sample "
            "point receives the same shot count");
    }
}

std::vector<int> checkpoint_iterations(int iterations) {
    std::vector<int> points;
    if (iterations <= 200) {
        points.reserve(static_cast<std::size_t>(iterations));
        for (int i = 1; i <= iterations; ++i) {
            points.push_back(i);
        }
        return points;
    }
    std::set<int> unique = {1, iterations};
    const double log_max = std::log(static_cast<double>(iterations));
    for (int k = 0; k < 200; ++k) {
        const double t = log_max * k / 199.0;
        unique.insert(static_cast<int>(std::lround(std::exp(t))));
    }
    return {unique.begin(), unique.end()};
}

Eigen::VectorXd initial_point(int dim, std::uint64_t seed) {
    RngStream rng = RngStream(seed, 0xbe9c).substream(1);
    Eigen::VectorXd theta0(dim);
    for (Eigen::Index d = 0; d < theta0.size(); ++d) {
        theta0[d] = rng.uniform(0.0, 2.0 * std::numbers::pi);
    }
    return theta0;
}

namespace {

struct RunOutput {
    RunTrace trace;
    std::vector<BenchmarkRow> rows;
};

RunOutput run_one(const BenchmarkConfig &cfg, const std::string &optimizer,
                  std::size_t arm, int run_index,
                  const Eigen::VectorXd &theta0, double v_min,
                  const std::vector<int> &checkpoints) {
    const NoisyObjective objective = cfg.problem.objective();
    const std::uint64_t seed = cfg.base_seed + static_cast<std::uint64_t>(run_index);
    // Per-arm substream so optimizer arms sharing a seed stay uncorrelated.
    const RngStream rng = RngStream(seed, 0x5b0u).substream(arm);

    RunOutput out;
    SboConfig sbo_cfg = cfg.sbo;
    if (optimizer == "sbo") {
        sbo_cfg.iterations = cfg.iterations;
        sbo_cfg.shots_per_sample = cfg.shots_per_iteration / sbo_cfg.tau;
        out.trace = sbo_run(objective, theta0, sbo_cfg, rng);
    } else if (optimizer == "spsa") {
        SpsaConfig spsa_cfg = cfg.spsa;
        spsa_cfg.iterations = cfg.iterations;
        spsa_cfg.shots_per_iteration = cfg.shots_per_iteration;
        out.trace = spsa_run(objective, theta0, spsa_cfg, rng);
    } else {
        QuasiNewtonConfig qn_cfg = cfg.qn;
        qn_cfg.iterations = cfg.iterations;
        qn_cfg.shots_per_iteration = cfg.shots_per_iteration;
        out.trace = quasi_newton_run(objective, theta0, std::nullopt, qn_cfg,
                                     rng);
    }

    out.rows.reserve(checkpoints.size());
    for (const int iter : checkpoints) {
        Eigen::VectorXd candidate;
        if (optimizer == "sbo") {
            candidate = sbo_theta_opt_at(out.trace, iter, sbo_cfg);
        } else {
            candidate =
                out.trace.records[static_cast<std::size_t>(iter - 1)].iterate;
        }
        BenchmarkRow row;
        row.optimizer = optimizer;
        row.seed = seed;
        row.iteration = iter;
        row.shots = static_cast<long long>(iter) * cfg.shots_per_iteration;
        row.rel_err =
            relative_abs_error(cfg.problem.exact_value(candidate), v_min);
        out.rows.push_back(std::move(row));
    }
    return out;
}

} // namespace

BenchmarkResult run_benchmark(const BenchmarkConfig &cfg) {
    cfg.validate();
    BenchmarkResult result;

    // The reference optimum and the shared initial point are derived from the
    // base seed alone, so every run of a config sees the same problem frame.
    const RngStream root(cfg.base_seed, 0xbe9c);
    result.optimum = true_optimum(cfg.problem, cfg.optimum, root.substream(0));
    if (result.optimum.value == 0.0) {
        throw std::runtime_error(
            "true optimum is zero; the relative error metric is undefined");
    }
    result.theta0 = initial_point(cfg.problem.dimension(), cfg.base_seed);

    const std::vector<int> checkpoints = checkpoint_iterations(cfg.iterations);
    const int tasks = static_cast<int>(cfg.optimizers.size()) * cfg.runs;
    std::vector<RunOutput> outputs(static_cast<std::size_t>(tasks));
    parallel_for(tasks, [&](int task) {
        const auto arm = static_cast<std::size_t>(task) /
                         static_cast<std::size_t>(cfg.runs);
        const int run_index = task % cfg.runs;
        outputs[static_cast<std::size_t>(task)] =
            run_one(cfg, cfg.optimizers[arm], arm, run_index, result.theta0,
                    result.optimum.value, checkpoints);
    });

    for (auto &out : outputs) {
        result.rows.insert(result.rows.end(), out.rows.begin(),
                           out.rows.end());
        result.traces.push_back(std::move(out.trace));
    }

    for (std::size_t arm = 0; arm < cfg.optimizers.size(); ++arm) {
        BenchmarkSummarySeries series;
        for (std::size_t c = 0; c < checkpoints.size(); ++c) {
            double sum = 0.0;
            double sum_sq = 0.0;
            for (int r = 0; r < cfg.runs; ++r) {
                const auto &rows =
                    outputs[arm * static_cast<std::size_t>(cfg.runs) +
                            static_cast<std::size_t>(r)]
                        .rows;
                const double err = rows[c].rel_err;
                sum += err;
                sum_sq += err * err;
            }
            const double mean = sum / cfg.runs;
            const double var =
                cfg.runs > 1
                    ? std::max(0.0, (sum_sq - cfg.runs * mean * mean) /
                                        (cfg.runs - 1))
                    : 0.0;
            series.iterations.push_back(checkpoints[c]);
            series.shots.push_back(static_cast<long long>(checkpoints[c]) *
                                   cfg.shots_per_iteration);
            series.mean_rel_err.push_back(mean);
            series.stderr_rel_err.push_back(std::sqrt(var / cfg.runs));
        }
        result.summary[cfg.optimizers[arm]] = std::move(series);
    }
    return result;
}

std::string benchmark_rows_to_csv(const std::vector<BenchmarkRow> &rows) {
    std::ostringstream out;
    out << "optimizer,seed,iter,shots,rel_err\n";
    for (const auto &row : rows) {
        out << row.optimizer << "," << row.seed << "," << row.iteration << ","
            << row.shots << "," << format_double(row.rel_err) << "\n";
    }
    return out.str();
}

std::string benchmark_summary_to_json(const BenchmarkConfig &cfg,
                                      const BenchmarkResult &result) {
    nlohmann::json doc;
    doc["runs"] = cfg.runs;
    doc["base_seed"] = cfg.base_seed;
    doc["iterations"] = cfg.iterations;
    doc["shots_per_iteration"] = cfg.shots_per_iteration;
    doc["dimension"] = cfg.problem.dimension();
    nlohmann::json theta0 = nlohmann::json::array();
    for (Eigen::Index d = 0; d < result.theta0.size(); ++d) {
        theta0.push_back(result.theta0[d]);
    }
    doc["theta0"] = theta0;
    nlohmann::json optimum;
    optimum["value"] = result.optimum.value;
    nlohmann::json argmin = nlohmann::json::array();
    for (Eigen::Index d = 0; d < result.optimum.argmin.size(); ++d) {
        argmin.push_back(result.optimum.argmin[d]);
    }
    optimum["argmin"] = argmin;
    doc["true_optimum"] = optimum;
    nlohmann::json opts;
    for (const auto &[name, series] : result.summary) {
        nlohmann::json s;
        s["iter"] = series.iterations;
        s["shots"] = series.shots;
        s["mean_rel_err"] = series.mean_rel_err;
        s["stderr_rel_err"] = series.stderr_rel_err;
        opts[name] = std::move(s);
    }
    doc["optimizers"] = opts;
    return doc.dump(2) + "\n";
}

} // namespace sbovqa
