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

#include "sbovqa/scaling.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "sbovqa/io.hpp"
#include "sbovqa/parallel.hpp"
#include "sbovqa/spline.hpp"

namespace sbovqa {

long long AnsatzComplexity::lambda_sum() const {
    long long sum = 0;
    for (const int l : lambdas) {
        sum += l;
    }
    return sum;
}

void AnsatzComplexity::validate() const {
    if (lambdas.empty()) {
        throw std::invalid_argument("need at least one parameter");
    }
    for (const int l : lambdas) {
        if (l < 1) {
            throw std::invalid_argument("every lambda must be >= 1");
        }
    }
}

CriticalPointBound critical_point_bound(const AnsatzComplexity &c) {
    c.validate();
    CriticalPointBound bound;
    bound.log_value = c.dimension() *
                      std::log(4.0 * static_cast<double>(c.lambda_sum()));
    bound.value = bound.log_value < std::log(std::numeric_limits<double>::max())
                      ? std::exp(bound.log_value)
                      : std::numeric_limits<double>::infinity();
    return bound;
}

double patch_size_heuristic(const AnsatzComplexity &c) {
    c.validate();
    return 1.0 / (4.0 * static_cast<double>(c.lambda_sum()));
}

AnsatzComplexity qaoa_complexity(int p, int kappa) {
    if (p < 1 || kappa < 1) {
        throw std::invalid_argument("need p >= 1 and kappa >= 1");
    }
    AnsatzComplexity c;
    c.lambdas.reserve(static_cast<std::size_t>(2 * p));
    for (int layer = 0; layer < p; ++layer) {
        c.lambdas.push_back(kappa); // phase-layer parameter gamma_l
        c.lambdas.push_back(1);     // mixer parameter beta_l
    }
    return c;
}

double qaoa_patch_size(int p, int kappa) {
    if (p < 1 || kappa < 1) {
        throw std::invalid_argument("need p >= 1 and kappa >= 1");
    }
    return 1.0 / (4.0 * p * (kappa + 1.0));
}

SweepResult sweep_patch_size(const PatchErrorFn &final_error,
                             const std::vector<double> &grid, int runs,
                             const RngStream &rng) {
    if (grid.size() < 4) {
        throw std::invalid_argument("need a grid of >= 4 patch sizes");
    }
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
        if (!(grid[i] < grid[i + 1])) {
            throw std::invalid_argument("grid must strictly increase");
        }
    }
    if (runs < 2) {
        throw std::invalid_argument("need >= 2 runs per grid point");
    }
    SweepResult result;
    result.grid = grid;
    result.runs = runs;
    result.mean_error.resize(grid.size());
    result.stderr_error.resize(grid.size());

    // (grid point, run) pairs are independent; each derives its own stream,
    // so the parallel schedule cannot change the numbers.
    const std::size_t tasks = grid.size() * static_cast<std::size_t>(runs);
    std::vector<double> errors(tasks,
                               std::numeric_limits<double>::quiet_NaN());
    std::vector<std::string> failures(tasks);
    parallel_for(static_cast<int>(tasks), [&](int task) {
        const std::size_t g =
            static_cast<std::size_t>(task) / static_cast<std::size_t>(runs);
        const int r = task % runs;
        RngStream run_rng = rng.substream(static_cast<std::uint64_t>(g))
                                .substream(static_cast<std::uint64_t>(r));
        try {
            const double err = final_error(grid[g], r, run_rng);
            if (!std::isfinite(err)) {
                throw std::runtime_error("non-finite final error");
            }
            errors[static_cast<std::size_t>(task)] = err;
        } catch (const std::exception &e) {
            failures[static_cast<std::size_t>(task)] = e.what();
        }
    });

    std::string abort_report;
    for (std::size_t g = 0; g < grid.size(); ++g) {
        double sum = 0.0;
        double sum_sq = 0.0;
        int completed = 0;
        for (int r = 0; r < runs; ++r) {
            const std::size_t task =
                g * static_cast<std::size_t>(runs) + static_cast<std::size_t>(r);
            if (!failures[task].empty()) {
                if (abort_report.empty()) {
                    abort_report = "patch sweep aborted: ell=" +
                                   format_double(grid[g]) + " run " +
                                   std::to_string(r) + ": " + failures[task];
                }
                continue;
            }
            sum += errors[task];
            sum_sq += errors[task] * errors[task];
            ++completed;
        }
        // Partial per-ell results stay available even when some runs failed.
        const double mean = completed > 0 ? sum / completed : 0.0;
        const double var =
            completed > 1
                ? std::max(0.0, (sum_sq - completed * mean * mean) /
                                    (completed - 1))
                : 0.0;
        result.mean_error[g] = mean;
        result.stderr_error[g] = completed > 0 ? std::sqrt(var / completed)
                                               : 0.0;
    }
    if (!abort_report.empty()) {
        std::size_t complete_points = 0;
        for (std::size_t g = 0; g < grid.size(); ++g) {
            bool all_ok = true;
            for (int r = 0; r < runs; ++r) {
                all_ok &= failures[g * static_cast<std::size_t>(runs) +
                                   static_cast<std::size_t>(r)]
                              .empty();
            }
            complete_points += all_ok;
        }
        throw std::runtime_error(
            abort_report + " (" + std::to_string(complete_points) + "/" +
            std::to_string(grid.size()) + " grid points fully completed)");
    }

    const Eigen::Map<const Eigen::VectorXd> x(grid.data(),
                                              static_cast<Eigen::Index>(
                                                  grid.size()));
    const Eigen::Map<const Eigen::VectorXd> y(
        result.mean_error.data(),
        static_cast<Eigen::Index>(result.mean_error.size()));
    const NaturalCubicSpline<double> spline{Eigen::VectorXd(x),
                                            Eigen::VectorXd(y)};
    double best_t = grid.front();
    double best_v = spline(best_t);
    const double step = 1e-3;
    for (double t = grid.front(); t < grid.back() + 0.5 * step; t += step) {
        const double clipped = std::min(t, grid.back());
        const double v = spline(clipped);
        if (v < best_v) {
            best_v = v;
            best_t = clipped;
        }
    }
    result.ell_star = best_t;
    return result;
}

std::vector<double> sweep_grid(double lo, double hi, double step) {
    if (!(step > 0.0) || !(lo < hi)) {
        throw std::invalid_argument("need lo < hi and step > 0");
    }
    std::vector<double> grid;
    const int count = static_cast<int>(std::round((hi - lo) / step));
    for (int k = 0; k <= count; ++k) {
        grid.push_back(lo + k * step);
    }
    return grid;
}

std::string sweep_to_csv(const SweepResult &result) {
    std::ostringstream out;
    out << "ell,mean_error,stderr,runs\n";
    for (std::size_t g = 0; g < result.grid.size(); ++g) {
        out << format_double(result.grid[g]) << ","
            << format_double(result.mean_error[g]) << ","
            << format_double(result.stderr_error[g]) << "," << result.runs
            << "\n";
    }
    return out.str();
}

ScalingFit fit_scaling(const std::vector<PatchScalePoint> &points) {
    if (points.size() < 2) {
        throw std::invalid_argument("need >= 2 points");
    }
    const auto m = static_cast<Eigen::Index>(points.size());
    Eigen::MatrixXd design(m, 2);
    Eigen::VectorXd target(m);
    for (Eigen::Index i = 0; i < m; ++i) {
        const auto &pt = points[static_cast<std::size_t>(i)];
        if (pt.p < 1 || pt.kappa < 1 || !(pt.ell_star > 0.0)) {
            throw std::invalid_argument("need p, kappa >= 1 and ell_star > 0");
        }
        const double scale = static_cast<double>(pt.kappa) * (pt.p + 1);
        design(i, 0) = 1.0;
        design(i, 1) = -std::log(scale);
        target[i] = std::log(pt.ell_star);
    }
    if ((design.col(1).array() - design(0, 1)).abs().maxCoeff() < 1e-12) {
        throw std::invalid_argument(
            "degenerate design: all kappa (p + 1) identical");
    }
    const Eigen::Vector2d coeffs =
        design.colPivHouseholderQr().solve(target);
    ScalingFit fitted;
    fitted.beta = std::exp(coeffs[0]);
    fitted.alpha = coeffs[1];
    fitted.residual_norm = (design * coeffs - target).norm();
    return fitted;
}

} // namespace sbovqa
