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

#include "sbovqa/sbo.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "sbovqa/sampling.hpp"

namespace sbovqa {

void SboConfig::validate() const {
    if (!(patch_size > 0.0)) {
        throw std::invalid_argument("patch_size must be positive");
    }
    if (tau < 2) {
        throw std::invalid_argument("need tau >= 2");
    }
    if (iterations < 1) {
        throw std::invalid_argument("need iterations >= 1");
    }
    if (shots_per_sample < 1) {
        throw std::invalid_argument("need shots_per_sample >= 1");
    }
    if (eps_initial < 0.0 || eps_initial > 0.95 * patch_size) {
        throw std::invalid_argument("need 0 <= eps_initial <= 0.95 * side");
    }
    if (!(interior_margin() > 0.0) || interior_margin() >= patch_size) {
        throw std::invalid_argument("need 0 < eps_interior < side");
    }
    if (!(final_margin() > 0.0) || final_margin() >= patch_size) {
        throw std::invalid_argument("need 0 < eps_final < side");
    }
    if (inner.restarts < 1) {
        throw std::invalid_argument("need at least one inner start");
    }
}

double epsilon_schedule(int iteration, const SboConfig &cfg) {
    if (iteration < 1 || iteration > cfg.iterations) {
        throw std::out_of_range("iteration outside 1..M");
    }
    const double eps_last = 0.95 * cfg.patch_size;
    if (cfg.iterations == 1) {
        return cfg.eps_initial;
    }
    const double t = static_cast<double>(iteration - 1) /
                     static_cast<double>(cfg.iterations - 1);
    return cfg.eps_initial + t * (eps_last - cfg.eps_initial);
}

namespace {

struct Minimum {
    Eigen::VectorXd point;
    double value;
};

Minimum projected_gradient_descent(const SurrogateModel<double> &m,
                                   const Box &bounds,
                                   const Eigen::VectorXd &start,
                                   const InnerMinimizeOptions &opts) {
    Eigen::VectorXd x = bounds.clamp(start);
    double fx = evaluate(m, x);
    double step = 1.0;
    for (int it = 0; it < opts.max_iterations; ++it) {
        const Eigen::VectorXd g = gradient(m, x);
        const double proj_grad_norm = (x - bounds.clamp(x - g)).norm();
        if (proj_grad_norm < opts.grad_tol) {
            break;
        }
        // Backtracking line search with an Armijo decrease condition on the
        // projected step; the accepted step warm-starts the next iteration.
        double t = std::min(step * 2.0, 1e3);
        Eigen::VectorXd xn = x;
        double fn = fx;
        bool accepted = false;
        while (t > 1e-16) {
            xn = bounds.clamp(x - t * g);
            fn = evaluate(m, xn);
            if (fn <= fx - 1e-4 * g.dot(x - xn)) {
                accepted = true;
                break;
            }
            t *= 0.5;
        }
        if (!accepted) {
            break;
        }
        const double moved = (xn - x).norm();
        x = xn;
        fx = fn;
        step = t;
        if (moved < opts.step_tol) {
            break;
        }
    }
    return {x, fx};
}

} // namespace

Eigen::VectorXd inner_minimize(const SurrogateModel<double> &m,
                               const Box &bounds,
                               const InnerMinimizeOptions &opts,
                               RngStream &rng) {
    if (m.dimension() != bounds.dimension()) {
        throw std::invalid_argument("model/bounds dimension mismatch");
    }
    std::vector<Eigen::VectorXd> starts;
    starts.push_back(bounds.center());
    Eigen::Index best_sample = 0;
    m.values.minCoeff(&best_sample);
    starts.push_back(bounds.clamp(m.points.col(best_sample)));
    for (int r = 2; r < opts.restarts; ++r) {
        Eigen::VectorXd u(bounds.dimension());
        for (Eigen::Index d = 0; d < u.size(); ++d) {
            u[d] = rng.uniform();
        }
        starts.push_back(bounds.lo + u.cwiseProduct(bounds.hi - bounds.lo));
    }
    Minimum best{starts.front(), std::numeric_limits<double>::infinity()};
    for (const auto &start : starts) {
        const Minimum res = projected_gradient_descent(m, bounds, start, opts);
        if (res.value < best.value) {
            best = res;
        }
    }
    return best.point;
}

SboState sbo_init(const Eigen::VectorXd &theta0, const SboConfig &cfg) {
    cfg.validate();
    if (theta0.size() < 1) {
        throw std::invalid_argument("theta0 must be non-empty");
    }
    SboState state;
    state.center = theta0;
    state.trace.optimizer = "sbo";
    return state;
}

void sbo_iterate(SboState &state, const NoisyObjective &objective,
                 const SboConfig &cfg, const RngStream &rng) {
    const int iteration = state.iteration + 1;
    const double eps = epsilon_schedule(iteration, cfg);
    const auto dim = static_cast<int>(state.center.size());
    RngStream iter_rng = rng.substream(static_cast<std::uint64_t>(iteration));

    const Patch patch{state.center, cfg.patch_size};
    RngStream lhs_rng = iter_rng.substream(0);
    const Eigen::MatrixXd samples = scale_to_box(
        latin_hypercube(cfg.tau, dim, lhs_rng), patch_bounds(patch, 0.0));

    Eigen::VectorXd values(cfg.tau);
    for (int j = 0; j < cfg.tau; ++j) {
        RngStream sample_rng =
            iter_rng.substream(1 + static_cast<std::uint64_t>(j));
        values[j] = objective(samples.col(j), cfg.shots_per_sample,
                              sample_rng);
    }

    const double sigma = cfg.fixed_bandwidth > 0.0
                             ? cfg.fixed_bandwidth
                             : silverman_bandwidth(cfg.tau, dim);
    const SurrogateModel<double> model = fit<double>(samples, values, sigma);

    const Box shrunk = patch_bounds(patch, eps);
    RngStream inner_rng =
        iter_rng.substream(1 + static_cast<std::uint64_t>(cfg.tau));
    const Eigen::VectorXd next =
        inner_minimize(model, shrunk, cfg.inner, inner_rng);

    const double interior_half = 0.5 * (cfg.patch_size - cfg.interior_margin());
    const bool interior =
        ((next - state.center).array().abs() < interior_half).all();
    if (interior) {
        state.minima.push_back(next);
    }

    IterationRecord rec;
    rec.iteration = iteration;
    rec.center = state.center;
    rec.samples = samples;
    rec.values = values;
    rec.iterate = next;
    rec.epsilon = eps;
    rec.best_value = evaluate(model, next);
    rec.shots = cfg.shots_per_sample * cfg.tau;
    rec.entered_minima = interior;
    state.trace.records.push_back(std::move(rec));
    state.trace.total_shots += cfg.shots_per_sample * cfg.tau;

    state.center = next;
    state.iteration = iteration;
}

namespace {

Eigen::VectorXd mean_of_minima_near(const std::vector<Eigen::VectorXd> &minima,
                                    const Eigen::VectorXd &center,
                                    double half_width) {
    Eigen::VectorXd sum = Eigen::VectorXd::Zero(center.size());
    int count = 0;
    for (const auto &m : minima) {
        if (((m - center).array().abs() <= half_width).all()) {
            sum += m;
            ++count;
        }
    }
    if (count == 0) {
        return center;
    }
    return sum / count;
}

} // namespace

Eigen::VectorXd sbo_finalize(const SboState &state, const SboConfig &cfg) {
    const double half = 0.5 * (cfg.patch_size - cfg.final_margin());
    return mean_of_minima_near(state.minima, state.center, half);
}

Eigen::VectorXd sbo_theta_opt_at(const RunTrace &trace, int iterations,
                                 const SboConfig &cfg) {
    if (iterations < 1 || iterations > trace.iterations()) {
        throw std::out_of_range("iterations outside the trace");
    }
    std::vector<Eigen::VectorXd> minima;
    for (int i = 0; i < iterations; ++i) {
        const auto &rec = trace.records[static_cast<std::size_t>(i)];
        if (rec.entered_minima) {
            minima.push_back(rec.iterate);
        }
    }
    const double half = 0.5 * (cfg.patch_size - cfg.final_margin());
    return mean_of_minima_near(
        minima, trace.records[static_cast<std::size_t>(iterations - 1)].iterate,
        half);
}

RunTrace sbo_run(const NoisyObjective &objective, const Eigen::VectorXd &theta0,
                 const SboConfig &cfg, const RngStream &rng) {
    SboState state = sbo_init(theta0, cfg);
    for (int i = 0; i < cfg.iterations; ++i) {
        sbo_iterate(state, objective, cfg, rng);
    }
    state.trace.minima = state.minima;
    state.trace.theta_opt = sbo_finalize(state, cfg);
    return state.trace;
}

} // namespace sbovqa
