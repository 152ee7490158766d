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

#include "sbovqa/baselines.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace sbovqa {

void SpsaConfig::validate() const {
    if (!(a > 0.0) || !(c > 0.0)) {
        throw std::invalid_argument("need a > 0 and c > 0");
    }
    if (!(gamma > 0.0 && gamma < alpha && alpha <= 1.0)) {
        throw std::invalid_argument("need 0 < gamma < alpha <= 1");
    }
    if (stability_offset < 0.0) {
        throw std::invalid_argument("need stability offset >= 0");
    }
    if (iterations < 1 || shots_per_iteration < 2) {
        throw std::invalid_argument("need iterations >= 1 and >= 2 shots");
    }
}

RunTrace spsa_run(const NoisyObjective &objective,
                  const Eigen::VectorXd &theta0, const SpsaConfig &cfg,
                  const RngStream &rng) {
    cfg.validate();
    const Eigen::Index dim = theta0.size();
    RunTrace trace;
    trace.optimizer = "spsa";
    Eigen::VectorXd theta = theta0;
    const long long shots_plus =
        cfg.shots_per_iteration / 2 + cfg.shots_per_iteration % 2;
    const long long shots_minus = cfg.shots_per_iteration / 2;
    for (int k = 0; k < cfg.iterations; ++k) {
        RngStream iter_rng = rng.substream(static_cast<std::uint64_t>(k));
        RngStream delta_rng = iter_rng.substream(0);
        Eigen::VectorXd delta(dim);
        for (Eigen::Index d = 0; d < dim; ++d) {
            delta[d] = delta_rng.next_u64() & 1 ? 1.0 : -1.0;
        }
        const double ck = cfg.c / std::pow(k + 1.0, cfg.gamma);
        const double ak =
            cfg.a / std::pow(k + 1.0 + cfg.stability_offset, cfg.alpha);

        RngStream plus_rng = iter_rng.substream(1);
        RngStream minus_rng = iter_rng.substream(2);
        const double v_plus = objective(theta + ck * delta, shots_plus,
                                        plus_rng);
        const double v_minus = objective(theta - ck * delta, shots_minus,
                                         minus_rng);
        const Eigen::VectorXd grad_est =
            (v_plus - v_minus) / (2.0 * ck) * delta.cwiseInverse();
        const Eigen::VectorXd next = theta - ak * grad_est;

        IterationRecord rec;
        rec.iteration = k + 1;
        rec.center = theta;
        rec.samples.resize(dim, 2);
        rec.samples.col(0) = theta + ck * delta;
        rec.samples.col(1) = theta - ck * delta;
        rec.values.resize(2);
        rec.values << v_plus, v_minus;
        rec.iterate = next;
        rec.best_value = 0.5 * (v_plus + v_minus);
        rec.shots = cfg.shots_per_iteration;
        trace.records.push_back(std::move(rec));
        trace.total_shots += cfg.shots_per_iteration;
        theta = next;
    }
    trace.theta_opt = theta;
    return trace;
}

void QuasiNewtonConfig::validate() const {
    if (!(fd_step > 0.0) || !(max_step > 0.0)) {
        throw std::invalid_argument("need positive fd_step and max_step");
    }
    if (iterations < 1 || shots_per_iteration < 1) {
        throw std::invalid_argument("need iterations >= 1 and shots >= 1");
    }
}

namespace {

/// Splits `total` over `calls` estimator invocations; the first total % calls
/// invocations receive one extra shot, so the sum is exactly `total`.
long long shots_for_call(long long total, long long calls, long long index) {
    return total / calls + (index < total % calls ? 1 : 0);
}

void bfgs_update(Eigen::MatrixXd &inv_hessian, const Eigen::VectorXd &s,
                 const Eigen::VectorXd &y) {
    const double sy = s.dot(y);
    if (!(sy > 1e-12 * s.norm() * y.norm())) {
        return; // curvature too weak or negative; keep the previous estimate
    }
    const double rho = 1.0 / sy;
    const Eigen::MatrixXd identity =
        Eigen::MatrixXd::Identity(s.size(), s.size());
    const Eigen::MatrixXd left = identity - rho * s * y.transpose();
    inv_hessian =
        left * inv_hessian * left.transpose() + rho * s * s.transpose();
}

} // namespace

RunTrace quasi_newton_run(const NoisyObjective &objective,
                          const Eigen::VectorXd &theta0,
                          const std::optional<Box> &bounds,
                          const QuasiNewtonConfig &cfg, const RngStream &rng) {
    cfg.validate();
    const Eigen::Index dim = theta0.size();
    const long long calls = 2 * dim + 1;
    if (cfg.shots_per_iteration < calls) {
        throw std::invalid_argument(
            "shot budget below one shot per estimator call");
    }
    RunTrace trace;
    trace.optimizer = "qn";
    Eigen::VectorXd theta = theta0;
    Eigen::MatrixXd inv_hessian = Eigen::MatrixXd::Identity(dim, dim);
    Eigen::VectorXd prev_theta;
    Eigen::VectorXd prev_grad;
    for (int k = 0; k < cfg.iterations; ++k) {
        RngStream iter_rng = rng.substream(static_cast<std::uint64_t>(k));
        long long call = 0;
        RngStream center_rng = iter_rng.substream(0);
        const double f_center =
            objective(theta, shots_for_call(cfg.shots_per_iteration, calls, 0),
                      center_rng);
        ++call;

        Eigen::MatrixXd probes(dim, calls);
        Eigen::VectorXd probe_values(calls);
        probes.col(0) = theta;
        probe_values[0] = f_center;
        Eigen::VectorXd grad(dim);
        for (Eigen::Index d = 0; d < dim; ++d) {
            Eigen::VectorXd step = Eigen::VectorXd::Zero(dim);
            step[d] = cfg.fd_step;
            RngStream plus_rng =
                iter_rng.substream(static_cast<std::uint64_t>(call));
            const double f_plus = objective(
                theta + step,
                shots_for_call(cfg.shots_per_iteration, calls, call),
                plus_rng);
            probes.col(call) = theta + step;
            probe_values[call] = f_plus;
            ++call;
            RngStream minus_rng =
                iter_rng.substream(static_cast<std::uint64_t>(call));
            const double f_minus = objective(
                theta - step,
                shots_for_call(cfg.shots_per_iteration, calls, call),
                minus_rng);
            probes.col(call) = theta - step;
            probe_values[call] = f_minus;
            ++call;
            grad[d] = (f_plus - f_minus) / (2.0 * cfg.fd_step);
        }

        if (k > 0) {
            bfgs_update(inv_hessian, theta - prev_theta, grad - prev_grad);
        }
        Eigen::VectorXd direction = -(inv_hessian * grad);
        const double norm = direction.norm();
        if (norm > cfg.max_step) {
            direction *= cfg.max_step / norm;
        }
        Eigen::VectorXd next = theta + direction;
        if (bounds) {
            next = bounds->clamp(next);
        }

        IterationRecord rec;
        rec.iteration = k + 1;
        rec.center = theta;
        rec.samples = probes;
        rec.values = probe_values;
        rec.iterate = next;
        rec.best_value = f_center;
        rec.shots = cfg.shots_per_iteration;
        trace.records.push_back(std::move(rec));
        trace.total_shots += cfg.shots_per_iteration;

        prev_theta = theta;
        prev_grad = grad;
        theta = next;
    }
    trace.theta_opt = theta;
    return trace;
}

BfgsResult
bfgs_minimize_bounded(const std::function<double(const Eigen::VectorXd &)> &f,
                      const Eigen::VectorXd &x0, const Box &bounds,
                      const BfgsOptions &opts) {
    const Eigen::Index dim = x0.size();
    const auto fd_gradient = [&](const Eigen::VectorXd &x) {
        Eigen::VectorXd g(dim);
        for (Eigen::Index d = 0; d < dim; ++d) {
            Eigen::VectorXd step = Eigen::VectorXd::Zero(dim);
            step[d] = opts.fd_step;
            g[d] = (f(x + step) - f(x - step)) / (2.0 * opts.fd_step);
        }
        return g;
    };

    Eigen::VectorXd x = bounds.clamp(x0);
    double fx = f(x);
    Eigen::VectorXd grad = fd_gradient(x);
    Eigen::MatrixXd inv_hessian = Eigen::MatrixXd::Identity(dim, dim);
    int it = 0;
    double grad_norm = (x - bounds.clamp(x - grad)).norm();
    for (; it < opts.max_iterations; ++it) {
        if (grad_norm < opts.grad_tol) {
            break;
        }
        Eigen::VectorXd direction = -(inv_hessian * grad);
        if (direction.dot(grad) >= 0.0) {
            direction = -grad; // fall back to steepest descent
        }
        double t = 1.0;
        Eigen::VectorXd xn = x;
        double fn = fx;
        bool accepted = false;
        while (t > 1e-16) {
            xn = bounds.clamp(x + t * direction);
            fn = f(xn);
            if (fn <= fx + 1e-4 * grad.dot(xn - x)) {
                accepted = true;
                break;
            }
            t *= 0.5;
        }
        if (!accepted || (xn - x).norm() < opts.step_tol) {
            break;
        }
        const Eigen::VectorXd grad_next = fd_gradient(xn);
        bfgs_update(inv_hessian, xn - x, grad_next - grad);
        x = xn;
        fx = fn;
        grad = grad_next;
        grad_norm = (x - bounds.clamp(x - grad)).norm();
    }
    return {x, fx, grad_norm, it};
}

} // namespace sbovqa
