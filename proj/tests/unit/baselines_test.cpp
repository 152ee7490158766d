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

#include "sbovqa/baselines.hpp"

using namespace sbovqa;

namespace {

NoisyObjective noiseless(std::function<double(const Eigen::VectorXd &)> f) {
    return [f = std::move(f)](const Eigen::VectorXd &theta, long long,
                              RngStream &) { return f(theta); };
}

} // namespace

TEST_CASE("spsa gain sequences decay from their base values") {
    SpsaConfig cfg;
    cfg.a = 0.3;
    cfg.c = 0.2;
    // c_0 = c and a_0 = a exactly with A = 0.
    CHECK(cfg.c / std::pow(1.0, cfg.gamma) == cfg.c);
    CHECK(cfg.a / std::pow(1.0, cfg.alpha) == cfg.a);
    double prev_c = std::numeric_limits<double>::infinity();
    double prev_a = std::numeric_limits<double>::infinity();
    for (int k = 0; k < 50; ++k) {
        const double ck = cfg.c / std::pow(k + 1.0, cfg.gamma);
        const double ak = cfg.a / std::pow(k + 1.0, cfg.alpha);
        CHECK(ck > 0.0);
        CHECK(ak > 0.0);
        CHECK(ck < prev_c);
        CHECK(ak < prev_a);
        prev_c = ck;
        prev_a = ak;
    }
}

TEST_CASE("spsa config validation") {
    SpsaConfig cfg;
    cfg.a = 0.0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = SpsaConfig{};
    cfg.gamma = 0.7; // must stay below alpha
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = SpsaConfig{};
    cfg.alpha = 1.2;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("the two-point estimate is exact for linear costs in one dimension") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const double g = seed % 2 == 0 ? -1.7 : 0.6;
        SpsaConfig cfg;
        cfg.iterations = 1;
        cfg.a = 0.5;
        const Eigen::VectorXd theta0 = Eigen::VectorXd::Ones(1);
        const RunTrace trace = spsa_run(
            noiseless([g](const Eigen::VectorXd &t) { return g * t[0]; }),
            theta0, cfg, RngStream(seed));
        // theta1 = theta0 - a_0 * ghat, so ghat = (theta0 - theta1) / a_0.
        const Eigen::VectorXd ghat = (theta0 - trace.theta_opt) / cfg.a;
        CHECK(ghat[0] == doctest::Approx(g).epsilon(1e-12));
    }
}

TEST_CASE("the directional two-point identity is exact for linear costs") {
    // For V = g . theta the probe difference equals 2 c_0 (g . delta) for
    // every Rademacher draw, so ghat_i * delta_i = g . delta in every
    // component (the per-component estimate itself is exact only in
    // expectation).
    const int dim = 4;
    Eigen::VectorXd g(dim);
    g << 0.8, -0.3, 1.2, 0.4;
    SpsaConfig cfg;
    cfg.iterations = 1;
    cfg.a = 0.5;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const Eigen::VectorXd theta0 = Eigen::VectorXd::Zero(dim);
        const RunTrace trace = spsa_run(
            noiseless([g](const Eigen::VectorXd &t) { return g.dot(t); }),
            theta0, cfg, RngStream(seed, 31));
        const auto &rec = trace.records.front();
        const double c0 = cfg.c;
        const Eigen::VectorXd delta =
            (rec.samples.col(0) - rec.center) / c0;
        const Eigen::VectorXd ghat = (rec.center - rec.iterate) / cfg.a;
        const double directional = g.dot(delta);
        for (int d = 0; d < dim; ++d) {
            CHECK(ghat[d] * delta[d] ==
                  doctest::Approx(directional).epsilon(1e-12));
        }
    }
}

TEST_CASE("the two-point estimate is unbiased for general linear costs") {
    const int dim = 4;
    Eigen::VectorXd g(dim);
    g << 0.8, -0.3, 1.2, 0.4;
    SpsaConfig cfg;
    cfg.iterations = 1;
    cfg.a = 1.0;
    const Eigen::VectorXd theta0 = Eigen::VectorXd::Zero(dim);
    Eigen::VectorXd mean = Eigen::VectorXd::Zero(dim);
    const int reps = 20000;
    for (int r = 0; r < reps; ++r) {
        const RunTrace trace = spsa_run(
            noiseless([g](const Eigen::VectorXd &t) { return g.dot(t); }),
            theta0, cfg, RngStream(static_cast<std::uint64_t>(r), 9));
        mean += (theta0 - trace.theta_opt) / cfg.a;
    }
    mean /= reps;
    CHECK((mean - g).norm() < 0.05 * g.norm());
}

TEST_CASE("spsa descends a noiseless quadratic bowl") {
    const int dim = 4;
    const Eigen::VectorXd c = Eigen::VectorXd::Constant(dim, 0.7);
    SpsaConfig cfg;
    cfg.a = 0.2;
    cfg.c = 0.2;
    cfg.iterations = 500;
    const Eigen::VectorXd theta0 = c + Eigen::VectorXd::Constant(dim, 0.5);
    const RunTrace trace = spsa_run(
        noiseless([c](const Eigen::VectorXd &t) {
            return (t - c).squaredNorm();
        }),
        theta0, cfg, RngStream(3, 1));
    CHECK((trace.theta_opt - c).norm() < 0.05);
}

TEST_CASE("spsa accounts exactly two probe budgets per iteration") {
    SpsaConfig cfg;
    cfg.iterations = 13;
    cfg.shots_per_iteration = 501; // odd: probes get 251 and 250
    long long seen = 0;
    const NoisyObjective counter =
        [&seen](const Eigen::VectorXd &, long long shots, RngStream &) {
            seen += shots;
            return 0.0;
        };
    const RunTrace trace =
        spsa_run(counter, Eigen::VectorXd::Zero(2), cfg, RngStream(0));
    CHECK(trace.total_shots == 13 * 501);
    CHECK(seen == trace.total_shots);
    for (const auto &rec : trace.records) {
        CHECK(rec.shots == 501);
        CHECK(rec.samples.cols() == 2);
    }
}

TEST_CASE("spsa replays bit for bit") {
    const Eigen::VectorXd c = Eigen::VectorXd::Constant(3, 0.2);
    const NoisyObjective noisy =
        [c](const Eigen::VectorXd &t, long long, RngStream &rng) {
            return (t - c).squaredNorm() + rng.normal(0.0, 0.1);
        };
    SpsaConfig cfg;
    cfg.iterations = 40;
    const RunTrace a = spsa_run(noisy, Eigen::VectorXd::Zero(3), cfg,
                                RngStream(17, 4));
    const RunTrace b = spsa_run(noisy, Eigen::VectorXd::Zero(3), cfg,
                                RngStream(17, 4));
    CHECK((a.theta_opt - b.theta_opt).norm() == 0.0);
}

TEST_CASE("quasi-newton converges on a noiseless bowl") {
    const int dim = 3;
    const Eigen::VectorXd c = Eigen::VectorXd::Constant(dim, -0.4);
    QuasiNewtonConfig cfg;
    cfg.iterations = 50;
    cfg.shots_per_iteration = 2 * dim + 1;
    const RunTrace trace = quasi_newton_run(
        noiseless([c](const Eigen::VectorXd &t) {
            return (t - c).squaredNorm();
        }),
        Eigen::VectorXd::Ones(dim), std::nullopt, cfg, RngStream(1));
    CHECK((trace.theta_opt - c).norm() < 1e-4);
}

TEST_CASE("quasi-newton respects bounds") {
    const int dim = 2;
    const Eigen::VectorXd c = Eigen::VectorXd::Constant(dim, 2.0);
    QuasiNewtonConfig cfg;
    cfg.iterations = 60;
    cfg.shots_per_iteration = 5;
    const Box box = Box::cube(Eigen::VectorXd::Zero(dim), 2.0); // [-1, 1]^2
    const RunTrace trace = quasi_newton_run(
        noiseless([c](const Eigen::VectorXd &t) {
            return (t - c).squaredNorm();
        }),
        Eigen::VectorXd::Zero(dim), box, cfg, RngStream(2));
    CHECK(box.contains(trace.theta_opt, 1e-12));
    CHECK((trace.theta_opt - Eigen::VectorXd::Ones(dim)).norm() < 1e-3);
}

TEST_CASE("quasi-newton accounts 2D+1 calls with an exact total") {
    const int dim = 3; // 7 calls per iteration
    QuasiNewtonConfig cfg;
    cfg.iterations = 9;
    cfg.shots_per_iteration = 5000; // not divisible by 7
    long long calls = 0;
    long long seen = 0;
    const NoisyObjective pure_noise =
        [&](const Eigen::VectorXd &, long long shots, RngStream &rng) {
            ++calls;
            seen += shots;
            return 1.0 + rng.normal(0.0, 1.0);
        };
    const RunTrace trace = quasi_newton_run(
        pure_noise, Eigen::VectorXd::Zero(dim), std::nullopt, cfg,
        RngStream(5));
    CHECK(calls == 9 * (2 * dim + 1));
    CHECK(seen == 9LL * 5000);
    CHECK(trace.total_shots == 9LL * 5000);
    for (const auto &rec : trace.records) {
        CHECK(rec.shots == 5000);
        CHECK(rec.samples.cols() == 2 * dim + 1);
        CHECK(rec.values.size() == 2 * dim + 1);
        CHECK(rec.iterate.allFinite());
    }
}

TEST_CASE("quasi-newton replays bit for bit") {
    QuasiNewtonConfig cfg;
    cfg.iterations = 12;
    cfg.shots_per_iteration = 50;
    const NoisyObjective noisy =
        [](const Eigen::VectorXd &t, long long, RngStream &rng) {
            return t.squaredNorm() + rng.normal(0.0, 0.3);
        };
    const RunTrace a = quasi_newton_run(noisy, Eigen::VectorXd::Ones(2),
                                        std::nullopt, cfg, RngStream(6, 2));
    const RunTrace b = quasi_newton_run(noisy, Eigen::VectorXd::Ones(2),
                                        std::nullopt, cfg, RngStream(6, 2));
    REQUIRE(a.iterations() == b.iterations());
    for (int i = 0; i < a.iterations(); ++i) {
        CHECK((a.records[static_cast<std::size_t>(i)].iterate -
               b.records[static_cast<std::size_t>(i)].iterate)
                  .norm() == 0.0);
    }
}

TEST_CASE("bounded bfgs pins boundary minima and finds interior ones") {
    const Box box = Box::cube(Eigen::VectorXd::Zero(2), 4.0); // [-2, 2]^2

    const auto rosenbrock_ish = [](const Eigen::VectorXd &t) {
        return (t[0] - 1.0) * (t[0] - 1.0) +
               2.0 * (t[1] + 0.5) * (t[1] + 0.5);
    };
    const BfgsResult interior = bfgs_minimize_bounded(
        rosenbrock_ish, Eigen::VectorXd::Constant(2, 1.9), box);
    CHECK(interior.x[0] == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(interior.x[1] == doctest::Approx(-0.5).epsilon(1e-6));

    const auto outside = [](const Eigen::VectorXd &t) {
        return (t - Eigen::VectorXd::Constant(2, 3.0)).squaredNorm();
    };
    const BfgsResult pinned =
        bfgs_minimize_bounded(outside, Eigen::VectorXd::Zero(2), box);
    CHECK(pinned.x[0] == doctest::Approx(2.0));
    CHECK(pinned.x[1] == doctest::Approx(2.0));
}
