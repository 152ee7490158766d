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

#include "dense_oracle.hpp"
#include "sbovqa/statevector.hpp"

using namespace sbovqa;

namespace {

Graph triangle() {
    Graph g;
    g.num_vertices = 3;
    g.edges = {{0, 1, 1.0}, {0, 2, 1.0}, {1, 2, 1.0}};
    return g;
}

QaoaParams make_params(std::initializer_list<double> gammas,
                       std::initializer_list<double> betas) {
    QaoaParams p;
    p.gammas = Eigen::VectorXd::Map(std::data(gammas),
                                    static_cast<Eigen::Index>(gammas.size()));
    p.betas = Eigen::VectorXd::Map(std::data(betas),
                                   static_cast<Eigen::Index>(betas.size()));
    return p;
}

} // namespace

TEST_CASE("zero angles leave the uniform superposition") {
    const StateVector state = qaoa_state(triangle(), make_params({0.0}, {0.0}));
    const double expected = std::pow(2.0, -1.5);
    for (Eigen::Index z = 0; z < state.amplitudes.size(); ++z) {
        CHECK(std::abs(state.amplitudes[z] - expected) < 1e-14);
    }
}

TEST_CASE("qaoa state matches the dense-operator oracle") {
    Graph pair;
    pair.num_vertices = 2;
    pair.edges = {{0, 1, 1.0}};
    const QaoaParams params = make_params({0.3}, {0.4});
    const StateVector state = qaoa_state(pair, params);
    const Eigen::VectorXcd oracle = testing::qaoa_state_dense(pair, params);
    CHECK((state.amplitudes - oracle).norm() < 1e-10);
}

TEST_CASE("qaoa states are normalized and deterministic across seeds") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        RngStream rng(seed);
        const Graph g = random_connected_graph(4, 0.6, rng);
        const QaoaParams params = make_params(
            {rng.uniform(0, 6.28), rng.uniform(0, 6.28)},
            {rng.uniform(0, 6.28), rng.uniform(0, 6.28)});
        const StateVector state = qaoa_state(g, params);
        CHECK(std::abs(state.amplitudes.norm() - 1.0) < 1e-12);

        const Eigen::VectorXcd oracle = testing::qaoa_state_dense(g, params);
        CHECK((state.amplitudes - oracle).norm() < 1e-10);
    }
}

TEST_CASE("qaoa rejects oversized registers") {
    RngStream rng(0);
    const Graph g = random_connected_graph(5, 0.8, rng);
    CHECK_THROWS_AS(qaoa_state(g, make_params({0.1}, {0.2}), 4),
                    std::invalid_argument);
}

TEST_CASE("hardware-efficient ansatz at zero parameters is the ground state") {
    const StateVector state =
        hardware_efficient_state(3, 2, Eigen::VectorXd::Zero(6));
    CHECK(std::abs(state.amplitudes[0] - 1.0) < 1e-14);
    CHECK(state.amplitudes.tail(7).norm() < 1e-14);
}

TEST_CASE("a pi Y-rotation flips a single qubit") {
    const StateVector state =
        hardware_efficient_state(1, 1, Eigen::VectorXd::Constant(1, M_PI));
    CHECK(std::abs(state.amplitudes[1] - 1.0) < 1e-12);
}

TEST_CASE("hardware-efficient state matches the dense-operator oracle") {
    RngStream rng(21);
    for (const auto &[n, layers] :
         std::initializer_list<std::pair<int, int>>{{2, 2}, {3, 2}, {4, 1}}) {
        for (int rep = 0; rep < 4; ++rep) {
            Eigen::VectorXd params(n * layers);
            for (Eigen::Index i = 0; i < params.size(); ++i) {
                params[i] = rng.uniform(-3.0, 3.0);
            }
            const StateVector state =
                hardware_efficient_state(n, layers, params);
            CHECK(std::abs(state.amplitudes.norm() - 1.0) < 1e-12);
            const Eigen::VectorXcd oracle =
                testing::hardware_efficient_dense(n, layers, params);
            CHECK((state.amplitudes - oracle).norm() < 1e-10);
        }
    }
}

TEST_CASE("hardware-efficient ansatz rejects a bad parameter count") {
    CHECK_THROWS_AS(hardware_efficient_state(3, 2, Eigen::VectorXd::Zero(5)),
                    std::invalid_argument);
    CHECK_THROWS_AS(hardware_efficient_state(5, 1, Eigen::VectorXd::Zero(5),
                                             /*max_qubits=*/4),
                    std::invalid_argument);
}

TEST_CASE("uniform superposition zeroes every ZZ expectation") {
    const StateVector state = qaoa_state(triangle(), make_params({0.0}, {0.0}));
    CHECK(exact_expectation(state, maxcut_observable(triangle())) ==
          doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("computational eigenstates give unit ZZ expectation") {
    StateVector state;
    state.num_qubits = 2;
    state.amplitudes = Eigen::VectorXcd::Zero(4);
    state.amplitudes[0] = 1.0; // |00>
    Graph pair;
    pair.num_vertices = 2;
    pair.edges = {{0, 1, 1.0}};
    CHECK(exact_expectation(state, maxcut_observable(pair)) ==
          doctest::Approx(1.0));
}

TEST_CASE("exact expectation matches the dense oracle on random problems") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        RngStream rng(seed + 100);
        const Graph g = random_connected_graph(4, 0.5, rng);
        const QaoaParams params = make_params(
            {rng.uniform(0, 6.28), rng.uniform(0, 6.28)},
            {rng.uniform(0, 6.28), rng.uniform(0, 6.28)});
        const StateVector state = qaoa_state(g, params);
        const Observable obs = maxcut_observable(g);
        const double fast = exact_expectation(state, obs);
        const double dense = testing::expectation_dense(state.amplitudes, obs);
        CHECK(fast == doctest::Approx(dense).epsilon(1e-10));
    }
}

TEST_CASE("multi-basis expectation matches the dense oracle") {
    // Transverse-field-style observable: nu = 2 bases on the same register.
    const Observable obs = group_commuting(
        {{1.0, "ZZI"}, {1.0, "IZZ"}, {0.7, "XII"}, {0.7, "IXI"}, {0.7, "IIX"}});
    REQUIRE(obs.num_bases() == 2);
    RngStream rng(5);
    Eigen::VectorXd params(6);
    for (Eigen::Index i = 0; i < params.size(); ++i) {
        params[i] = rng.uniform(-2.0, 2.0);
    }
    const StateVector state = hardware_efficient_state(3, 2, params);
    CHECK(exact_expectation(state, obs) ==
          doctest::Approx(testing::expectation_dense(state.amplitudes, obs))
              .epsilon(1e-10));
}

TEST_CASE("an identity term is estimated exactly for any shot count") {
    PauliTerm identity;
    identity.coefficient = 0.75;
    identity.axes = "II";
    const Observable obs = group_commuting({identity});
    const StateVector state =
        hardware_efficient_state(2, 1, Eigen::VectorXd::Constant(2, 0.9));
    RngStream rng(3);
    for (const long long shots : {1LL, 7LL, 100LL}) {
        CHECK(sample_estimate(state, obs, ShotPlan::uniform(1, shots), rng) ==
              doctest::Approx(0.75));
    }
}

TEST_CASE("a deterministic outcome distribution needs one shot") {
    StateVector state;
    state.num_qubits = 2;
    state.amplitudes = Eigen::VectorXcd::Zero(4);
    state.amplitudes[0] = 1.0;
    Graph pair;
    pair.num_vertices = 2;
    pair.edges = {{0, 1, 1.0}};
    RngStream rng(0);
    CHECK(sample_estimate(state, maxcut_observable(pair),
                          ShotPlan::uniform(1, 1), rng) ==
          doctest::Approx(1.0));
}

TEST_CASE("sampling is an unbiased estimator of the exact expectation") {
    RngStream graph_rng(17);
    const Graph g = random_connected_graph(4, 0.5, graph_rng);
    const Observable obs = maxcut_observable(g);
    const QaoaParams params = make_params({0.7, 0.2}, {0.4, 1.1});
    const StateVector state = qaoa_state(g, params);
    const double exact = exact_expectation(state, obs);

    const int reps = 1000;
    const long long shots = 100;
    RngStream rng(99);
    double sum = 0.0;
    double sum_sq = 0.0;
    for (int r = 0; r < reps; ++r) {
        RngStream rep_rng = rng.substream(static_cast<std::uint64_t>(r));
        const double est =
            sample_estimate(state, obs, ShotPlan::uniform(1, shots), rep_rng);
        sum += est;
        sum_sq += est * est;
    }
    const double mean = sum / reps;
    const double var = (sum_sq - reps * mean * mean) / (reps - 1);
    const double stderr_mean = std::sqrt(var / reps);
    CHECK(std::abs(mean - exact) < 4.0 * stderr_mean);
}

TEST_CASE("estimator variance shrinks as one over the shot count") {
    RngStream graph_rng(23);
    const Graph g = random_connected_graph(4, 0.5, graph_rng);
    const Observable obs = maxcut_observable(g);
    const StateVector state = qaoa_state(g, make_params({0.9}, {0.3}));

    const auto variance_at = [&](long long shots, std::uint64_t stream) {
        RngStream rng(7, stream);
        const int reps = 1500;
        double sum = 0.0;
        double sum_sq = 0.0;
        for (int r = 0; r < reps; ++r) {
            RngStream rep_rng = rng.substream(static_cast<std::uint64_t>(r));
            const double est = sample_estimate(
                state, obs, ShotPlan::uniform(1, shots), rep_rng);
            sum += est;
            sum_sq += est * est;
        }
        const double mean = sum / reps;
        return (sum_sq - reps * mean * mean) / (reps - 1);
    };
    const double ratio = variance_at(50, 1) / variance_at(200, 2);
    CHECK(ratio > 3.0);
    CHECK(ratio < 5.0);
}

TEST_CASE("sampling replays bit for bit") {
    RngStream graph_rng(31);
    const Graph g = random_connected_graph(4, 0.5, graph_rng);
    const Observable obs = maxcut_observable(g);
    const StateVector state = qaoa_state(g, make_params({0.5}, {0.6}));
    RngStream a(12, 3);
    RngStream b(12, 3);
    for (int i = 0; i < 20; ++i) {
        CHECK(sample_estimate(state, obs, ShotPlan::uniform(1, 25), a) ==
              sample_estimate(state, obs, ShotPlan::uniform(1, 25), b));
    }
}

TEST_CASE("the exact sentinel bypasses sampling") {
    const Observable obs = group_commuting({{1.0, "ZZ"}, {0.5, "XI"}});
    const StateVector state =
        hardware_efficient_state(2, 1, Eigen::VectorXd::Constant(2, 0.4));
    RngStream rng(1);
    CHECK(sample_estimate(state, obs, ShotPlan::exact_plan(), rng) ==
          exact_expectation(state, obs));
}

TEST_CASE("shot plans validate their shape") {
    const Observable obs = group_commuting({{1.0, "ZZ"}, {0.5, "XI"}});
    const StateVector state =
        hardware_efficient_state(2, 1, Eigen::VectorXd::Constant(2, 0.4));
    RngStream rng(1);
    CHECK_THROWS_AS(
        sample_estimate(state, obs, ShotPlan::uniform(1, 10), rng),
        std::invalid_argument);
    CHECK_THROWS_AS(ShotPlan::split_total(3, 2), std::invalid_argument);
    const ShotPlan plan = ShotPlan::split_total(3, 11);
    CHECK(plan.per_basis == std::vector<long long>{4, 4, 3});
    CHECK(plan.total() == 11);
}
