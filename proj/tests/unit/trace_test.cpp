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

#include <sstream>

#include "sbovqa/sbo.hpp"
#include "sbovqa/trace.hpp"

using namespace sbovqa;

namespace {

RunTrace sample_trace() {
    const Eigen::VectorXd c = Eigen::VectorXd::Constant(2, 0.4);
    const NoisyObjective noisy =
        [c](const Eigen::VectorXd &theta, long long, RngStream &rng) {
            return (theta - c).squaredNorm() + rng.normal(0.0, 0.02);
        };
    SboConfig cfg;
    cfg.patch_size = 0.2;
    cfg.tau = 6;
    cfg.iterations = 4;
    cfg.shots_per_sample = 5;
    return sbo_run(noisy, Eigen::VectorXd::Zero(2), cfg, RngStream(3));
}

} // namespace

TEST_CASE("csv has one row per iteration with the documented columns") {
    const RunTrace trace = sample_trace();
    const std::string csv = trace_to_csv(trace);
    std::istringstream lines(csv);
    std::string line;
    REQUIRE(std::getline(lines, line));
    CHECK(line == "iter,center_0,center_1,epsilon,best_value,shots");
    int rows = 0;
    while (std::getline(lines, line)) {
        ++rows;
        CHECK(std::count(line.begin(), line.end(), ',') == 5);
    }
    CHECK(rows == trace.iterations());
}

TEST_CASE("json round-trips the full trace") {
    const RunTrace trace = sample_trace();
    const RunTrace restored = trace_from_json(trace_to_json(trace));
    CHECK(restored.optimizer == trace.optimizer);
    CHECK(restored.total_shots == trace.total_shots);
    CHECK((restored.theta_opt - trace.theta_opt).norm() == 0.0);
    REQUIRE(restored.minima.size() == trace.minima.size());
    for (std::size_t m = 0; m < trace.minima.size(); ++m) {
        CHECK((restored.minima[m] - trace.minima[m]).norm() == 0.0);
    }
    REQUIRE(restored.iterations() == trace.iterations());
    for (int i = 0; i < trace.iterations(); ++i) {
        const auto &a = trace.records[static_cast<std::size_t>(i)];
        const auto &b = restored.records[static_cast<std::size_t>(i)];
        CHECK(a.iteration == b.iteration);
        CHECK((a.center - b.center).norm() == 0.0);
        CHECK((a.samples - b.samples).norm() == 0.0);
        CHECK((a.values - b.values).norm() == 0.0);
        CHECK((a.iterate - b.iterate).norm() == 0.0);
        CHECK(a.epsilon == b.epsilon);
        CHECK(a.best_value == b.best_value);
        CHECK(a.shots == b.shots);
        CHECK(a.entered_minima == b.entered_minima);
    }
}

TEST_CASE("serialization is deterministic") {
    const RunTrace trace = sample_trace();
    CHECK(trace_to_json(trace) == trace_to_json(trace));
    CHECK(trace_to_csv(trace) == trace_to_csv(trace));
}
