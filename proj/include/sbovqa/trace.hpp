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

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace sbovqa {

/// One optimizer iteration. All optimizers fill the same record so runs can
/// be compared on equal footing; fields without a counterpart (epsilon for
/// the baselines, sample clouds for 2-point methods) hold their natural
/// degenerate value.
struct IterationRecord {
    int iteration = 0;           // 1-based
    Eigen::VectorXd center;      // iterate at the start of the iteration
    Eigen::MatrixXd samples;     // evaluation points, one per column
    Eigen::VectorXd values;      // noisy estimates at the samples
    Eigen::VectorXd iterate;     // iterate produced by the iteration
    double epsilon = 0.0;        // shrink margin used (surrogate walk only)
    double best_value = 0.0;     // objective summary at the new iterate
    long long shots = 0;         // shots consumed this iteration
    bool entered_minima = false; // surrogate walk only
};

struct RunTrace {
    std::string optimizer;
    std::vector<IterationRecord> records;
    std::vector<Eigen::VectorXd> minima;
    Eigen::VectorXd theta_opt;
    long long total_shots = 0;

    int iterations() const { return static_cast<int>(records.size()); }
};

/// One row per iteration: iter, center coordinates, epsilon, best value,
/// shots consumed.
std::string trace_to_csv(const RunTrace &trace);

/// Full-fidelity JSON including sample clouds and the minima list.
std::string trace_to_json(const RunTrace &trace);
RunTrace trace_from_json(const std::string &text);

} // namespace sbovqa
