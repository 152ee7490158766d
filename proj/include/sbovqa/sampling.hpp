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
#include <stdexcept>
#include <vector>

#include "sbovqa/patch.hpp"
#include "sbovqa/rng.hpp"

namespace sbovqa {

/// Latin hypercube design over [0, 1)^dim, one point per column. For every
/// dimension the tau points occupy each of the tau equal strata exactly once;
/// strata are assigned by independent random permutations and points are
/// placed uniformly within their stratum.
inline Eigen::MatrixXd latin_hypercube(int tau, int dim, RngStream &rng) {
    if (tau < 1 || dim < 1) {
        throw std::invalid_argument("need tau >= 1 and dim >= 1");
    }
    Eigen::MatrixXd points(dim, tau);
    std::vector<int> strata(static_cast<std::size_t>(tau));
    for (int d = 0; d < dim; ++d) {
        for (int j = 0; j < tau; ++j) {
            strata[static_cast<std::size_t>(j)] = j;
        }
        for (int j = tau - 1; j > 0; --j) {
            const auto k = static_cast<int>(
                rng.uniform_int(static_cast<std::uint64_t>(j) + 1));
            std::swap(strata[static_cast<std::size_t>(j)],
                      strata[static_cast<std::size_t>(k)]);
        }
        for (int j = 0; j < tau; ++j) {
            points(d, j) = (strata[static_cast<std::size_t>(j)] +
                            rng.uniform()) /
                           static_cast<double>(tau);
        }
    }
    return points;
}

/// Maps unit-cube points (columns) into a box, column by column.
inline Eigen::MatrixXd scale_to_box(const Eigen::MatrixXd &unit_points,
                                    const Box &box) {
    if (unit_points.rows() != box.dimension()) {
        throw std::invalid_argument("dimension mismatch");
    }
    return ((box.hi - box.lo).asDiagonal() * unit_points).colwise() + box.lo;
}

} // namespace sbovqa
