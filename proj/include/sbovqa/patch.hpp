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

namespace sbovqa {

/// Axis-aligned box lo <= theta <= hi.
struct Box {
    Eigen::VectorXd lo;
    Eigen::VectorXd hi;

    Eigen::Index dimension() const { return lo.size(); }

    Eigen::VectorXd center() const { return 0.5 * (lo + hi); }

    Eigen::VectorXd clamp(const Eigen::VectorXd &x) const {
        return x.cwiseMax(lo).cwiseMin(hi);
    }

    bool contains(const Eigen::VectorXd &x, double tol = 0.0) const {
        return (x.array() >= lo.array() - tol).all() &&
               (x.array() <= hi.array() + tol).all();
    }

    static Box cube(const Eigen::VectorXd &center, double side) {
        return Box{center.array() - 0.5 * side, center.array() + 0.5 * side};
    }
};

/// Hypercube sampling region of one optimizer iteration: side `side`
/// centered at `center`.
struct Patch {
    Eigen::VectorXd center;
    double side = 0.0;
};

/// The eps-shrunk optimization region: per dimension
/// [center - (side - eps) / 2, center + (side - eps) / 2].
inline Box patch_bounds(const Patch &patch, double eps) {
    if (!(patch.side > 0.0)) {
        throw std::invalid_argument("patch side must be positive");
    }
    if (eps < 0.0 || eps >= patch.side) {
        throw std::invalid_argument("need 0 <= eps < patch side");
    }
    return Box::cube(patch.center, patch.side - eps);
}

} // namespace sbovqa
