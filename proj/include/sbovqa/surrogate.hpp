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
#include <cmath>
#include <stdexcept>
#include <vector>

namespace sbovqa {

/// One noisy objective sample: a location in parameter space and the shot
/// estimate observed there.
template <typename Scalar> struct SamplePoint {
    Eigen::Vector<Scalar, Eigen::Dynamic> location;
    Scalar value;
};

/// Gaussian-kernel surrogate W(theta) = sum_j value_j *
/// exp(-|theta - point_j|^2 / (2 sigma)). The kernel divides by 2 sigma, not
/// 2 sigma^2, so the bandwidth carries units of squared distance. The sum is
/// deliberately unnormalized; the resulting offset/scale bias is harmless
/// because optimization only compares relative magnitudes.
///
/// Sample locations are stored as columns. Immutable after fit; evaluate and
/// gradient are pure and safe to call concurrently.
template <typename Scalar> struct SurrogateModel {
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> points; // D x tau
    Eigen::Vector<Scalar, Eigen::Dynamic> values;                 // tau
    Scalar bandwidth;

    Eigen::Index dimension() const { return points.rows(); }
    Eigen::Index sample_count() const { return points.cols(); }
};

/// Silverman bandwidth heuristic [4 / (tau (D + 2))]^(1 / (D + 4)).
inline double silverman_bandwidth(int tau, int dim) {
    if (tau < 1 || dim < 1) {
        throw std::invalid_argument("need tau >= 1 and dim >= 1");
    }
    return std::pow(4.0 / (static_cast<double>(tau) * (dim + 2)),
                    1.0 / (dim + 4));
}

template <typename Scalar>
SurrogateModel<Scalar>
fit(const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> &points,
    const Eigen::Vector<Scalar, Eigen::Dynamic> &values, Scalar sigma) {
    if (points.cols() < 1) {
        throw std::invalid_argument("need at least one sample");
    }
    if (points.cols() != values.size()) {
        throw std::invalid_argument("sample/value count mismatch");
    }
    if (!values.allFinite() || !points.allFinite()) {
        throw std::invalid_argument("samples must be finite");
    }
    if (!(sigma > Scalar(0))) {
        throw std::invalid_argument("bandwidth must be positive");
    }
    return SurrogateModel<Scalar>{points, values, sigma};
}

template <typename Scalar>
SurrogateModel<Scalar> fit(const std::vector<SamplePoint<Scalar>> &samples,
                           Scalar sigma) {
    if (samples.empty()) {
        throw std::invalid_argument("need at least one sample");
    }
    const Eigen::Index dim = samples.front().location.size();
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> points(
        dim, static_cast<Eigen::Index>(samples.size()));
    Eigen::Vector<Scalar, Eigen::Dynamic> values(
        static_cast<Eigen::Index>(samples.size()));
    for (std::size_t j = 0; j < samples.size(); ++j) {
        if (samples[j].location.size() != dim) {
            throw std::invalid_argument("sample dimension mismatch");
        }
        points.col(static_cast<Eigen::Index>(j)) = samples[j].location;
        values[static_cast<Eigen::Index>(j)] = samples[j].value;
    }
    return fit<Scalar>(points, values, sigma);
}

template <typename Scalar, typename Derived>
Eigen::Vector<Scalar, Eigen::Dynamic>
kernel_weights(const SurrogateModel<Scalar> &m,
               const Eigen::MatrixBase<Derived> &theta) {
    static_assert(std::is_same_v<typename Derived::Scalar, Scalar>);
    if (theta.size() != m.dimension()) {
        throw std::invalid_argument("query dimension mismatch");
    }
    const auto sq_dists =
        (m.points.colwise() - theta).colwise().squaredNorm().transpose();
    return (sq_dists.array() / (Scalar(-2) * m.bandwidth)).exp().matrix();
}

template <typename Scalar, typename Derived>
Scalar evaluate(const SurrogateModel<Scalar> &m,
                const Eigen::MatrixBase<Derived> &theta) {
    return kernel_weights(m, theta).dot(m.values);
}

/// Analytic gradient of evaluate:
/// sum_j value_j * kernel_j * (point_j - theta) / sigma.
template <typename Scalar, typename Derived>
Eigen::Vector<Scalar, Eigen::Dynamic>
gradient(const SurrogateModel<Scalar> &m,
         const Eigen::MatrixBase<Derived> &theta) {
    const auto weights = kernel_weights(m, theta);
    return (m.points.colwise() - theta) *
           (weights.cwiseProduct(m.values) / m.bandwidth);
}

} // namespace sbovqa
