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

/// Natural cubic interpolating spline: passes through every knot, has
/// continuous first and second derivatives, and zero second derivative at the
/// end knots. Knots must be strictly increasing. Evaluation outside the knot
/// range extrapolates with the boundary polynomial.
template <typename Scalar> class NaturalCubicSpline {
  public:
    using Vector = Eigen::Vector<Scalar, Eigen::Dynamic>;

    NaturalCubicSpline(const Vector &x, const Vector &y) : x_(x), y_(y) {
        const Eigen::Index n = x.size();
        if (n < 2 || y.size() != n) {
            throw std::invalid_argument("need >= 2 matching knots");
        }
        for (Eigen::Index i = 0; i + 1 < n; ++i) {
            if (!(x[i] < x[i + 1])) {
                throw std::invalid_argument("knots must strictly increase");
            }
        }
        // Second derivatives from the tridiagonal natural-spline system,
        // solved by the Thomas algorithm.
        second_ = Vector::Zero(n);
        if (n > 2) {
            const Eigen::Index m = n - 2;
            Vector diag(m), upper(m), rhs(m);
            for (Eigen::Index i = 0; i < m; ++i) {
                const Scalar h0 = x[i + 1] - x[i];
                const Scalar h1 = x[i + 2] - x[i + 1];
                diag[i] = Scalar(2) * (h0 + h1);
                upper[i] = h1;
                rhs[i] = Scalar(6) * ((y[i + 2] - y[i + 1]) / h1 -
                                      (y[i + 1] - y[i]) / h0);
            }
            for (Eigen::Index i = 1; i < m; ++i) {
                const Scalar lower = x[i + 1] - x[i]; // h_i
                const Scalar w = lower / diag[i - 1];
                diag[i] -= w * upper[i - 1];
                rhs[i] -= w * rhs[i - 1];
            }
            second_[m] = rhs[m - 1] / diag[m - 1];
            for (Eigen::Index i = m - 1; i > 0; --i) {
                second_[i] =
                    (rhs[i - 1] - upper[i - 1] * second_[i + 1]) / diag[i - 1];
            }
        }
    }

    Scalar operator()(Scalar t) const {
        const Eigen::Index n = x_.size();
        Eigen::Index i = 0;
        if (t >= x_[n - 2]) {
            i = n - 2;
        } else if (t > x_[0]) {
            // binary search for the interval with x_[i] <= t < x_[i+1]
            Eigen::Index lo = 0, hi = n - 2;
            while (lo < hi) {
                const Eigen::Index mid = (lo + hi + 1) / 2;
                if (x_[mid] <= t) {
                    lo = mid;
                } else {
                    hi = mid - 1;
                }
            }
            i = lo;
        }
        const Scalar h = x_[i + 1] - x_[i];
        const Scalar a = (x_[i + 1] - t) / h;
        const Scalar b = (t - x_[i]) / h;
        return a * y_[i] + b * y_[i + 1] +
               ((a * a * a - a) * second_[i] + (b * b * b - b) *
                second_[i + 1]) *
                   (h * h) / Scalar(6);
    }

    Scalar min_knot() const { return x_[0]; }
    Scalar max_knot() const { return x_[x_.size() - 1]; }

  private:
    Vector x_;
    Vector y_;
    Vector second_;
};

} // namespace sbovqa
