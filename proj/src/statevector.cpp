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

#include "sbovqa/statevector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sbovqa {

namespace {

using Complex = std::complex<double>;

void check_qubit_count(int n, int max_qubits) {
    if (n < 1) {
        throw std::invalid_argument("need at least one qubit");
    }
    if (n > max_qubits) {
        throw std::invalid_argument("qubit count " + std::to_string(n) +
                                    " exceeds the statevector limit of " +
                                    std::to_string(max_qubits));
    }
}

/// In-place single-qubit gate [[m00, m01], [m10, m11]] on qubit q.
void apply_single_qubit(Eigen::VectorXcd &amps, int q, Complex m00,
                        Complex m01, Complex m10, Complex m11) {
    const std::size_t dim = static_cast<std::size_t>(amps.size());
    const std::size_t mask = std::size_t{1} << q;
    for (std::size_t z = 0; z < dim; ++z) {
        if (z & mask) {
            continue;
        }
        const Complex a0 = amps[static_cast<Eigen::Index>(z)];
        const Complex a1 = amps[static_cast<Eigen::Index>(z | mask)];
        amps[static_cast<Eigen::Index>(z)] = m00 * a0 + m01 * a1;
        amps[static_cast<Eigen::Index>(z | mask)] = m10 * a0 + m11 * a1;
    }
}

/// Maps each basis state z to its MaxCut Hamiltonian energy
/// sum_ij w_ij * (+1 if bits i, j agree else -1).
Eigen::VectorXd diagonal_energies(const Graph &g) {
    const std::size_t dim = std::size_t{1} << g.num_vertices;
    Eigen::VectorXd energies = Eigen::VectorXd::Zero(
        static_cast<Eigen::Index>(dim));
    for (const auto &e : g.edges) {
        const std::size_t pair_mask =
            (std::size_t{1} << e.u) | (std::size_t{1} << e.v);
        for (std::size_t z = 0; z < dim; ++z) {
            const int parity = std::popcount(z & pair_mask) & 1;
            energies[static_cast<Eigen::Index>(z)] +=
                parity ? -e.weight : e.weight;
        }
    }
    return energies;
}

/// Rotates a copy of the state so that measuring the given basis reduces to
/// computational-basis readout: H for X axes, H S-dagger for Y axes.
Eigen::VectorXcd rotate_to_basis(const StateVector &state,
                                 const std::string &basis_axes) {
    Eigen::VectorXcd amps = state.amplitudes;
    const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
    for (int q = 0; q < state.num_qubits; ++q) {
        const char axis = basis_axes[static_cast<std::size_t>(q)];
        if (axis == 'X') {
            apply_single_qubit(amps, q, inv_sqrt2, inv_sqrt2, inv_sqrt2,
                               -inv_sqrt2);
        } else if (axis == 'Y') {
            apply_single_qubit(amps, q, inv_sqrt2, Complex(0.0, -inv_sqrt2),
                               inv_sqrt2, Complex(0.0, inv_sqrt2));
        }
    }
    return amps;
}

std::size_t support_mask(const PauliTerm &term) {
    std::size_t mask = 0;
    for (std::size_t q = 0; q < term.axes.size(); ++q) {
        if (term.axes[q] != 'I') {
            mask |= std::size_t{1} << q;
        }
    }
    return mask;
}

double eigenvalue_sign(std::size_t bitstring, std::size_t mask) {
    return (std::popcount(bitstring & mask) & 1) ? -1.0 : 1.0;
}

void check_match(const StateVector &state, const Observable &obs) {
    if (state.num_qubits != obs.num_qubits) {
        throw std::invalid_argument("state and observable qubit counts differ");
    }
}

} // namespace

ShotPlan ShotPlan::uniform(int num_bases, long long shots_per_basis) {
    if (num_bases < 1 || shots_per_basis < 1) {
        throw std::invalid_argument("need num_bases >= 1 and shots >= 1");
    }
    ShotPlan plan;
    plan.per_basis.assign(static_cast<std::size_t>(num_bases),
                          shots_per_basis);
    return plan;
}

ShotPlan ShotPlan::split_total(int num_bases, long long total) {
    if (num_bases < 1 || total < num_bases) {
        throw std::invalid_argument("need at least one shot per basis");
    }
    ShotPlan plan;
    const long long base = total / num_bases;
    const long long extra = total % num_bases;
    plan.per_basis.resize(static_cast<std::size_t>(num_bases));
    for (int i = 0; i < num_bases; ++i) {
        plan.per_basis[static_cast<std::size_t>(i)] = base + (i < extra ? 1 : 0);
    }
    return plan;
}

long long ShotPlan::total() const {
    long long sum = 0;
    for (const long long k : per_basis) {
        sum += k;
    }
    return sum;
}

StateVector qaoa_state(const Graph &g, const QaoaParams &params,
                       int max_qubits) {
    validate_graph(g);
    check_qubit_count(g.num_vertices, max_qubits);
    if (params.gammas.size() != params.betas.size() ||
        params.layers() < 1) {
        throw std::invalid_argument("need equal-length gammas/betas, p >= 1");
    }
    const int n = g.num_vertices;
    const std::size_t dim = std::size_t{1} << n;
    StateVector state;
    state.num_qubits = n;
    state.amplitudes.setConstant(static_cast<Eigen::Index>(dim),
                                 Complex(std::pow(2.0, -0.5 * n), 0.0));

    const Eigen::VectorXd energies = diagonal_energies(g);
    for (int layer = 0; layer < params.layers(); ++layer) {
        const double gamma = params.gammas[layer];
        const double beta = params.betas[layer];
        for (std::size_t z = 0; z < dim; ++z) {
            const auto idx = static_cast<Eigen::Index>(z);
            state.amplitudes[idx] *=
                std::polar(1.0, -gamma * energies[idx]);
        }
        const Complex c(std::cos(beta), 0.0);
        const Complex s(0.0, -std::sin(beta));
        for (int q = 0; q < n; ++q) {
            apply_single_qubit(state.amplitudes, q, c, s, s, c);
        }
    }
    return state;
}

StateVector hardware_efficient_state(int n, int layers,
                                     const Eigen::VectorXd &params,
                                     int max_qubits) {
    check_qubit_count(n, max_qubits);
    if (layers < 1) {
        throw std::invalid_argument("need at least one layer");
    }
    if (params.size() != static_cast<Eigen::Index>(n) * layers) {
        throw std::invalid_argument("expected " +
                                    std::to_string(static_cast<long long>(n) *
                                                   layers) +
                                    " parameters, got " +
                                    std::to_string(params.size()));
    }
    const std::size_t dim = std::size_t{1} << n;
    StateVector state;
    state.num_qubits = n;
    state.amplitudes.setZero(static_cast<Eigen::Index>(dim));
    state.amplitudes[0] = Complex(1.0, 0.0);

    for (int layer = 0; layer < layers; ++layer) {
        for (int q = 0; q < n; ++q) {
            const double theta = params[static_cast<Eigen::Index>(layer) * n + q];
            const double c = std::cos(0.5 * theta);
            const double s = std::sin(0.5 * theta);
            apply_single_qubit(state.amplitudes, q, c, -s, s, c);
        }
        for (int q = 0; q + 1 < n; ++q) {
            const std::size_t pair_mask =
                (std::size_t{1} << q) | (std::size_t{1} << (q + 1));
            for (std::size_t z = 0; z < dim; ++z) {
                if ((z & pair_mask) == pair_mask) {
                    state.amplitudes[static_cast<Eigen::Index>(z)] *= -1.0;
                }
            }
        }
    }
    return state;
}

double exact_expectation(const StateVector &state, const Observable &obs) {
    check_match(state, obs);
    double value = 0.0;
    for (const auto &basis : obs.bases) {
        const Eigen::VectorXcd rotated = rotate_to_basis(state, basis.axes);
        const Eigen::VectorXd probs = rotated.cwiseAbs2();
        for (const int t : basis.term_indices) {
            const auto &term = obs.terms[static_cast<std::size_t>(t)];
            const std::size_t mask = support_mask(term);
            double acc = 0.0;
            for (Eigen::Index z = 0; z < probs.size(); ++z) {
                acc += probs[z] *
                       eigenvalue_sign(static_cast<std::size_t>(z), mask);
            }
            value += term.coefficient * acc;
        }
    }
    return value;
}

double sample_estimate(const StateVector &state, const Observable &obs,
                       const ShotPlan &plan, RngStream &rng) {
    check_match(state, obs);
    if (plan.exact) {
        return exact_expectation(state, obs);
    }
    if (plan.per_basis.size() != obs.bases.size()) {
        throw std::invalid_argument("shot plan does not match basis count");
    }
    double value = 0.0;
    for (std::size_t b = 0; b < obs.bases.size(); ++b) {
        const long long shots = plan.per_basis[b];
        if (shots < 1) {
            throw std::invalid_argument("need at least one shot per basis");
        }
        const auto &basis = obs.bases[b];
        const Eigen::VectorXcd rotated = rotate_to_basis(state, basis.axes);
        Eigen::VectorXd cdf = rotated.cwiseAbs2();
        for (Eigen::Index z = 1; z < cdf.size(); ++z) {
            cdf[z] += cdf[z - 1];
        }
        cdf[cdf.size() - 1] = 1.0; // absorb rounding in the tail

        std::vector<std::size_t> masks;
        masks.reserve(basis.term_indices.size());
        for (const int t : basis.term_indices) {
            masks.push_back(support_mask(obs.terms[static_cast<std::size_t>(t)]));
        }
        double basis_sum = 0.0;
        for (long long shot = 0; shot < shots; ++shot) {
            const double u = rng.uniform();
            const double *begin = cdf.data();
            const double *end = cdf.data() + cdf.size();
            const auto z = static_cast<std::size_t>(
                std::lower_bound(begin, end, u) - begin);
            for (std::size_t k = 0; k < masks.size(); ++k) {
                const auto &term =
                    obs.terms[static_cast<std::size_t>(basis.term_indices[k])];
                basis_sum += term.coefficient * eigenvalue_sign(z, masks[k]);
            }
        }
        value += basis_sum / static_cast<double>(shots);
    }
    return value;
}

} // namespace sbovqa
