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

#include "sbovqa/pauli.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "sbovqa/io.hpp"

namespace sbovqa {

namespace {

bool valid_axis(char c) { return c == 'I' || c == 'X' || c == 'Y' || c == 'Z'; }

void validate_term(const PauliTerm &term) {
    if (!std::isfinite(term.coefficient)) {
        throw std::invalid_argument("term coefficient must be finite");
    }
    if (term.axes.empty()) {
        throw std::invalid_argument("term axes must be non-empty");
    }
    for (const char c : term.axes) {
        if (!valid_axis(c)) {
            throw std::invalid_argument("axes must be over {I,X,Y,Z}, got '" +
                                        term.axes + "'");
        }
    }
}

bool compatible(const std::string &basis_axes, const std::string &term_axes) {
    for (std::size_t q = 0; q < basis_axes.size(); ++q) {
        const char b = basis_axes[q];
        const char t = term_axes[q];
        if (b != 'I' && t != 'I' && b != t) {
            return false;
        }
    }
    return true;
}

} // namespace

void validate_observable(const Observable &obs) {
    std::vector<int> owner(obs.terms.size(), -1);
    for (std::size_t b = 0; b < obs.bases.size(); ++b) {
        const auto &basis = obs.bases[b];
        if (static_cast<int>(basis.axes.size()) != obs.num_qubits) {
            throw std::invalid_argument("basis axes length mismatch");
        }
        for (const int t : basis.term_indices) {
            if (t < 0 || t >= static_cast<int>(obs.terms.size())) {
                throw std::invalid_argument("basis refers to missing term");
            }
            if (owner[t] != -1) {
                throw std::invalid_argument("term assigned to two bases");
            }
            owner[t] = static_cast<int>(b);
            if (!compatible(basis.axes, obs.terms[t].axes)) {
                throw std::invalid_argument("term incompatible with basis");
            }
        }
    }
    for (std::size_t t = 0; t < obs.terms.size(); ++t) {
        validate_term(obs.terms[t]);
        if (obs.terms[t].num_qubits() != obs.num_qubits) {
            throw std::invalid_argument("term qubit count mismatch");
        }
        if (owner[t] == -1) {
            throw std::invalid_argument("term not assigned to any basis");
        }
    }
    if (obs.bases.empty()) {
        throw std::invalid_argument("observable needs at least one basis");
    }
}

Observable group_commuting(const std::vector<PauliTerm> &terms) {
    if (terms.empty()) {
        throw std::invalid_argument("no terms to group");
    }
    const int n = terms.front().num_qubits();
    Observable obs;
    obs.num_qubits = n;
    obs.terms = terms;
    for (std::size_t t = 0; t < terms.size(); ++t) {
        validate_term(terms[t]);
        if (terms[t].num_qubits() != n) {
            throw std::invalid_argument("terms disagree on qubit count");
        }
        bool placed = false;
        for (auto &basis : obs.bases) {
            if (compatible(basis.axes, terms[t].axes)) {
                for (int q = 0; q < n; ++q) {
                    if (terms[t].axes[q] != 'I') {
                        basis.axes[q] = terms[t].axes[q];
                    }
                }
                basis.term_indices.push_back(static_cast<int>(t));
                placed = true;
                break;
            }
        }
        if (!placed) {
            MeasurementBasis basis;
            basis.axes = terms[t].axes;
            basis.term_indices = {static_cast<int>(t)};
            obs.bases.push_back(std::move(basis));
        }
    }
    return obs;
}

Observable maxcut_observable(const Graph &g) {
    validate_graph(g);
    if (g.edges.empty()) {
        throw std::invalid_argument("graph has no edges");
    }
    std::vector<PauliTerm> terms;
    terms.reserve(g.edges.size());
    for (const auto &e : g.edges) {
        PauliTerm term;
        term.coefficient = e.weight;
        term.axes.assign(static_cast<std::size_t>(g.num_vertices), 'I');
        term.axes[static_cast<std::size_t>(e.u)] = 'Z';
        term.axes[static_cast<std::size_t>(e.v)] = 'Z';
        terms.push_back(std::move(term));
    }
    return group_commuting(terms);
}

std::string format_observable(const Observable &obs) {
    std::ostringstream out;
    for (const auto &term : obs.terms) {
        out << format_double(term.coefficient) << " " << term.axes << "\n";
    }
    return out.str();
}

Observable parse_observable(const std::string &text) {
    std::istringstream in(text);
    std::string line;
    std::vector<PauliTerm> terms;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) {
            continue;
        }
        std::istringstream fields(line);
        std::string coeff_token;
        PauliTerm term;
        if (!(fields >> coeff_token >> term.axes)) {
            throw std::invalid_argument("bad term line " +
                                        std::to_string(line_no));
        }
        term.coefficient = parse_double(coeff_token);
        terms.push_back(std::move(term));
    }
    return group_commuting(terms);
}

void save_observable(const Observable &obs, const std::string &path) {
    atomic_write_file(path, format_observable(obs));
}

Observable load_observable(const std::string &path) {
    return parse_observable(read_file(path));
}

} // namespace sbovqa
