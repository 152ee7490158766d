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

#include <string>
#include <vector>

#include "sbovqa/graph.hpp"

namespace sbovqa {

/// One weighted Pauli string. axes[q] in {I, X, Y, Z} is the operator acting
/// on qubit q; qubit 0 is the least significant bit of a basis-state index.
struct PauliTerm {
    double coefficient = 0.0;
    std::string axes;

    int num_qubits() const { return static_cast<int>(axes.size()); }
};

/// A set of terms measurable together: for every qubit all member terms agree
/// on the axis (or act as identity). axes holds the per-qubit measurement
/// axis, with 'I' where no member term touches the qubit.
struct MeasurementBasis {
    std::string axes;
    std::vector<int> term_indices;
};

/// Weighted Pauli-term sum together with its grouping into qubit-wise
/// commuting measurement bases. Every term belongs to exactly one basis.
struct Observable {
    int num_qubits = 0;
    std::vector<PauliTerm> terms;
    std::vector<MeasurementBasis> bases;

    int num_bases() const { return static_cast<int>(bases.size()); }
};

void validate_observable(const Observable &obs);

/// Greedy first-fit grouping into qubit-wise commuting bases: a term joins
/// the first basis whose per-qubit axes are compatible (equal, or identity on
/// one side). Throws when terms disagree on qubit count.
Observable group_commuting(const std::vector<PauliTerm> &terms);

/// MaxCut cost observable: one w_ij * Z_i Z_j term per edge. All terms
/// commute qubit-wise, so the result always has a single measurement basis.
Observable maxcut_observable(const Graph &g);

/// Term-list text format: one `coeff axes` line per term, e.g. `0.5 ZZI`.
/// Coefficients use shortest round-trip precision; parse(format(x)) is exact.
std::string format_observable(const Observable &obs);
Observable parse_observable(const std::string &text);

void save_observable(const Observable &obs, const std::string &path);
Observable load_observable(const std::string &path);

} // namespace sbovqa
