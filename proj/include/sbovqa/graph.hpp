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

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sbovqa/rng.hpp"

namespace sbovqa {

struct Edge {
    int u = 0;
    int v = 0;
    double weight = 1.0;
};

/// Simple undirected weighted graph. Edges are stored with u < v and sorted
/// lexicographically, so two graphs with the same edge set compare equal.
struct Graph {
    int num_vertices = 0;
    std::vector<Edge> edges;
    std::optional<int> regularity; // set by the regular-graph generator

    bool operator==(const Graph &other) const;
};

bool is_connected(const Graph &g);

/// Throws std::invalid_argument when an edge index is out of range, u >= v,
/// or a duplicate edge is present.
void validate_graph(const Graph &g);

/// Erdos-Renyi G(n, p) conditioned on connectivity: the whole graph is
/// resampled until connected. Edges are unweighted (w = 1).
Graph random_connected_graph(int n, double edge_prob, RngStream &rng,
                             int max_attempts = 1000);

/// Random simple connected kappa-regular graph via the pairing model with
/// rejection of self-loops, multi-edges, and disconnected outcomes.
Graph random_regular_graph(int n, int kappa, RngStream &rng,
                           int max_attempts = 1000);

/// Edge-list text format: an `n` header line followed by `i j w` lines.
/// Weights are written with shortest round-trip precision, so
/// parse_graph(format_graph(g)) == g exactly.
std::string format_graph(const Graph &g);
Graph parse_graph(const std::string &text);

void save_graph(const Graph &g, const std::string &path);
Graph load_graph(const std::string &path);

} // namespace sbovqa
