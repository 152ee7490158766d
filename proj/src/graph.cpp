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

#include "sbovqa/graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "sbovqa/io.hpp"

namespace sbovqa {

namespace {

void sort_edges(Graph &g) {
    std::sort(g.edges.begin(), g.edges.end(),
              [](const Edge &a, const Edge &b) {
                  return std::pair(a.u, a.v) < std::pair(b.u, b.v);
              });
}

} // namespace

bool Graph::operator==(const Graph &other) const {
    if (num_vertices != other.num_vertices ||
        edges.size() != other.edges.size()) {
        return false;
    }
    for (std::size_t k = 0; k < edges.size(); ++k) {
        if (edges[k].u != other.edges[k].u || edges[k].v != other.edges[k].v ||
            edges[k].weight != other.edges[k].weight) {
            return false;
        }
    }
    return true;
}

bool is_connected(const Graph &g) {
    if (g.num_vertices <= 1) {
        return true;
    }
    std::vector<std::vector<int>> adj(g.num_vertices);
    for (const auto &e : g.edges) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    std::vector<bool> seen(g.num_vertices, false);
    std::vector<int> stack = {0};
    seen[0] = true;
    int count = 1;
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        for (const int v : adj[u]) {
            if (!seen[v]) {
                seen[v] = true;
                ++count;
                stack.push_back(v);
            }
        }
    }
    return count == g.num_vertices;
}

void validate_graph(const Graph &g) {
    if (g.num_vertices < 1) {
        throw std::invalid_argument("graph needs at least one vertex");
    }
    std::set<std::pair<int, int>> seen;
    for (const auto &e : g.edges) {
        if (e.u < 0 || e.v >= g.num_vertices || e.u >= e.v) {
            throw std::invalid_argument("bad edge endpoints");
        }
        if (!seen.insert({e.u, e.v}).second) {
            throw std::invalid_argument("duplicate edge");
        }
        if (!std::isfinite(e.weight)) {
            throw std::invalid_argument("edge weight must be finite");
        }
    }
}

Graph random_connected_graph(int n, double edge_prob, RngStream &rng,
                             int max_attempts) {
    if (n < 2) {
        throw std::invalid_argument("need n >= 2");
    }
    if (!(edge_prob > 0.0) || edge_prob > 1.0) {
        throw std::invalid_argument("need 0 < edge_prob <= 1");
    }
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        Graph g;
        g.num_vertices = n;
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                if (rng.uniform() < edge_prob) {
                    g.edges.push_back({i, j, 1.0});
                }
            }
        }
        if (is_connected(g)) {
            return g;
        }
    }
    throw std::runtime_error("cannot generate connected graph");
}

Graph random_regular_graph(int n, int kappa, RngStream &rng,
                           int max_attempts) {
    if (n < 2 || kappa < 1 || kappa >= n) {
        throw std::invalid_argument("need 1 <= kappa < n");
    }
    if ((static_cast<long long>(n) * kappa) % 2 != 0) {
        throw std::invalid_argument("n * kappa must be even");
    }
    std::vector<int> stubs(static_cast<std::size_t>(n) * kappa);
    for (int v = 0; v < n; ++v) {
        for (int c = 0; c < kappa; ++c) {
            stubs[static_cast<std::size_t>(v) * kappa + c] = v;
        }
    }
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        // Fisher-Yates shuffle, then pair consecutive stubs.
        for (std::size_t i = stubs.size() - 1; i > 0; --i) {
            const std::size_t k = rng.uniform_int(i + 1);
            std::swap(stubs[i], stubs[k]);
        }
        std::set<std::pair<int, int>> edge_set;
        bool simple = true;
        for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
            int u = stubs[i];
            int v = stubs[i + 1];
            if (u == v) {
                simple = false;
                break;
            }
            if (u > v) {
                std::swap(u, v);
            }
            if (!edge_set.insert({u, v}).second) {
                simple = false;
                break;
            }
        }
        if (!simple) {
            continue;
        }
        Graph g;
        g.num_vertices = n;
        for (const auto &[u, v] : edge_set) {
            g.edges.push_back({u, v, 1.0});
        }
        sort_edges(g);
        if (is_connected(g)) {
            g.regularity = kappa;
            return g;
        }
    }
    throw std::runtime_error("cannot generate connected regular graph");
}

std::string format_graph(const Graph &g) {
    std::ostringstream out;
    out << g.num_vertices << "\n";
    for (const auto &e : g.edges) {
        out << e.u << " " << e.v << " " << format_double(e.weight) << "\n";
    }
    return out.str();
}

Graph parse_graph(const std::string &text) {
    std::istringstream in(text);
    std::string line;
    Graph g;
    bool have_header = false;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) {
            continue;
        }
        std::istringstream fields(line);
        if (!have_header) {
            if (!(fields >> g.num_vertices)) {
                throw std::invalid_argument("graph header must be `n`");
            }
            have_header = true;
            continue;
        }
        Edge e;
        std::string weight_token;
        if (!(fields >> e.u >> e.v >> weight_token)) {
            throw std::invalid_argument("bad edge line " +
                                        std::to_string(line_no));
        }
        e.weight = parse_double(weight_token);
        g.edges.push_back(e);
    }
    if (!have_header) {
        throw std::invalid_argument("empty graph text");
    }
    sort_edges(g);
    validate_graph(g);
    return g;
}

void save_graph(const Graph &g, const std::string &path) {
    atomic_write_file(path, format_graph(g));
}

Graph load_graph(const std::string &path) { return parse_graph(read_file(path)); }

} // namespace sbovqa
