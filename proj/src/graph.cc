// Copyright 2026 The lcroute Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lcroute/graph.h"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace lcroute {

namespace {

uint64_t bit(Vertex v) { return uint64_t{1} << v; }

void require_label(Vertex v) {
    if (!is_valid_label(v)) {
        throw std::invalid_argument("vertex label " + std::to_string(v) + " is outside 0..63");
    }
}

}  // namespace

VertexSet::VertexSet(std::initializer_list<Vertex> labels) {
    for (Vertex v : labels) {
        require_label(v);
        insert(v);
    }
}

std::vector<Vertex> VertexSet::to_vector() const {
    std::vector<Vertex> out;
    out.reserve(static_cast<size_t>(size()));
    for (Vertex v : *this) {
        out.push_back(v);
    }
    return out;
}

std::ostream &operator<<(std::ostream &out, VertexSet set) {
    out << '{';
    bool first = true;
    for (Vertex v : set) {
        if (!first) {
            out << ',';
        }
        first = false;
        out << v;
    }
    return out << '}';
}

Graph::Graph(VertexSet vertices) : present_(vertices.bits()) {}

Graph::Graph(VertexSet vertices, const std::vector<Edge> &edges) : present_(vertices.bits()) {
    for (const auto &[u, v] : edges) {
        add_edge(u, v);
    }
}

void Graph::require_vertex(Vertex v) const {
    if (!contains(v)) {
        throw std::invalid_argument("vertex " + std::to_string(v) + " is not in the graph");
    }
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    if (!contains(u) || !contains(v)) {
        return false;
    }
    return (rows_[static_cast<size_t>(u)] & bit(v)) != 0;
}

VertexSet Graph::neighbourhood(Vertex v) const {
    require_vertex(v);
    return VertexSet(rows_[static_cast<size_t>(v)]);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (Vertex u : vertex_set()) {
        for (Vertex v : VertexSet(rows_[static_cast<size_t>(u)] & ~((bit(u) << 1) - 1))) {
            out.emplace_back(u, v);
        }
    }
    return out;
}

size_t Graph::num_edges() const {
    size_t twice = 0;
    for (Vertex u : vertex_set()) {
        twice += static_cast<size_t>(std::popcount(rows_[static_cast<size_t>(u)]));
    }
    return twice / 2;
}

void Graph::add_vertex(Vertex v) {
    require_label(v);
    present_ |= bit(v);
}

void Graph::remove_vertex(Vertex v) {
    require_vertex(v);
    for (Vertex u : VertexSet(rows_[static_cast<size_t>(v)])) {
        rows_[static_cast<size_t>(u)] &= ~bit(v);
    }
    rows_[static_cast<size_t>(v)] = 0;
    present_ &= ~bit(v);
}

void Graph::add_edge(Vertex u, Vertex v) {
    if (adjacent(u, v)) {
        throw std::invalid_argument("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
    }
    toggle_edge(u, v);
}

void Graph::toggle_edge(Vertex u, Vertex v) {
    require_vertex(u);
    require_vertex(v);
    if (u == v) {
        throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
    }
    rows_[static_cast<size_t>(u)] ^= bit(v);
    rows_[static_cast<size_t>(v)] ^= bit(u);
}

void Graph::complement_neighbourhood(Vertex v) {
    require_vertex(v);
    uint64_t nbrs = rows_[static_cast<size_t>(v)];
    for (Vertex u : VertexSet(nbrs)) {
        rows_[static_cast<size_t>(u)] ^= nbrs & ~bit(u);
    }
}

bool Graph::operator==(const Graph &other) const {
    if (present_ != other.present_) {
        return false;
    }
    for (Vertex v : vertex_set()) {
        if (rows_[static_cast<size_t>(v)] != other.rows_[static_cast<size_t>(v)]) {
            return false;
        }
    }
    return true;
}

std::string Graph::str() const {
    std::ostringstream out;
    out << *this;
    return out.str();
}

std::ostream &operator<<(std::ostream &out, const Graph &g) {
    out << g.vertex_set();
    for (const auto &[u, v] : g.edges()) {
        out << ' ' << u << '-' << v;
    }
    return out;
}

size_t GraphHash::operator()(const Graph &g) const {
    uint64_t h = g.vertex_set().bits() * 0x9E3779B97F4A7C15ULL;
    for (Vertex v : g.vertex_set()) {
        h ^= g.row(v) + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<size_t>(h);
}

Graph construct_named(NamedGraph kind, int n) {
    if (n < 1 || n >= kMaxVertices) {
        throw std::invalid_argument("named graph size " + std::to_string(n) + " is outside 1..63");
    }
    Graph g(VertexSet(((uint64_t{1} << n) - 1) << 1));
    switch (kind) {
        case NamedGraph::Complete:
            for (Vertex u = 1; u <= n; u++) {
                for (Vertex v = u + 1; v <= n; v++) {
                    g.toggle_edge(u, v);
                }
            }
            break;
        case NamedGraph::Ring:
        case NamedGraph::Line:
            for (Vertex v = 1; v < n; v++) {
                g.toggle_edge(v, v + 1);
            }
            // R_1 would need a self-loop and R_2 a double edge; both collapse.
            if (kind == NamedGraph::Ring && n >= 3) {
                g.toggle_edge(n, 1);
            }
            break;
    }
    return g;
}

Graph empty_graph(std::initializer_list<Vertex> labels) { return Graph(VertexSet(labels)); }

Graph graph_from_edges(std::initializer_list<Edge> edges, std::initializer_list<Vertex> isolated) {
    VertexSet vs(isolated);
    for (const auto &[u, v] : edges) {
        require_label(u);
        require_label(v);
        vs.insert(u);
        vs.insert(v);
    }
    return Graph(vs, std::vector<Edge>(edges));
}

Graph local_complement(const Graph &g, Vertex v) {
    Graph out = g;
    out.complement_neighbourhood(v);
    return out;
}

Graph toggle_cz(const Graph &g, Vertex u, Vertex v) {
    Graph out = g;
    out.toggle_edge(u, v);
    return out;
}

Graph delete_vertex(const Graph &g, Vertex v) {
    Graph out = g;
    out.remove_vertex(v);
    return out;
}

VertexSet component_of(const Graph &g, Vertex start) {
    VertexSet seen = VertexSet::single(start);
    VertexSet frontier = seen;
    while (!frontier.empty()) {
        VertexSet next;
        for (Vertex v : frontier) {
            next |= VertexSet(g.row(v));
        }
        frontier = next - seen;
        seen |= frontier;
    }
    return seen;
}

std::vector<VertexSet> connected_components(const Graph &g) {
    std::vector<VertexSet> out;
    VertexSet remaining = g.vertex_set();
    while (!remaining.empty()) {
        VertexSet comp = component_of(g, remaining.first());
        out.push_back(comp);
        remaining = remaining - comp;
    }
    return out;
}

}  // namespace lcroute
