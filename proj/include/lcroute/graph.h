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

#ifndef LCROUTE_GRAPH_H
#define LCROUTE_GRAPH_H

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace lcroute {

/// Vertex label. Valid labels are 0..63.
using Vertex = int;

inline constexpr int kMaxVertices = 64;

inline constexpr bool is_valid_label(Vertex v) { return v >= 0 && v < kMaxVertices; }

/// Set of vertex labels packed into one machine word.
class VertexSet {
   public:
    class iterator {
       public:
        using value_type = Vertex;
        using difference_type = std::ptrdiff_t;

        iterator() = default;
        explicit iterator(uint64_t rest) : rest_(rest) {}
        Vertex operator*() const { return std::countr_zero(rest_); }
        iterator &operator++() {
            rest_ &= rest_ - 1;
            return *this;
        }
        iterator operator++(int) {
            iterator old = *this;
            ++*this;
            return old;
        }
        bool operator==(const iterator &) const = default;

       private:
        uint64_t rest_ = 0;
    };

    constexpr VertexSet() = default;
    constexpr explicit VertexSet(uint64_t bits) : bits_(bits) {}
    VertexSet(std::initializer_list<Vertex> labels);

    static constexpr VertexSet single(Vertex v) { return VertexSet(uint64_t{1} << v); }

    constexpr uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    int size() const { return std::popcount(bits_); }
    constexpr bool contains(Vertex v) const { return is_valid_label(v) && ((bits_ >> v) & 1) != 0; }
    /// Lowest label in the set. Undefined on an empty set.
    Vertex first() const { return std::countr_zero(bits_); }
    constexpr bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }

    void insert(Vertex v) { bits_ |= uint64_t{1} << v; }
    void erase(Vertex v) { bits_ &= ~(uint64_t{1} << v); }

    iterator begin() const { return iterator(bits_); }
    iterator end() const { return iterator(0); }
    std::vector<Vertex> to_vector() const;

    constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
    constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
    constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
    VertexSet &operator|=(VertexSet o) {
        bits_ |= o.bits_;
        return *this;
    }
    VertexSet &operator&=(VertexSet o) {
        bits_ &= o.bits_;
        return *this;
    }
    constexpr bool operator==(const VertexSet &) const = default;

   private:
    uint64_t bits_ = 0;
};

std::ostream &operator<<(std::ostream &out, VertexSet set);

/// Undirected edge with `first < second`.
using Edge = std::pair<Vertex, Vertex>;

/// Labeled simple graph with adjacency stored as one 64-bit row per label.
///
/// Labels are stable: deleting a vertex leaves a gap and never renumbers the
/// survivors. Equality compares the label set and every edge.
class Graph {
   public:
    Graph() = default;
    explicit Graph(VertexSet vertices);
    Graph(VertexSet vertices, const std::vector<Edge> &edges);

    VertexSet vertex_set() const { return VertexSet(present_); }
    std::vector<Vertex> vertices() const { return vertex_set().to_vector(); }
    int num_vertices() const { return std::popcount(present_); }
    bool contains(Vertex v) const { return vertex_set().contains(v); }

    bool adjacent(Vertex u, Vertex v) const;
    VertexSet neighbourhood(Vertex v) const;
    int degree(Vertex v) const { return neighbourhood(v).size(); }
    /// Edges as (low, high) pairs, sorted lexicographically.
    std::vector<Edge> edges() const;
    size_t num_edges() const;

    /// Raw adjacency row. Zero for absent labels.
    uint64_t row(Vertex v) const { return rows_[static_cast<size_t>(v)]; }

    // In-place mutators. These validate their arguments and throw
    // std::invalid_argument on misuse.
    void add_vertex(Vertex v);
    void remove_vertex(Vertex v);
    void add_edge(Vertex u, Vertex v);
    void toggle_edge(Vertex u, Vertex v);
    /// Toggles every edge inside N(v).
    void complement_neighbourhood(Vertex v);

    bool operator==(const Graph &other) const;

    /// Compact human-readable form, e.g. "{1,2,3} 1-2 2-3".
    std::string str() const;

   private:
    void require_vertex(Vertex v) const;

    uint64_t present_ = 0;
    std::array<uint64_t, kMaxVertices> rows_{};
};

std::ostream &operator<<(std::ostream &out, const Graph &g);

struct GraphHash {
    size_t operator()(const Graph &g) const;
};

enum class NamedGraph { Ring, Line, Complete };

/// Ring, line or complete graph on labels 1..n.
Graph construct_named(NamedGraph kind, int n);

/// Edgeless graph on the given labels.
Graph empty_graph(std::initializer_list<Vertex> labels);

/// Graph on the labels appearing in `edges` (plus any extra `isolated` ones).
Graph graph_from_edges(std::initializer_list<Edge> edges, std::initializer_list<Vertex> isolated = {});

/// tau_v: toggles all edges within the neighbourhood of v.
Graph local_complement(const Graph &g, Vertex v);

/// Two-qubit CZ at the graph level: flips the single edge (u, v).
Graph toggle_cz(const Graph &g, Vertex u, Vertex v);

/// Induced subgraph after removing v (row and column deletion).
Graph delete_vertex(const Graph &g, Vertex v);

/// Maximal connected vertex sets, ordered by their lowest label.
std::vector<VertexSet> connected_components(const Graph &g);

/// Vertices reachable from `start` (including it).
VertexSet component_of(const Graph &g, Vertex start);

}  // namespace lcroute

#endif
