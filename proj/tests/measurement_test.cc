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

#include "lcroute/measurement.h"

#include "gtest/gtest.h"
#include "lcroute/foliage.h"
#include "oracle.h"
#include "test_util.h"

using namespace lcroute;

namespace {

const PauliBasis Z{Pauli::Z, std::nullopt};
const PauliBasis Y{Pauli::Y, std::nullopt};
const PauliBasis X{Pauli::X, std::nullopt};

PauliBasis x_with(Vertex w) { return PauliBasis{Pauli::X, w}; }

/// Path through the given labels in order.
Graph path(const std::vector<Vertex> &labels) {
    Graph g;
    for (Vertex v : labels) {
        g.add_vertex(v);
    }
    for (size_t i = 0; i + 1 < labels.size(); i++) {
        g.toggle_edge(labels[i], labels[i + 1]);
    }
    return g;
}

Graph cycle(const std::vector<Vertex> &labels) {
    Graph g = path(labels);
    g.toggle_edge(labels.front(), labels.back());
    return g;
}

std::vector<Vertex> without(int n, Vertex v) {
    std::vector<Vertex> out;
    for (Vertex u = 1; u <= n; u++) {
        if (u != v) {
            out.push_back(u);
        }
    }
    return out;
}

}  // namespace

TEST(measure, z_is_row_column_deletion_exhaustive) {
    fixtures::for_each_small_graph(5, [](const Graph &g) {
        for (Vertex v : g.vertex_set()) {
            ASSERT_EQ(measure(g, v, Z), oracle::from_dense(oracle::del(oracle::to_dense(g), v)));
        }
    });
}

TEST(measure, all_bases_match_dense_oracle_exhaustive) {
    fixtures::for_each_small_graph(5, [](const Graph &g) {
        oracle::Dense d = oracle::to_dense(g);
        for (Vertex v : g.vertex_set()) {
            ASSERT_EQ(measure(g, v, Y), oracle::from_dense(oracle::measure(d, v, 'Y')));
            ASSERT_EQ(measure(g, v, X), oracle::from_dense(oracle::measure(d, v, 'X')));
            for (Vertex w : g.neighbourhood(v)) {
                ASSERT_EQ(measure(g, v, x_with(w)), oracle::from_dense(oracle::measure(d, v, 'X', w)));
            }
        }
    });
}

TEST(measure, ring_z_gives_line_and_y_gives_ring) {
    for (int n1 = 3; n1 <= 12; n1++) {
        Graph ring = construct_named(NamedGraph::Ring, n1);
        for (Vertex v = 1; v <= n1; v++) {
            // The line runs v+1, ..., n+1, 1, ..., v-1 around the cut.
            std::vector<Vertex> order;
            for (int k = 1; k < n1; k++) {
                order.push_back((v - 1 + k) % n1 + 1);
            }
            ASSERT_EQ(measure(ring, v, Z), path(order)) << "n+1=" << n1 << " v=" << v;
            if (n1 >= 4) {
                ASSERT_EQ(measure(ring, v, Y), cycle(order)) << "n+1=" << n1 << " v=" << v;
            }
        }
    }
}

TEST(measure, line_y_interior_joins_neighbours) {
    Graph l6 = construct_named(NamedGraph::Line, 6);
    for (Vertex v = 2; v <= 5; v++) {
        ASSERT_EQ(measure(l6, v, Y), path(without(6, v)));
    }
}

TEST(measure, line5_x_middle_gives_line_plus_leaf) {
    Graph l5 = construct_named(NamedGraph::Line, 5);
    // Frozen from the dense oracle: stars centred on the special neighbour's
    // partner, with {2,4} the leaf-axil pair.
    ASSERT_EQ(measure(l5, 3, x_with(2)), graph_from_edges({{1, 4}, {2, 4}, {4, 5}}));
    ASSERT_EQ(measure(l5, 3, x_with(4)), graph_from_edges({{1, 2}, {2, 4}, {2, 5}}));
    for (Vertex w : {2, 4}) {
        Graph g = measure(l5, 3, x_with(w));
        bool pair_is_leaf_axil = (is_leaf(g, 2) && g.neighbourhood(2) == VertexSet{4}) ||
                                 (is_leaf(g, 4) && g.neighbourhood(4) == VertexSet{2});
        ASSERT_TRUE(pair_is_leaf_axil);
    }
}

TEST(measure, line_x_boundary_cases) {
    for (int n1 = 5; n1 <= 12; n1++) {
        Graph line = construct_named(NamedGraph::Line, n1);
        std::vector<Vertex> tail;  // 3..n+1
        std::vector<Vertex> head;  // 1..n-1
        for (Vertex u = 3; u <= n1; u++) tail.push_back(u);
        for (Vertex u = 1; u <= n1 - 2; u++) head.push_back(u);

        // End vertices: a line on n-1 vertices; the measured vertex's former
        // neighbour is left isolated.
        Graph end_first = path(tail);
        end_first.add_vertex(2);
        ASSERT_EQ(measure(line, 1, X), end_first);
        Graph end_last = path(head);
        end_last.add_vertex(n1 - 1);
        ASSERT_EQ(measure(line, n1, X), end_last);

        // Second and second-to-last vertices: a line on all n survivors, for
        // either special neighbour.
        std::vector<Vertex> order2 = {1};
        order2.insert(order2.end(), tail.begin(), tail.end());
        ASSERT_EQ(measure(line, 2, x_with(1)), path(order2));
        std::vector<Vertex> order2b = {3, 1};
        order2b.insert(order2b.end(), tail.begin() + 1, tail.end());
        ASSERT_EQ(measure(line, 2, x_with(3)), path(order2b));

        std::vector<Vertex> order_n(head.begin(), head.end() - 1);
        order_n.push_back(n1);
        order_n.push_back(n1 - 2);
        ASSERT_EQ(measure(line, n1 - 1, x_with(n1 - 2)), path(order_n));
        std::vector<Vertex> order_nb(head.begin(), head.end());
        order_nb.push_back(n1);
        ASSERT_EQ(measure(line, n1 - 1, x_with(n1)), path(order_nb));
    }
}

TEST(measure, ring_x_gives_smaller_ring_plus_leaf) {
    for (int n1 = 5; n1 <= 12; n1++) {
        Graph ring = construct_named(NamedGraph::Ring, n1);
        Graph g = measure(ring, 1, x_with(2));
        // Leaf 2 hangs off axil n+1, which sits on a ring over 3..n+1.
        ASSERT_EQ(g.neighbourhood(2), VertexSet{n1});
        std::vector<Vertex> rest;
        for (Vertex u = 3; u <= n1; u++) rest.push_back(u);
        ASSERT_EQ(delete_vertex(g, 2), cycle(rest));
        // Swapping the special neighbour swaps the leaf and axil roles.
        Graph swapped = measure(ring, 1, x_with(n1));
        ASSERT_EQ(swapped.neighbourhood(n1), VertexSet{2});
    }
}

TEST(measure, default_special_neighbour_is_lowest) {
    Graph l5 = construct_named(NamedGraph::Line, 5);
    ASSERT_EQ(measure(l5, 3, X), measure(l5, 3, x_with(2)));
}

TEST(measure, x_on_isolated_vertex_is_deletion) {
    Graph g = graph_from_edges({{1, 2}}, {3});
    ASSERT_EQ(measure(g, 3, X), graph_from_edges({{1, 2}}));
}

TEST(measure, errors) {
    Graph l3 = construct_named(NamedGraph::Line, 3);
    ASSERT_THROW(measure(l3, 9, Z), std::invalid_argument);
    ASSERT_THROW(measure(l3, 1, x_with(3)), std::invalid_argument);
    ASSERT_THROW(measure(graph_from_edges({{1, 2}}, {3}), 3, x_with(1)), std::invalid_argument);
}

TEST(measure, labels_of_survivors_unchanged) {
    Graph r6 = construct_named(NamedGraph::Ring, 6);
    for (PauliBasis b : {Z, Y, X}) {
        ASSERT_EQ(measure(r6, 1, b).vertices(), (std::vector<Vertex>{2, 3, 4, 5, 6}));
    }
}

TEST(measure, sequence_replay) {
    Graph l6 = construct_named(NamedGraph::Line, 6);
    MeasurementSequence seq{{3, Z}, {6, Z}};
    ASSERT_EQ(apply_measurements(l6, seq), graph_from_edges({{1, 2}, {4, 5}}));
    ASSERT_THROW(apply_measurements(l6, {{3, Z}, {3, Y}}), std::invalid_argument);
    ASSERT_THROW(apply_measurements(l6, {{7, Z}}), std::invalid_argument);
}

TEST(measure, pauli_names) {
    ASSERT_EQ(parse_pauli("x"), Pauli::X);
    ASSERT_EQ(parse_pauli("Y"), Pauli::Y);
    ASSERT_THROW(parse_pauli("W"), std::invalid_argument);
    ASSERT_EQ(to_string(Measurement{5, x_with(4)}), "5X(w=4)");
    ASSERT_EQ(to_string(Measurement{2, Y}), "2Y");
}
