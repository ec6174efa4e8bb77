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

#include "lcroute/vertex_minor.h"

#include <random>

#include "gtest/gtest.h"
#include "lcroute/foliage.h"
#include "oracle.h"
#include "test_util.h"

using namespace lcroute;

namespace {

SearchOptions only_leaf_axil() {
    SearchOptions o;
    o.component_filter = false;
    return o;
}

SearchOptions only_components() {
    SearchOptions o;
    o.leaf_axil_reduction = false;
    return o;
}

void expect_sound(const Graph &g, const Graph &h, const VertexMinorReport &report) {
    if (report.decision) {
        ASSERT_TRUE(report.witness.has_value());
        ASSERT_EQ(replay(g, *report.witness), h) << "G=" << g << " H=" << h;
    } else {
        ASSERT_FALSE(report.witness.has_value());
    }
}

}  // namespace

TEST(bell_pair_target, canonical_form) {
    BellPairTarget t({4, 2}, {3, 1});
    ASSERT_EQ(t.pair_a(), (Edge{1, 3}));
    ASSERT_EQ(t.pair_b(), (Edge{2, 4}));
    ASSERT_TRUE(t.crossing());
    ASSERT_FALSE(t.disjoint());
    ASSERT_TRUE(BellPairTarget({1, 2}, {4, 5}).disjoint());
    ASSERT_TRUE(BellPairTarget({2, 3}, {1, 4}).nested());
    ASSERT_EQ(t.graph(), graph_from_edges({{1, 3}, {2, 4}}));
    ASSERT_THROW(BellPairTarget({1, 2}, {2, 3}), std::invalid_argument);
    ASSERT_THROW(BellPairTarget({1, 1}, {2, 3}), std::invalid_argument);
    ASSERT_THROW(BellPairTarget({1, 64}, {2, 3}), std::invalid_argument);
}

TEST(is_vertex_minor, identical_graphs) {
    Graph r5 = construct_named(NamedGraph::Ring, 5);
    VertexMinorReport r = is_vertex_minor(r5, r5);
    ASSERT_TRUE(r.decision);
    ASSERT_TRUE(r.witness->measurements.empty());
    ASSERT_TRUE(r.witness->lc_path.empty());
}

TEST(is_vertex_minor, line3_to_k2_via_y) {
    Graph l3 = construct_named(NamedGraph::Line, 3);
    Graph k2 = graph_from_edges({{1, 3}});
    for (const SearchOptions &o : {SearchOptions{}, SearchOptions::unpruned()}) {
        VertexMinorReport r = is_vertex_minor(l3, k2, o);
        ASSERT_TRUE(r.decision);
        expect_sound(l3, k2, r);
    }
    VertexMinorReport plain = is_vertex_minor(l3, k2, SearchOptions::unpruned());
    ASSERT_EQ(plain.witness->measurements, (MeasurementSequence{{2, PauliBasis{Pauli::Y, std::nullopt}}}));
}

TEST(is_vertex_minor, ring6_crossing_infeasible) {
    Graph r6 = construct_named(NamedGraph::Ring, 6);
    Graph h = graph_from_edges({{1, 3}, {2, 4}});
    ASSERT_FALSE(is_vertex_minor(r6, h).decision);
    VertexMinorReport plain = is_vertex_minor(r6, h, SearchOptions::unpruned());
    ASSERT_FALSE(plain.decision);
    ASSERT_EQ(plain.stats.sequences_tried, 9u);
}

TEST(is_vertex_minor, line6_disjoint_feasible) {
    Graph l6 = construct_named(NamedGraph::Line, 6);
    Graph h = graph_from_edges({{1, 2}, {4, 5}});
    VertexMinorReport r = is_vertex_minor(l6, h);
    ASSERT_TRUE(r.decision);
    expect_sound(l6, h, r);
    VertexMinorReport plain = is_vertex_minor(l6, h, SearchOptions::unpruned());
    ASSERT_EQ(plain.witness->measurements,
              (MeasurementSequence{{3, PauliBasis{Pauli::Z, std::nullopt}}, {6, PauliBasis{Pauli::Z, std::nullopt}}}));
}

TEST(is_vertex_minor, errors) {
    Graph l3 = construct_named(NamedGraph::Line, 3);
    ASSERT_THROW(is_vertex_minor(l3, graph_from_edges({{1, 4}})), std::invalid_argument);
    SearchOptions bad_order;
    bad_order.order = {2};
    ASSERT_THROW(is_vertex_minor(l3, graph_from_edges({{2, 3}}), bad_order), std::invalid_argument);
    bad_order.order = {};
    SearchOptions tiny;
    tiny.budget = 3;
    ASSERT_THROW(is_vertex_minor(construct_named(NamedGraph::Ring, 8), BellPairTarget({1, 3}, {2, 4}).graph(), tiny),
                 BudgetExceeded);
    ASSERT_THROW(can_extract_bell_pairs(l3, BellPairTarget({1, 2}, {3, 4})), std::invalid_argument);
}

TEST(is_vertex_minor, budget_error_is_not_a_decision) {
    SearchOptions o = SearchOptions::unpruned();
    o.budget = 10;
    try {
        (void)is_vertex_minor(construct_named(NamedGraph::Ring, 7), BellPairTarget({1, 3}, {2, 4}).graph(), o);
        FAIL() << "expected BudgetExceeded";
    } catch (const BudgetExceeded &e) {
        ASSERT_EQ(e.budget(), 10u);
        ASSERT_GT(e.spent(), 10u);
    }
}

TEST(leaf_axil_reduction, leaf_deleted) {
    Graph l3 = construct_named(NamedGraph::Line, 3);
    ASSERT_EQ(apply_leaf_axil_reduction(l3, VertexSet{2, 3}, 1), graph_from_edges({{2, 3}}));
}

TEST(leaf_axil_reduction, axil) {
    Graph l3 = construct_named(NamedGraph::Line, 3);
    // Frozen from the dense oracle: tau_1 tau_2 then delete 2.
    ASSERT_EQ(apply_leaf_axil_reduction(l3, VertexSet{1, 3}, 2), graph_from_edges({{1, 3}}));
    Measurement step = leaf_axil_reduction_step(l3, VertexSet{1, 3}, 2);
    ASSERT_EQ(step.basis.axis, Pauli::X);
    ASSERT_EQ(step.basis.special, std::optional<Vertex>(1));
}

TEST(leaf_axil_reduction, errors) {
    Graph l3 = construct_named(NamedGraph::Line, 3);
    ASSERT_THROW(apply_leaf_axil_reduction(l3, VertexSet{1, 3}, 3), std::invalid_argument);
    ASSERT_THROW(apply_leaf_axil_reduction(construct_named(NamedGraph::Ring, 4), VertexSet{1, 2}, 3),
                 std::invalid_argument);
}

TEST(leaf_axil_reduction, equals_measurement_form_exhaustive) {
    fixtures::for_each_small_graph(5, [](const Graph &g) {
        for (Vertex v : g.vertex_set()) {
            if (g.degree(v) == 1 || !leaves_of(g, v).empty()) {
                Measurement step = leaf_axil_reduction_step(g, VertexSet{}, v);
                ASSERT_EQ(apply_leaf_axil_reduction(g, VertexSet{}, v), measure(g, v, step.basis));
            }
        }
    });
}

TEST(leaf_axil_reduction, isolated_partner_counterexample) {
    // X_3 isolates the axil 1, which plain deletion of the leaf cannot do.
    Graph star = graph_from_edges({{1, 2}, {1, 3}});
    Graph h = empty_graph({1, 2});
    ASSERT_EQ(leaf_axil_partner(star, 3), 1);
    ASSERT_EQ(measure(star, 3, PauliBasis{Pauli::X, 1}), h);
    ASSERT_FALSE(is_vertex_minor(apply_leaf_axil_reduction(star, VertexSet{1, 2}, 3), h).decision);
    ASSERT_TRUE(is_vertex_minor(star, h).decision);
    ASSERT_TRUE(oracle::is_vertex_minor(oracle::to_dense(star), oracle::to_dense(h)));
}

TEST(leaf_axil_reduction, preserves_answer_exhaustive) {
    // Every H on the remaining labels whose partner vertex is not isolated:
    // G and its reduction agree.
    fixtures::for_each_small_graph(5, [](const Graph &g) {
        for (Vertex v : g.vertex_set()) {
            if (g.degree(v) != 1 && leaves_of(g, v).empty()) {
                continue;
            }
            Vertex partner = leaf_axil_partner(g, v);
            Graph reduced = apply_leaf_axil_reduction(g, VertexSet{}, v);
            std::vector<Vertex> rest = reduced.vertices();
            fixtures::for_each_graph(rest, [&](const Graph &h) {
                if (h.contains(partner) && h.degree(partner) == 0) {
                    return;
                }
                ASSERT_EQ(is_vertex_minor(g, h, SearchOptions::unpruned()).decision,
                          is_vertex_minor(reduced, h, SearchOptions::unpruned()).decision)
                    << "G=" << g << " v=" << v << " H=" << h;
            });
        }
    });
}

TEST(is_vertex_minor, agrees_with_dense_oracle_exhaustive_small) {
    // All G on n <= 4 and all H on proper label subsets of size >= 2.
    for (int n = 3; n <= 4; n++) {
        fixtures::for_each_graph(fixtures::iota_labels(n), [&](const Graph &g) {
            oracle::Dense dg = oracle::to_dense(g);
            for (uint64_t sub = 1; sub < (uint64_t{1} << n) - 1; sub++) {
                VertexSet labels(sub << 1);
                if (labels.size() < 2) continue;
                fixtures::for_each_graph(labels.to_vector(), [&](const Graph &h) {
                    bool expected = oracle::is_vertex_minor(dg, oracle::to_dense(h));
                    for (const SearchOptions &o :
                         {SearchOptions{}, SearchOptions::unpruned(), only_leaf_axil(), only_components()}) {
                        VertexMinorReport r = is_vertex_minor(g, h, o);
                        ASSERT_EQ(r.decision, expected) << "G=" << g << " H=" << h;
                        expect_sound(g, h, r);
                    }
                });
            }
        });
    }
}

TEST(is_vertex_minor, each_pruning_agrees_with_unpruned_on_bell_targets) {
    std::vector<BellPairTarget> targets;
    for (auto [a, b] : std::vector<std::pair<Edge, Edge>>{
             {{1, 2}, {3, 4}}, {{1, 3}, {2, 4}}, {{1, 4}, {2, 3}}, {{1, 2}, {4, 5}}, {{2, 5}, {1, 4}}}) {
        targets.emplace_back(a, b);
    }
    fixtures::for_each_graph(fixtures::iota_labels(5), [&](const Graph &g) {
        for (const auto &t : targets) {
            bool expected = can_extract_bell_pairs(g, t, SearchOptions::unpruned()).decision;
            for (const SearchOptions &o : {SearchOptions{}, only_leaf_axil(), only_components()}) {
                VertexMinorReport r = can_extract_bell_pairs(g, t, o);
                ASSERT_EQ(r.decision, expected) << g;
                expect_sound(g, t.graph(), r);
            }
        }
    });
}

TEST(is_vertex_minor, invariant_under_lc_of_g) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; trial++) {
        Graph g = fixtures::random_graph(rng, fixtures::iota_labels(6), 0.5);
        BellPairTarget t({1, 4}, {2, 5});
        bool base = can_extract_bell_pairs(g, t).decision;
        LcOrbit orbit = lc_orbit(g);
        for (size_t i = 0; i < orbit.size(); i += std::max<size_t>(1, orbit.size() / 10)) {
            ASSERT_EQ(can_extract_bell_pairs(orbit.at(i), t).decision, base);
        }
    }
}

TEST(is_vertex_minor, order_independent) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 60; trial++) {
        Graph g = fixtures::random_graph(rng, fixtures::iota_labels(6), 0.45);
        Graph h = fixtures::random_graph(rng, {1, 3, 5}, 0.6);
        SearchOptions ascending = SearchOptions::unpruned();
        SearchOptions descending = SearchOptions::unpruned();
        descending.order = {6, 4, 2};
        VertexMinorReport a = is_vertex_minor(g, h, ascending);
        VertexMinorReport d = is_vertex_minor(g, h, descending);
        ASSERT_EQ(a.decision, d.decision) << g << " / " << h;
        expect_sound(g, h, d);
    }
}

TEST(is_vertex_minor, witness_is_first_in_enumeration_order) {
    // L4 -> K2 on {1,4}: Z at 2 disconnects, so the first hit is 2Y 3Y.
    Graph l4 = construct_named(NamedGraph::Line, 4);
    VertexMinorReport r = is_vertex_minor(l4, graph_from_edges({{1, 4}}), SearchOptions::unpruned());
    ASSERT_TRUE(r.decision);
    ASSERT_EQ(r.witness->measurements.size(), 2u);
    ASSERT_EQ(r.witness->measurements[0].vertex, 2);
    ASSERT_EQ(r.witness->measurements[0].basis.axis, Pauli::Y);
    ASSERT_EQ(r.witness->measurements[1].vertex, 3);
    expect_sound(l4, graph_from_edges({{1, 4}}), r);
}

TEST(is_vertex_minor, component_filter_refutes_early) {
    Graph split = graph_from_edges({{1, 2}, {3, 4}, {5, 6}});
    VertexMinorReport r = is_vertex_minor(split, graph_from_edges({{1, 3}}));
    ASSERT_FALSE(r.decision);
    ASSERT_EQ(r.stats.sequences_tried, 0u);
    ASSERT_GT(r.stats.component_cuts, 0u);
}
