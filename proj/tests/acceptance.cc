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

// Release acceptance checks. Prints one PASS/FAIL line per criterion and
// exits non-zero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "lcroute/butterfly_demo.h"
#include "lcroute/document.h"
#include "lcroute/foliage.h"
#include "lcroute/lc_orbit.h"
#include "lcroute/measurement.h"
#include "lcroute/theorems.h"
#include "lcroute/vertex_minor.h"
#include "oracle.h"
#include "test_util.h"

using namespace lcroute;

namespace {

struct Verdict {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string &what) {
        if (!ok && pass) {
            pass = false;
            detail.str("");
            detail << "first failure: " << what;
        }
    }
};

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

std::vector<Vertex> range(Vertex lo, Vertex hi) {
    std::vector<Vertex> out;
    for (Vertex v = lo; v <= hi; v++) {
        out.push_back(v);
    }
    return out;
}

// Shared by the oracle-equivalence and witness-soundness criteria.
struct WitnessLedger {
    size_t positives = 0;
    size_t replayed = 0;

    void check(const Graph &g, const Graph &h, const VertexMinorReport &r) {
        if (!r.decision) {
            return;
        }
        positives++;
        if (r.witness && replay(g, *r.witness) == h) {
            replayed++;
        }
    }
};

WitnessLedger witnesses;

// Re-decides every instance with all reductions disabled.
size_t unpruned_disagreements(const TheoremReport &r, NamedGraph kind) {
    size_t bad = 0;
    for (const InstanceResult &i : r.instances) {
        const Quadruple &q = i.quadruple;
        BellPairTarget t({q.a1, q.a2}, {q.b1, q.b2});
        bool brute = can_extract_bell_pairs(construct_named(kind, q.n), t, SearchOptions::unpruned()).decision;
        bad += brute != (i.outcome == Outcome::Feasible);
    }
    return bad;
}

void ring_theorem(Verdict &v) {
    TheoremReport r = verify_ring_no_crossing({8, kDefaultBudget, 0});
    v.require(r.confirmed(), "ring report not confirmed");
    for (const SizeSummary &s : r.sizes) {
        v.require(s.tested == binomial(s.n - 1, 3), "count mismatch at n=" + std::to_string(s.n));
        v.require(s.infeasible == s.tested, "feasible crossing at n=" + std::to_string(s.n));
        if (s.n <= 4) {
            v.require(s.measured == 0, "n<=4 instance needs measurements");
        }
    }
    v.require(r.seconds < 600, "over 10 minutes");
    v.require(unpruned_disagreements(r, NamedGraph::Ring) == 0, "unpruned search disagrees");
    if (v.pass) {
        v.detail << r.quadruples_tested() << " quadruples, n=3..8, 0 violations, unpruned rerun agrees";
    }
}

void line_theorem(Verdict &v) {
    TheoremReport r = verify_line_no_crossing({8, kDefaultBudget, 0});
    v.require(r.confirmed(), "line report not confirmed");
    for (const SizeSummary &s : r.sizes) {
        v.require(s.tested == binomial(s.n, 4), "count mismatch at n=" + std::to_string(s.n));
    }
    v.require(r.seconds < 600, "over 10 minutes");
    v.require(unpruned_disagreements(r, NamedGraph::Line) == 0, "unpruned search disagrees");
    if (v.pass) {
        v.detail << r.quadruples_tested() << " quadruples, n=4..8, 0 violations, unpruned rerun agrees";
    }
}

void foliage_property(Verdict &v) {
    FoliageReport r = verify_foliage_invariance();
    v.require(r.confirmed(), "foliage changed under a complementation");
    v.require(r.graphs == 33867, "graph count is not 33867");

    Graph twins = graph_from_edges({{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}});
    Graph t1 = local_complement(twins, 2);
    v.require(t1.neighbourhood(1) == VertexSet{2} && foliage_decomposition(t1).axils.contains(2),
              "adjacent twins did not become leaf and axil");
    Graph star = graph_from_edges({{1, 2}, {2, 3}, {2, 4}});
    Graph t2 = local_complement(star, 2);
    v.require(t2.adjacent(1, 2) && are_twins(t2, 1, 2), "leaf and axil did not become twins");
    Graph square = graph_from_edges({{1, 3}, {1, 4}, {2, 3}, {2, 4}});
    Graph t3 = local_complement(square, 3);
    v.require(t3.adjacent(1, 2) && are_twins(t3, 1, 2), "separated twins did not join");
    if (v.pass) {
        v.detail << r.graphs << " graphs, " << r.complementations << " complementations, " << r.micro_transitions
                 << " micro-transitions, 3 directed transitions";
    }
}

void measurement_identities(Verdict &v) {
    const PauliBasis Z{Pauli::Z, std::nullopt}, Y{Pauli::Y, std::nullopt}, X{Pauli::X, std::nullopt};
    size_t checked = 0;
    for (int n1 = 4; n1 <= 12; n1++) {
        Graph ring = construct_named(NamedGraph::Ring, n1);
        for (Vertex u = 1; u <= n1; u++) {
            std::vector<Vertex> order;
            for (int k = 1; k < n1; k++) {
                order.push_back((u - 1 + k) % n1 + 1);
            }
            v.require(measure(ring, u, Z) == path(order), "Z on ring n+1=" + std::to_string(n1));
            v.require(measure(ring, u, Y) == cycle(order), "Y on ring n+1=" + std::to_string(n1));
            checked += 2;
        }
    }
    for (int n1 = 5; n1 <= 12; n1++) {
        Graph line = construct_named(NamedGraph::Line, n1);
        // Ends: L_{n-1}, with the measured vertex's neighbour left isolated.
        Graph first = path(range(3, n1));
        first.add_vertex(2);
        Graph last = path(range(1, n1 - 2));
        last.add_vertex(n1 - 1);
        v.require(measure(line, 1, X) == first, "X_1 on line n+1=" + std::to_string(n1));
        v.require(measure(line, n1, X) == last, "X_{n+1} on line n+1=" + std::to_string(n1));
        // Second vertices: L_n, for either special neighbour.
        auto x_at = [&](Vertex u, Vertex w) { return measure(line, u, PauliBasis{Pauli::X, w}); };
        std::vector<Vertex> a = {1}, b = {3, 1}, c = range(1, n1 - 3), d = range(1, n1 - 2);
        for (Vertex u : range(3, n1)) a.push_back(u);
        for (Vertex u : range(4, n1)) b.push_back(u);
        c.push_back(n1);
        c.push_back(n1 - 2);
        d.push_back(n1);
        v.require(x_at(2, 1) == path(a) && x_at(2, 3) == path(b), "X_2 on line n+1=" + std::to_string(n1));
        v.require(x_at(n1 - 1, n1 - 2) == path(c) && x_at(n1 - 1, n1) == path(d),
                  "X_n on line n+1=" + std::to_string(n1));
        checked += 6;
    }
    if (v.pass) {
        v.detail << checked << " exact identities (ring Z/Y for n+1=4..12, line X at 1,2,n,n+1 for n+1=5..12)";
    }
}

void butterfly(Verdict &v) {
    ButterflyDemo d = demo_ring_butterfly();
    auto measured = [](const DemoTranscript &t) {
        std::set<Vertex> out;
        for (const DemoStep &s : t.steps) {
            if (s.kind == StepKind::Measure) out.insert(s.args.front());
        }
        return out;
    };
    v.require(d.without_cz.initial == construct_named(NamedGraph::Ring, 6), "does not start at R_6");
    v.require(d.without_cz.replays() && d.with_cz.replays(), "transcript does not replay");
    v.require(d.without_cz.final_graph() == BellPairTarget({2, 4}, {1, 5}).graph(), "pairs (2,4),(1,5) not reached");
    v.require(d.with_cz.final_graph() == BellPairTarget({1, 4}, {2, 5}).graph(), "pairs (1,4),(2,5) not reached");
    v.require(measured(d.without_cz) == std::set<Vertex>{3, 6} && measured(d.with_cz) == std::set<Vertex>{3, 6},
              "measured set is not {3,6}");
    size_t cz = 0;
    for (const DemoStep &s : d.with_cz.steps) {
        if (s.kind == StepKind::ControlledZ) {
            cz++;
            v.require(s.args == std::vector<Vertex>{3, 6}, "CZ not on (3,6)");
        }
    }
    v.require(cz == 1, "expected exactly one CZ");
    v.require(!d.direct_crossing.decision, "direct crossing reported feasible");
    if (v.pass) {
        v.detail << "both transcripts replay; direct crossing infeasible after "
                 << d.direct_crossing.stats.sequences_tried << " sequences";
    }
}

void oracle_equivalence(Verdict &v) {
    size_t instances = 0, disagreements = 0;
    auto compare = [&](const Graph &g, const Graph &h, bool dense) {
        VertexMinorReport pruned = is_vertex_minor(g, h);
        VertexMinorReport brute = is_vertex_minor(g, h, SearchOptions::unpruned());
        bool agree = pruned.decision == brute.decision;
        if (dense) {
            agree = agree && brute.decision == oracle::is_vertex_minor(oracle::to_dense(g), oracle::to_dense(h));
        }
        witnesses.check(g, h, pruned);
        witnesses.check(g, h, brute);
        instances++;
        if (!agree) {
            disagreements++;
            v.require(false, "disagreement on G=" + std::string(serialize(g, GraphFormat::EdgeList)));
        }
    };

    // Exhaustive: every G on n <= 5 against every H on a label subset of
    // size >= 2. The dense oracle joins in for n <= 4.
    for (int n = 3; n <= 5; n++) {
        fixtures::for_each_graph(fixtures::iota_labels(n), [&](const Graph &g) {
            for (uint64_t sub = 1; sub < (uint64_t{1} << n) - 1; sub++) {
                VertexSet labels(sub << 1);
                if (labels.size() < 2) continue;
                fixtures::for_each_graph(labels.to_vector(), [&](const Graph &h) { compare(g, h, n <= 4); });
            }
        });
    }
    size_t exhaustive = instances;

    std::mt19937_64 rng(20260101);
    std::uniform_int_distribution<int> size(5, 7);
    for (int trial = 0; trial < 1000; trial++) {
        int n = size(rng);
        Graph g = fixtures::random_graph(rng, fixtures::iota_labels(n), 0.5);
        std::vector<Vertex> labels = fixtures::iota_labels(n);
        std::shuffle(labels.begin(), labels.end(), rng);
        if (trial % 2 == 0) {
            std::sort(labels.begin(), labels.begin() + 4);
            compare(g, BellPairTarget({labels[0], labels[2]}, {labels[1], labels[3]}).graph(), true);
        } else {
            int k = std::uniform_int_distribution<int>(2, 4)(rng);
            labels.resize(k);
            compare(g, fixtures::random_graph(rng, labels, 0.5), true);
        }
    }
    if (v.pass) {
        v.detail << exhaustive << " exhaustive + " << instances - exhaustive << " random instances, "
                 << disagreements << " disagreements";
    }
}

void witness_soundness(Verdict &v) {
    // Bell-pair extractions from the controls harness add larger witnesses.
    ControlsReport controls = verify_noncrossing_controls({7, kDefaultBudget, 0});
    for (const InstanceResult &i : controls.line.instances) {
        const Quadruple &q = i.quadruple;
        Graph g = construct_named(NamedGraph::Line, q.n);
        BellPairTarget t({q.a1, q.a2}, {q.b1, q.b2});
        witnesses.check(g, t.graph(), can_extract_bell_pairs(g, t));
    }
    v.require(witnesses.positives > 0, "no positive reports collected");
    v.require(witnesses.replayed == witnesses.positives, "a witness failed to replay");
    v.detail << witnesses.replayed << "/" << witnesses.positives << " positive reports replay exactly";
}

void core_algebra(Verdict &v) {
    size_t graphs = 0, x_groups = 0;
    fixtures::for_each_small_graph(5, [&](const Graph &g) {
        graphs++;
        auto partition = connected_components(g);
        for (Vertex u : g.vertex_set()) {
            Graph t = local_complement(g, u);
            v.require(local_complement(t, u) == g, "tau not an involution");
            v.require(connected_components(t) == partition, "tau changed components");
            VertexSet nu = g.neighbourhood(u);
            if (nu.size() < 2) continue;
            std::vector<Graph> results;
            for (Vertex w : nu) {
                results.push_back(measure(g, u, PauliBasis{Pauli::X, w}));
            }
            for (size_t i = 1; i < results.size(); i++) {
                // Dense BFS orbit, independent of the packed orbit store.
                auto orbit = oracle::orbit(oracle::to_dense(results[0]));
                v.require(orbit.count(oracle::to_dense(results[i])) > 0, "X results not LC-equivalent");
                v.require(is_lc_equivalent(results[0], results[i]), "orbit store disagrees");
            }
            x_groups++;
        }
    });
    if (v.pass) {
        v.detail << graphs << " graphs (n<=5): involution, components, " << x_groups
                 << " X neighbour-choice groups LC-equivalent";
    }
}

void serialization(Verdict &v) {
    size_t graphs = 0;
    fixtures::for_each_small_graph(6, [&](const Graph &g) {
        graphs++;
        for (GraphFormat f : {GraphFormat::EdgeList, GraphFormat::Json}) {
            std::string text = serialize(g, f);
            v.require(parse_graph(text, f) == g, "round-trip mismatch: " + text);
        }
    });
    v.require(graphs == 33867, "graph count is not 33867");
    if (v.pass) {
        v.detail << graphs << " graphs x 2 formats, 0 mismatches";
    }
}

}  // namespace

int main() {
    const std::pair<const char *, std::function<void(Verdict &)>> criteria[] = {
        {"ring-no-crossing", ring_theorem},
        {"line-no-crossing", line_theorem},
        {"foliage-invariance", foliage_property},
        {"measurement-identities", measurement_identities},
        {"butterfly-demo", butterfly},
        {"oracle-equivalence", oracle_equivalence},
        {"witness-soundness", witness_soundness},
        {"core-algebra", core_algebra},
        {"serialization", serialization},
    };
    int failed = 0;
    for (const auto &[name, run] : criteria) {
        Verdict v;
        auto start = std::chrono::steady_clock::now();
        try {
            run(v);
        } catch (const std::exception &e) {
            v.require(false, std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s  %-24s %s (%.1f s)\n", v.pass ? "PASS" : "FAIL", name, v.detail.str().c_str(), secs);
        std::fflush(stdout);
        failed += !v.pass;
    }
    std::printf("%d/%zu criteria passed\n", int(std::size(criteria)) - failed, std::size(criteria));
    return failed == 0 ? 0 : 1;
}
