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

#include "lcroute/theorems.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <mutex>
#include <random>
#include <thread>

#include "lcroute/foliage.h"

namespace lcroute {

const char *topology_name(Topology t) { return t == Topology::Ring ? "ring" : "line"; }

const char *outcome_name(Outcome o) {
    switch (o) {
        case Outcome::Feasible:
            return "feasible";
        case Outcome::Infeasible:
            return "infeasible";
        case Outcome::BudgetExceeded:
            return "budget-exceeded";
    }
    return "?";
}

size_t TheoremReport::quadruples_tested() const { return instances.size(); }

size_t binomial(int n, int k) {
    if (k < 0 || n < k) {
        return 0;
    }
    size_t out = 1;
    for (int i = 1; i <= k; i++) {
        out = out * static_cast<size_t>(n - k + i) / static_cast<size_t>(i);
    }
    return out;
}

std::vector<Quadruple> ring_crossing_quadruples(int n) {
    std::vector<Quadruple> out;
    for (Vertex b1 = 2; b1 <= n; b1++) {
        for (Vertex a2 = b1 + 1; a2 <= n; a2++) {
            for (Vertex b2 = a2 + 1; b2 <= n; b2++) {
                out.push_back({n, 1, b1, a2, b2});
            }
        }
    }
    return out;
}

std::vector<Quadruple> line_crossing_quadruples(int n) {
    std::vector<Quadruple> out;
    for (Vertex a1 = 1; a1 <= n; a1++) {
        for (Vertex b1 = a1 + 1; b1 <= n; b1++) {
            for (Vertex a2 = b1 + 1; a2 <= n; a2++) {
                for (Vertex b2 = a2 + 1; b2 <= n; b2++) {
                    out.push_back({n, a1, b1, a2, b2});
                }
            }
        }
    }
    return out;
}

MeasurementSequence disjoint_line_schedule(const Quadruple &q) {
    if (!(q.a1 < q.a2 && q.a2 < q.b1 && q.b1 < q.b2 && q.a1 >= 1 && q.b2 <= q.n)) {
        throw std::invalid_argument("schedule needs disjoint pairs a1 < a2 < b1 < b2 on 1..n");
    }
    MeasurementSequence out;
    for (Vertex v = 1; v <= q.n; v++) {
        bool inside_a = q.a1 < v && v < q.a2;
        bool inside_b = q.b1 < v && v < q.b2;
        if (inside_a || inside_b) {
            out.push_back({v, PauliBasis{Pauli::Y, std::nullopt}});
        } else if (v != q.a1 && v != q.a2 && v != q.b1 && v != q.b2) {
            out.push_back({v, PauliBasis{Pauli::Z, std::nullopt}});
        }
    }
    return out;
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void check_n_max(int n_max) {
    if (n_max < 3 || n_max > kHarnessMaxN) {
        throw std::invalid_argument("n_max must lie in 3.." + std::to_string(kHarnessMaxN));
    }
}

Graph topology_graph(Topology t, int n) {
    return construct_named(t == Topology::Ring ? NamedGraph::Ring : NamedGraph::Line, n);
}

// Runs f on every index, spreading work over threads. Results land at their
// own index, so the output does not depend on the schedule.
void parallel_for(size_t count, unsigned threads, const std::function<void(size_t)> &f) {
    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    threads = static_cast<unsigned>(std::min<size_t>(threads, count));
    if (threads <= 1) {
        for (size_t i = 0; i < count; i++) {
            f(i);
        }
        return;
    }
    std::atomic<size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; t++) {
        pool.emplace_back([&] {
            for (size_t i = next++; i < count; i = next++) {
                try {
                    f(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(failure_mutex);
                    if (!failure) {
                        failure = std::current_exception();
                    }
                }
            }
        });
    }
    pool.clear();
    if (failure) {
        std::rethrow_exception(failure);
    }
}

InstanceResult decide(const Quadruple &q, Topology t, uint64_t budget) {
    SearchOptions options;
    options.budget = budget;
    InstanceResult result{q, Outcome::Infeasible, 0, std::nullopt};
    try {
        VertexMinorReport report =
            can_extract_bell_pairs(topology_graph(t, q.n), BellPairTarget({q.a1, q.a2}, {q.b1, q.b2}), options);
        result.outcome = report.decision ? Outcome::Feasible : Outcome::Infeasible;
        result.work = report.stats.work;
    } catch (const BudgetExceeded &e) {
        result.outcome = Outcome::BudgetExceeded;
        result.work = e.spent();
    }
    return result;
}

// Evaluates the instances for n = n_min..n_max and fills in the tallies.
// `expected_count` gives the closed-form count for each n.
void run_report(TheoremReport &report, const std::function<std::vector<Quadruple>(int)> &quadruples,
                const std::function<size_t(int)> &expected_count, const HarnessOptions &options,
                const std::function<void(InstanceResult &)> &extra = {}) {
    auto start = Clock::now();
    std::vector<Quadruple> all;
    for (int n = report.n_min; n <= report.n_max; n++) {
        SizeSummary size;
        size.n = n;
        size.expected = expected_count(n);
        size.measured = std::max(0, n - 4);
        report.sizes.push_back(size);
        for (const Quadruple &q : quadruples(n)) {
            all.push_back(q);
        }
    }
    std::sort(all.begin(), all.end());
    report.instances.resize(all.size());
    parallel_for(all.size(), options.threads, [&](size_t i) {
        InstanceResult r = decide(all[i], report.topology, options.budget);
        if (extra) {
            extra(r);
        }
        report.instances[i] = r;
    });
    for (const InstanceResult &r : report.instances) {
        SizeSummary &size = report.sizes[static_cast<size_t>(r.quadruple.n - report.n_min)];
        size.tested++;
        switch (r.outcome) {
            case Outcome::Feasible:
                size.feasible++;
                break;
            case Outcome::Infeasible:
                size.infeasible++;
                break;
            case Outcome::BudgetExceeded:
                size.overruns++;
                report.budget_overruns.push_back(r.quadruple);
                continue;
        }
        if (!report.asserted || r.recorded_only) {
            continue;
        }
        bool wrong = report.expects_infeasible ? r.outcome == Outcome::Feasible : r.outcome == Outcome::Infeasible;
        if (wrong || r.constructive == false) {
            report.violations.push_back(r.quadruple);
        }
    }
    report.seconds = seconds_since(start);
}

TheoremReport no_crossing(Topology t, const HarnessOptions &options) {
    check_n_max(options.n_max);
    TheoremReport report;
    report.name = std::string(topology_name(t)) + "-no-crossing";
    report.topology = t;
    report.n_min = t == Topology::Ring ? 3 : 4;
    report.n_max = options.n_max;
    report.budget = options.budget;
    if (t == Topology::Ring) {
        run_report(report, ring_crossing_quadruples, [](int n) { return binomial(n - 1, 3); }, options);
    } else {
        run_report(report, line_crossing_quadruples, [](int n) { return binomial(n, 4); }, options);
    }
    return report;
}

}  // namespace

TheoremReport verify_ring_no_crossing(const HarnessOptions &options) { return no_crossing(Topology::Ring, options); }

TheoremReport verify_line_no_crossing(const HarnessOptions &options) { return no_crossing(Topology::Line, options); }

ControlsReport verify_noncrossing_controls(const HarnessOptions &options) {
    check_n_max(options.n_max);
    ControlsReport out;

    TheoremReport &line = out.line;
    line.name = "line-controls";
    line.topology = Topology::Line;
    line.n_min = 4;
    line.n_max = options.n_max;
    line.budget = options.budget;
    line.expects_infeasible = false;
    auto disjoint_line = [](int n) {
        std::vector<Quadruple> qs;
        for (const Quadruple &c : line_crossing_quadruples(n)) {
            // Same four labels, paired as (1st,2nd) and (3rd,4th).
            qs.push_back({n, c.a1, c.a2, c.b1, c.b2});
        }
        return qs;
    };
    run_report(line, disjoint_line, [](int n) { return binomial(n, 4); }, options, [](InstanceResult &r) {
        const Quadruple &q = r.quadruple;
        if (q.b1 == q.a2 + 1) {
            r.recorded_only = true;
            return;
        }
        Graph reached = apply_measurements(construct_named(NamedGraph::Line, q.n), disjoint_line_schedule(q));
        r.constructive = reached == BellPairTarget({q.a1, q.a2}, {q.b1, q.b2}).graph();
    });

    TheoremReport &ring = out.ring;
    ring.name = "ring-controls";
    ring.topology = Topology::Ring;
    ring.n_min = 4;
    ring.n_max = options.n_max;
    ring.budget = options.budget;
    ring.asserted = false;
    auto noncrossing_ring = [](int n) {
        std::vector<Quadruple> qs;
        for (const Quadruple &c : ring_crossing_quadruples(n)) {
            Vertex x = c.b1, y = c.a2, z = c.b2;
            qs.push_back({n, 1, y, x, z});  // disjoint (1,x),(y,z)
            qs.push_back({n, 1, x, z, y});  // nested (1,z),(x,y)
        }
        return qs;
    };
    run_report(ring, noncrossing_ring, [](int n) { return 2 * binomial(n - 1, 3); }, options);
    return out;
}

namespace {

struct FoliageChecker {
    FoliageReport &report;

    void fail(const Graph &g, Vertex v, std::string check) {
        if (report.failures.size() < 64) {
            report.failures.push_back({g, v, std::move(check)});
        }
    }

    void check(const Graph &g) {
        report.graphs++;
        VertexSet before = foliage_decomposition(g).foliage();
        for (Vertex v : g.vertex_set()) {
            report.complementations++;
            if (foliage_decomposition(local_complement(g, v)).foliage() != before) {
                fail(g, v, "foliage changed under local complementation");
            }
        }
        check_transitions(g);
    }

    void check_transitions(const Graph &g) {
        for (Vertex v : g.vertex_set()) {
            for (Vertex w : g.vertex_set()) {
                if (v == w) {
                    continue;
                }
                bool adjacent = g.adjacent(v, w);
                bool twins = (g.neighbourhood(v) - VertexSet::single(w)) == (g.neighbourhood(w) - VertexSet::single(v));
                if (twins && adjacent) {
                    report.micro_transitions++;
                    Graph t = local_complement(g, w);
                    if (t.neighbourhood(v) != VertexSet::single(w)) {
                        fail(g, w, "adjacent twins did not become leaf and axil");
                    }
                }
                if (adjacent && g.degree(v) == 1) {
                    report.micro_transitions++;
                    Graph t = local_complement(g, w);
                    bool now_twins = (t.neighbourhood(v) - VertexSet::single(w)) ==
                                     (t.neighbourhood(w) - VertexSet::single(v));
                    if (!now_twins || !t.adjacent(v, w)) {
                        fail(g, w, "leaf and axil did not become twins");
                    }
                }
                if (twins && !adjacent && v < w) {
                    for (Vertex u : g.neighbourhood(v) & g.neighbourhood(w)) {
                        report.micro_transitions++;
                        Graph t = local_complement(g, u);
                        bool now_twins = (t.neighbourhood(v) - VertexSet::single(w)) ==
                                         (t.neighbourhood(w) - VertexSet::single(v));
                        if (!now_twins || !t.adjacent(v, w)) {
                            fail(g, u, "separated twins did not become adjacent twins");
                        }
                    }
                }
            }
        }
    }
};

}  // namespace

FoliageReport verify_foliage_invariance(const FoliageOptions &options) {
    if (options.n_max < 1 || options.n_max > kHarnessMaxN) {
        throw std::invalid_argument("n_max must lie in 1.." + std::to_string(kHarnessMaxN));
    }
    auto start = Clock::now();
    FoliageReport report;
    report.n_max = options.n_max;
    FoliageChecker checker{report};
    std::mt19937_64 rng(options.seed);
    for (int n = 1; n <= options.n_max; n++) {
        std::vector<Edge> slots;
        for (Vertex u = 1; u <= n; u++) {
            for (Vertex v = u + 1; v <= n; v++) {
                slots.push_back({u, v});
            }
        }
        VertexSet labels;
        for (Vertex v = 1; v <= n; v++) {
            labels.insert(v);
        }
        auto build = [&](auto &&has_edge) {
            Graph g(labels);
            for (size_t i = 0; i < slots.size(); i++) {
                if (has_edge(i)) {
                    g.toggle_edge(slots[i].first, slots[i].second);
                }
            }
            return g;
        };
        if (n <= report.exhaustive_up_to) {
            for (uint64_t mask = 0; mask < (uint64_t{1} << slots.size()); mask++) {
                checker.check(build([&](size_t i) { return ((mask >> i) & 1) != 0; }));
            }
        } else {
            std::bernoulli_distribution coin(0.5);
            for (size_t s = 0; s < options.samples_per_size; s++) {
                checker.check(build([&](size_t) { return coin(rng); }));
            }
        }
    }
    report.seconds = seconds_since(start);
    return report;
}

}  // namespace lcroute
