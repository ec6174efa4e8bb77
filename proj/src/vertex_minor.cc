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

#include <algorithm>

#include "lcroute/foliage.h"

namespace lcroute {

BudgetExceeded::BudgetExceeded(uint64_t budget, uint64_t spent)
    : std::runtime_error("search budget of " + std::to_string(budget) + " work units exceeded"),
      budget_(budget),
      spent_(spent) {}

BellPairTarget::BellPairTarget(Edge first, Edge second) {
    for (Vertex v : {first.first, first.second, second.first, second.second}) {
        if (!is_valid_label(v)) {
            throw std::invalid_argument("Bell pair label " + std::to_string(v) + " is outside 0..63");
        }
    }
    auto sorted = [](Edge e) { return e.first < e.second ? e : Edge{e.second, e.first}; };
    a_ = sorted(first);
    b_ = sorted(second);
    if (b_.first < a_.first) {
        std::swap(a_, b_);
    }
    if (labels().size() != 4) {
        throw std::invalid_argument("Bell pair target needs four distinct labels");
    }
}

VertexSet BellPairTarget::labels() const { return VertexSet{a_.first, a_.second, b_.first, b_.second}; }

bool BellPairTarget::crossing() const { return a_.first < b_.first && b_.first < a_.second && a_.second < b_.second; }

bool BellPairTarget::disjoint() const { return a_.second < b_.first; }

bool BellPairTarget::nested() const { return b_.second < a_.second; }

Graph BellPairTarget::graph() const { return Graph(labels(), {a_, b_}); }

Graph replay(const Graph &g, const Witness &witness) {
    return apply_lc_path(apply_measurements(g, witness.measurements), witness.lc_path);
}

Measurement leaf_axil_reduction_step(const Graph &g, VertexSet target_labels, Vertex v) {
    if (target_labels.contains(v)) {
        throw std::invalid_argument("vertex " + std::to_string(v) + " belongs to the target");
    }
    if (is_leaf(g, v)) {
        return Measurement{v, PauliBasis{Pauli::Z, std::nullopt}};
    }
    VertexSet leaves = leaves_of(g, v);
    if (leaves.empty()) {
        throw std::invalid_argument("vertex " + std::to_string(v) + " is neither a leaf nor an axil");
    }
    // tau_w is the identity while w is a leaf, so Z_v tau_w tau_v equals X_v
    // with special neighbour w.
    return Measurement{v, PauliBasis{Pauli::X, leaves.first()}};
}

Vertex leaf_axil_partner(const Graph &g, Vertex v) {
    if (is_leaf(g, v)) {
        return g.neighbourhood(v).first();
    }
    VertexSet leaves = leaves_of(g, v);
    if (leaves.empty()) {
        throw std::invalid_argument("vertex " + std::to_string(v) + " is neither a leaf nor an axil");
    }
    return leaves.first();
}

Graph apply_leaf_axil_reduction(const Graph &g, VertexSet target_labels, Vertex v) {
    Measurement step = leaf_axil_reduction_step(g, target_labels, v);
    Graph out = g;
    if (step.basis.axis == Pauli::X) {
        Vertex w = *step.basis.special;
        out.complement_neighbourhood(v);
        out.complement_neighbourhood(w);
        out.remove_vertex(v);
        return out;
    }
    out.remove_vertex(v);
    return out;
}

namespace {

VertexSet isolated_vertices(const Graph &g) {
    VertexSet out;
    for (Vertex v : g.vertex_set()) {
        if (g.degree(v) == 0) {
            out.insert(v);
        }
    }
    return out;
}

class Search {
   public:
    Search(const Graph &h, const SearchOptions &options, SearchStats &stats)
        : target_(LcOrbit::explore(h, options.orbit_cap)),
          target_labels_(h.vertex_set()),
          isolated_targets_(isolated_vertices(h)),
          options_(options),
          stats_(stats) {
        for (VertexSet comp : connected_components(h)) {
            if (comp.size() > 1) {
                target_components_.push_back(comp);
            }
        }
        stats_.target_orbit_size = target_.size();
        stats_.work += target_.size();
        check_budget();
    }

    std::optional<Witness> run(Graph g, std::vector<Vertex> order) {
        if (options_.component_filter || options_.leaf_axil_reduction) {
            if (!reduce(g, order)) {
                return std::nullopt;
            }
        }
        order_ = std::move(order);
        return descend(g, 0);
    }

   private:
    void check_budget() const {
        if (stats_.work > options_.budget) {
            throw BudgetExceeded(options_.budget, stats_.work);
        }
    }

    // Components only ever split under LC and deletion, so a target component
    // spread over several components of g can never be recovered.
    bool components_compatible(const Graph &g) const {
        for (VertexSet comp : target_components_) {
            if (!comp.is_subset_of(component_of(g, comp.first()))) {
                return false;
            }
        }
        return true;
    }

    void record(Graph &g, std::vector<Vertex> &order, Measurement step) {
        measure_in_place(g, step.vertex, step.basis);
        prefix_.push_back(step);
        order.erase(std::find(order.begin(), order.end(), step.vertex));
        stats_.work++;
        check_budget();
    }

    // Answer-preserving reductions ahead of the enumeration. Returns false if
    // the instance is refuted outright.
    bool reduce(Graph &g, std::vector<Vertex> &order) {
        bool changed = true;
        while (changed) {
            changed = false;
            if (options_.component_filter) {
                if (!components_compatible(g)) {
                    stats_.component_cuts++;
                    return false;
                }
                VertexSet relevant;
                for (Vertex t : target_labels_) {
                    relevant |= component_of(g, t);
                }
                for (Vertex v : g.vertex_set() - relevant) {
                    record(g, order, Measurement{v, PauliBasis{Pauli::Z, std::nullopt}});
                    stats_.dropped_vertices++;
                    changed = true;
                }
            }
            if (options_.leaf_axil_reduction) {
                auto eligible = std::find_if(order.begin(), order.end(), [&](Vertex v) {
                    if (g.degree(v) != 1 && leaves_of(g, v).empty()) {
                        return false;
                    }
                    return !isolated_targets_.contains(leaf_axil_partner(g, v));
                });
                if (eligible != order.end()) {
                    Measurement step = leaf_axil_reduction_step(g, target_labels_, *eligible);
                    (step.basis.axis == Pauli::Z ? stats_.leaf_reductions : stats_.axil_reductions)++;
                    record(g, order, step);
                    changed = true;
                }
            }
        }
        return true;
    }

    std::optional<Witness> descend(const Graph &g, size_t depth) {
        if (depth == order_.size()) {
            stats_.sequences_tried++;
            if (auto path = target_.path_from_seed(g)) {
                std::reverse(path->begin(), path->end());
                return Witness{prefix_, std::move(*path)};
            }
            return std::nullopt;
        }
        Vertex v = order_[depth];
        for (Pauli axis : kPauliOrder) {
            PauliBasis basis{axis, std::nullopt};
            if (axis == Pauli::X && g.degree(v) > 0) {
                basis.special = g.neighbourhood(v).first();
            }
            Graph next = g;
            measure_in_place(next, v, basis);
            stats_.work++;
            check_budget();
            if (options_.component_filter && !components_compatible(next)) {
                stats_.component_cuts++;
                continue;
            }
            prefix_.push_back(Measurement{v, basis});
            if (auto found = descend(next, depth + 1)) {
                return found;
            }
            prefix_.pop_back();
        }
        return std::nullopt;
    }

    LcOrbit target_;
    VertexSet target_labels_;
    VertexSet isolated_targets_;
    std::vector<VertexSet> target_components_;
    const SearchOptions &options_;
    SearchStats &stats_;
    std::vector<Vertex> order_;
    MeasurementSequence prefix_;
};

std::vector<Vertex> measurement_order(const Graph &g, const Graph &h, const SearchOptions &options) {
    VertexSet extra = g.vertex_set() - h.vertex_set();
    if (options.order.empty()) {
        return extra.to_vector();
    }
    VertexSet given;
    for (Vertex v : options.order) {
        if (!extra.contains(v) || given.contains(v)) {
            throw std::invalid_argument("measurement order must list each vertex of V(G) \\ V(H) once");
        }
        given.insert(v);
    }
    if (given != extra) {
        throw std::invalid_argument("measurement order must list each vertex of V(G) \\ V(H) once");
    }
    return options.order;
}

}  // namespace

VertexMinorReport is_vertex_minor(const Graph &g, const Graph &h, const SearchOptions &options) {
    if (!h.vertex_set().is_subset_of(g.vertex_set())) {
        throw std::invalid_argument("H must live on a subset of G's labels");
    }
    std::vector<Vertex> order = measurement_order(g, h, options);
    VertexMinorReport report;
    Search search(h, options, report.stats);
    report.witness = search.run(g, std::move(order));
    report.decision = report.witness.has_value();
    return report;
}

VertexMinorReport can_extract_bell_pairs(const Graph &g, const BellPairTarget &target, const SearchOptions &options) {
    if (!target.labels().is_subset_of(g.vertex_set())) {
        throw std::invalid_argument("Bell pair labels must all be vertices of the graph");
    }
    return is_vertex_minor(g, target.graph(), options);
}

}  // namespace lcroute
