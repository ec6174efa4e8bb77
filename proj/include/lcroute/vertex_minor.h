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

#ifndef LCROUTE_VERTEX_MINOR_H
#define LCROUTE_VERTEX_MINOR_H

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "lcroute/graph.h"
#include "lcroute/lc_orbit.h"
#include "lcroute/measurement.h"

namespace lcroute {

inline constexpr uint64_t kDefaultBudget = 50'000'000;

/// Raised when a search needs more work than its budget allows. Distinct
/// from a negative answer: nothing has been decided.
class BudgetExceeded : public std::runtime_error {
   public:
    BudgetExceeded(uint64_t budget, uint64_t spent);
    uint64_t budget() const { return budget_; }
    uint64_t spent() const { return spent_; }

   private:
    uint64_t budget_;
    uint64_t spent_;
};

/// Two disjoint Bell pairs {a1,a2} and {b1,b2}, stored canonically with
/// a1 < a2, b1 < b2 and a1 < b1.
class BellPairTarget {
   public:
    /// Canonicalizes the pairs. Throws std::invalid_argument unless the four
    /// labels are distinct and valid.
    BellPairTarget(Edge first, Edge second);

    const Edge &pair_a() const { return a_; }
    const Edge &pair_b() const { return b_; }
    VertexSet labels() const;
    /// a1 < b1 < a2 < b2.
    bool crossing() const;
    /// a1 < a2 < b1 < b2.
    bool disjoint() const;
    /// a1 < b1 < b2 < a2.
    bool nested() const;
    /// The graph K2 u K2 on the four labels.
    Graph graph() const;

    bool operator==(const BellPairTarget &) const = default;

   private:
    Edge a_;
    Edge b_;
};

struct SearchOptions {
    /// Work units: graphs produced by measurements plus target-orbit members.
    uint64_t budget = kDefaultBudget;
    size_t orbit_cap = kDefaultOrbitCap;
    /// Leaf and axil reductions on non-target vertices, applied to fixpoint.
    bool leaf_axil_reduction = true;
    /// Refutes (sub)instances whose target components are split in G, and
    /// drops components carrying no target label.
    bool component_filter = true;
    /// Measurement order over V(G) \ V(H). Empty means ascending labels.
    std::vector<Vertex> order;

    static SearchOptions unpruned() {
        SearchOptions o;
        o.leaf_axil_reduction = false;
        o.component_filter = false;
        return o;
    }
};

struct SearchStats {
    uint64_t sequences_tried = 0;
    uint64_t work = 0;
    size_t target_orbit_size = 0;
    int leaf_reductions = 0;
    int axil_reductions = 0;
    int dropped_vertices = 0;
    uint64_t component_cuts = 0;
};

/// Replayable certificate: apply `measurements` to G, then tau along
/// `lc_path`, and the result equals H exactly.
struct Witness {
    MeasurementSequence measurements;
    std::vector<Vertex> lc_path;

    bool operator==(const Witness &) const = default;
};

struct VertexMinorReport {
    bool decision = false;
    std::optional<Witness> witness;
    SearchStats stats;
};

Graph replay(const Graph &g, const Witness &witness);

/// Decides whether H is a vertex-minor of G by enumerating every Pauli
/// measurement sequence on V(G) \ V(H) (bases Z, Y, X per vertex) and testing
/// LC-equivalence of the result with H. A false answer certifies that all
/// sequences were exhausted, modulo reductions that preserve the answer.
///
/// Throws std::invalid_argument if V(H) is not a subset of V(G) or the order
/// is not a permutation of V(G) \ V(H), BudgetExceeded when the work budget
/// runs out and OrbitCapExceeded if the orbit of H is too large.
VertexMinorReport is_vertex_minor(const Graph &g, const Graph &h, const SearchOptions &options = {});

/// One leaf or axil reduction on a vertex outside the target labels:
/// a leaf is deleted; an axil v with leaf w becomes tau_w tau_v (G) \ v.
///
/// The answer is preserved for every H on the target labels in which the
/// reduction's partner (the axil of a leaf, or the chosen leaf w of an axil)
/// is not isolated. X on a leaf isolates its axil, a branch the reduction
/// discards: the star 1-2, 1-3 reaches the edgeless graph on {1,2} only
/// through X_3.
Graph apply_leaf_axil_reduction(const Graph &g, VertexSet target_labels, Vertex v);

/// The measurement equivalent to apply_leaf_axil_reduction (Z for a leaf,
/// X with special neighbour w for an axil).
Measurement leaf_axil_reduction_step(const Graph &g, VertexSet target_labels, Vertex v);

/// The partner vertex described above: the neighbour of a leaf, or the
/// lowest leaf attached to an axil.
Vertex leaf_axil_partner(const Graph &g, Vertex v);

VertexMinorReport can_extract_bell_pairs(const Graph &g, const BellPairTarget &target,
                                         const SearchOptions &options = {});

}  // namespace lcroute

#endif
