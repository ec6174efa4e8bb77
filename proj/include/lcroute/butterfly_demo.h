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

#ifndef LCROUTE_BUTTERFLY_DEMO_H
#define LCROUTE_BUTTERFLY_DEMO_H

#include <optional>
#include <string>
#include <vector>

#include "lcroute/graph.h"
#include "lcroute/measurement.h"
#include "lcroute/vertex_minor.h"

namespace lcroute {

enum class StepKind { LocalComplement, Measure, ControlledZ };

const char *step_kind_name(StepKind k);

struct DemoStep {
    StepKind kind;
    /// One vertex for lc and measure, two for cz.
    std::vector<Vertex> args;
    /// Set for measure steps.
    std::optional<PauliBasis> basis;
    Graph result;

    std::string str() const;
};

struct DemoTranscript {
    Graph initial;
    std::vector<DemoStep> steps;
    std::vector<Edge> bell_pairs;

    const Graph &final_graph() const { return steps.empty() ? initial : steps.back().result; }
    /// Re-applies every step to the initial graph and compares each
    /// intermediate result.
    bool replays() const;
};

/// Applies one step to g.
Graph apply_step(const Graph &g, const DemoStep &step);

struct ButterflyDemo {
    /// LCs on R_6 then measurements of 3 and 6, leaving pairs (2,4),(1,5).
    DemoTranscript without_cz;
    /// LCs on R_6, one CZ(3,6), then measurements of 3 and 6, leaving the
    /// crossing pairs (1,4),(2,5).
    DemoTranscript with_cz;
    /// Search result for (1,4),(2,5) straight from R_6. Expected false.
    VertexMinorReport direct_crossing;
    /// Orbit members of R_6 examined by each search.
    size_t orbit_members_scanned_without_cz = 0;
    size_t orbit_members_scanned_with_cz = 0;
};

/// Searches the LC orbit of R_6 in breadth-first order for the first member
/// that yields each outcome, trying bases Z, Y, X on vertex 3 then 6.
/// Throws std::runtime_error if either search fails.
ButterflyDemo demo_ring_butterfly();

}  // namespace lcroute

#endif
