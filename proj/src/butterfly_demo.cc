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

#include "lcroute/butterfly_demo.h"

#include <sstream>

#include "lcroute/lc_orbit.h"

namespace lcroute {

const char *step_kind_name(StepKind k) {
    switch (k) {
        case StepKind::LocalComplement:
            return "lc";
        case StepKind::Measure:
            return "measure";
        case StepKind::ControlledZ:
            return "cz";
    }
    return "?";
}

std::string DemoStep::str() const {
    std::ostringstream out;
    out << step_kind_name(kind);
    if (kind == StepKind::Measure) {
        out << ' ' << to_string(Measurement{args.at(0), *basis});
    } else {
        for (Vertex v : args) {
            out << ' ' << v;
        }
    }
    return out.str();
}

Graph apply_step(const Graph &g, const DemoStep &step) {
    switch (step.kind) {
        case StepKind::LocalComplement:
            return local_complement(g, step.args.at(0));
        case StepKind::Measure:
            return measure(g, step.args.at(0), step.basis.value());
        case StepKind::ControlledZ:
            return toggle_cz(g, step.args.at(0), step.args.at(1));
    }
    throw std::invalid_argument("unknown step kind");
}

bool DemoTranscript::replays() const {
    Graph g = initial;
    for (const DemoStep &step : steps) {
        g = apply_step(g, step);
        if (g != step.result) {
            return false;
        }
    }
    return true;
}

namespace {

constexpr Vertex kMeasuredA = 3;
constexpr Vertex kMeasuredB = 6;

PauliBasis concrete(const Graph &g, Vertex v, Pauli axis) {
    PauliBasis basis{axis, std::nullopt};
    if (axis == Pauli::X && g.degree(v) > 0) {
        basis.special = g.neighbourhood(v).first();
    }
    return basis;
}

// Searches the orbit in BFS order, optionally toggling CZ(3,6) before the
// two measurements. Returns the transcript and the members examined.
std::pair<DemoTranscript, size_t> search_orbit(const LcOrbit &orbit, const Graph &target, bool with_cz) {
    for (size_t i = 0; i < orbit.size(); i++) {
        Graph member = orbit.at(i);
        Graph start = with_cz ? toggle_cz(member, kMeasuredA, kMeasuredB) : member;
        for (Pauli pa : kPauliOrder) {
            PauliBasis ba = concrete(start, kMeasuredA, pa);
            Graph mid = measure(start, kMeasuredA, ba);
            for (Pauli pb : kPauliOrder) {
                PauliBasis bb = concrete(mid, kMeasuredB, pb);
                Graph end = measure(mid, kMeasuredB, bb);
                if (end != target) {
                    continue;
                }
                DemoTranscript t;
                t.initial = orbit.seed();
                Graph g = t.initial;
                for (Vertex v : *orbit.path_from_seed(member)) {
                    g = local_complement(g, v);
                    t.steps.push_back({StepKind::LocalComplement, {v}, std::nullopt, g});
                }
                if (with_cz) {
                    g = toggle_cz(g, kMeasuredA, kMeasuredB);
                    t.steps.push_back({StepKind::ControlledZ, {kMeasuredA, kMeasuredB}, std::nullopt, g});
                }
                t.steps.push_back({StepKind::Measure, {kMeasuredA}, ba, mid});
                t.steps.push_back({StepKind::Measure, {kMeasuredB}, bb, end});
                t.bell_pairs = end.edges();
                return {std::move(t), i + 1};
            }
        }
    }
    throw std::runtime_error("no member of the ring orbit reaches the requested pairs");
}

}  // namespace

ButterflyDemo demo_ring_butterfly() {
    Graph r6 = construct_named(NamedGraph::Ring, 6);
    LcOrbit orbit = lc_orbit(r6);
    ButterflyDemo demo;
    auto [plain, scanned] = search_orbit(orbit, BellPairTarget({2, 4}, {1, 5}).graph(), false);
    demo.without_cz = std::move(plain);
    demo.orbit_members_scanned_without_cz = scanned;
    BellPairTarget crossing({1, 4}, {2, 5});
    auto [cz, cz_scanned] = search_orbit(orbit, crossing.graph(), true);
    demo.with_cz = std::move(cz);
    demo.orbit_members_scanned_with_cz = cz_scanned;
    demo.direct_crossing = can_extract_bell_pairs(r6, crossing);
    return demo;
}

}  // namespace lcroute
