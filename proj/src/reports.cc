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

#include "lcroute/reports.h"

#include <iomanip>
#include <sstream>

#include "lcroute/document.h"

namespace lcroute {

using nlohmann::json;

json to_json(const Quadruple &q) { return {{"n", q.n}, {"a1", q.a1}, {"b1", q.b1}, {"a2", q.a2}, {"b2", q.b2}}; }

json to_json(const TheoremReport &report) {
    json sizes = json::array();
    for (const SizeSummary &s : report.sizes) {
        sizes.push_back({{"n", s.n},
                         {"tested", s.tested},
                         {"expected", s.expected},
                         {"measured_vertices", s.measured},
                         {"feasible", s.feasible},
                         {"infeasible", s.infeasible},
                         {"budget_overruns", s.overruns}});
    }
    json instances = json::array();
    for (const InstanceResult &r : report.instances) {
        json item = to_json(r.quadruple);
        item["outcome"] = outcome_name(r.outcome);
        item["work"] = r.work;
        if (r.constructive) {
            item["constructive"] = *r.constructive;
        }
        item["asserted"] = report.asserted && !r.recorded_only;
        instances.push_back(std::move(item));
    }
    json violations = json::array();
    for (const Quadruple &q : report.violations) {
        violations.push_back(to_json(q));
    }
    json overruns = json::array();
    for (const Quadruple &q : report.budget_overruns) {
        overruns.push_back(to_json(q));
    }
    return {{"name", report.name},
            {"topology", topology_name(report.topology)},
            {"n_min", report.n_min},
            {"n_max", report.n_max},
            {"budget", report.budget},
            {"asserted", report.asserted},
            {"expects", report.asserted ? (report.expects_infeasible ? "infeasible" : "feasible") : "none"},
            {"quadruples_tested", report.quadruples_tested()},
            {"sizes", std::move(sizes)},
            {"violations", std::move(violations)},
            {"budget_overruns", std::move(overruns)},
            {"confirmed", report.confirmed()},
            {"instances", std::move(instances)},
            {"seconds", report.seconds}};
}

json to_json(const ControlsReport &report) {
    return {{"line", to_json(report.line)}, {"ring", to_json(report.ring)}, {"confirmed", report.confirmed()}};
}

json to_json(const FoliageReport &report) {
    json failures = json::array();
    for (const FoliageCounterexample &f : report.failures) {
        failures.push_back({{"graph", graph_to_json(f.graph)}, {"vertex", f.vertex}, {"check", f.check}});
    }
    return {{"n_max", report.n_max},
            {"exhaustive_up_to", report.exhaustive_up_to},
            {"graphs", report.graphs},
            {"complementations", report.complementations},
            {"micro_transitions", report.micro_transitions},
            {"failures", std::move(failures)},
            {"confirmed", report.confirmed()},
            {"seconds", report.seconds}};
}

json to_json(const DemoTranscript &transcript) {
    json steps = json::array();
    for (const DemoStep &s : transcript.steps) {
        json item = {{"op", step_kind_name(s.kind)}, {"args", s.args}, {"result", graph_to_json(s.result)}};
        if (s.basis) {
            item["basis"] = std::string(1, pauli_name(s.basis->axis));
            if (s.basis->special) {
                item["special"] = *s.basis->special;
            }
        }
        steps.push_back(std::move(item));
    }
    json pairs = json::array();
    for (auto [u, v] : transcript.bell_pairs) {
        pairs.push_back({u, v});
    }
    return {{"initial", graph_to_json(transcript.initial)},
            {"steps", std::move(steps)},
            {"bell_pairs", std::move(pairs)},
            {"replays", transcript.replays()}};
}

json to_json(const ButterflyDemo &demo) {
    return {{"without_cz", to_json(demo.without_cz)},
            {"with_cz", to_json(demo.with_cz)},
            {"orbit_members_scanned", {{"without_cz", demo.orbit_members_scanned_without_cz},
                                       {"with_cz", demo.orbit_members_scanned_with_cz}}},
            {"direct_crossing", to_json(demo.direct_crossing)}};
}

json to_json(const Witness &witness) {
    json measurements = json::array();
    for (const Measurement &m : witness.measurements) {
        json item = {{"vertex", m.vertex}, {"basis", std::string(1, pauli_name(m.basis.axis))}};
        if (m.basis.special) {
            item["special"] = *m.basis.special;
        }
        measurements.push_back(std::move(item));
    }
    return {{"measurements", std::move(measurements)}, {"lc_path", witness.lc_path}};
}

json to_json(const VertexMinorReport &report) {
    json out = {{"decision", report.decision},
                {"stats",
                 {{"sequences_tried", report.stats.sequences_tried},
                  {"work", report.stats.work},
                  {"target_orbit_size", report.stats.target_orbit_size},
                  {"leaf_reductions", report.stats.leaf_reductions},
                  {"axil_reductions", report.stats.axil_reductions},
                  {"dropped_vertices", report.stats.dropped_vertices},
                  {"component_cuts", report.stats.component_cuts}}}};
    out["witness"] = report.witness ? to_json(*report.witness) : json(nullptr);
    return out;
}

namespace {

std::string quad_str(const Quadruple &q) {
    std::ostringstream out;
    out << "n=" << q.n << " (" << q.a1 << "," << q.a2 << ")(" << q.b1 << "," << q.b2 << ")";
    return out.str();
}

}  // namespace

std::string summary_table(const TheoremReport &report) {
    std::ostringstream out;
    out << report.name << " (n <= " << report.n_max << ", budget " << report.budget << ")\n";
    out << std::setw(4) << "n" << std::setw(10) << "tested" << std::setw(10) << "expected" << std::setw(10)
        << "measured" << std::setw(10) << "feasible" << std::setw(12) << "infeasible" << std::setw(10) << "overruns"
        << "\n";
    for (const SizeSummary &s : report.sizes) {
        out << std::setw(4) << s.n << std::setw(10) << s.tested << std::setw(10) << s.expected << std::setw(10)
            << s.measured << std::setw(10) << s.feasible << std::setw(12) << s.infeasible << std::setw(10)
            << s.overruns << "\n";
    }
    if (report.asserted) {
        out << "violations: " << report.violations.size() << "\n";
        for (const Quadruple &q : report.violations) {
            out << "  " << quad_str(q) << "\n";
        }
    } else {
        out << "outcomes recorded, not asserted\n";
    }
    out << "budget overruns: " << report.budget_overruns.size() << "\n";
    for (const Quadruple &q : report.budget_overruns) {
        out << "  " << quad_str(q) << "\n";
    }
    out << "result: " << (report.confirmed() ? "CONFIRMED" : "NOT CONFIRMED") << "\n";
    out << "time: " << std::fixed << std::setprecision(2) << report.seconds << " s\n";
    return out.str();
}

std::string summary_table(const ControlsReport &report) {
    return summary_table(report.line) + "\n" + summary_table(report.ring);
}

std::string summary_table(const FoliageReport &report) {
    std::ostringstream out;
    out << "foliage invariance (n <= " << report.n_max << ", exhaustive up to " << report.exhaustive_up_to << ")\n";
    out << "graphs: " << report.graphs << "\n";
    out << "complementations: " << report.complementations << "\n";
    out << "micro-transitions: " << report.micro_transitions << "\n";
    out << "failures: " << report.failures.size() << "\n";
    for (const FoliageCounterexample &f : report.failures) {
        out << "  " << f.graph << " v=" << f.vertex << ": " << f.check << "\n";
    }
    out << "result: " << (report.confirmed() ? "CONFIRMED" : "NOT CONFIRMED") << "\n";
    out << "time: " << std::fixed << std::setprecision(2) << report.seconds << " s\n";
    return out.str();
}

std::string summary_table(const ButterflyDemo &demo) {
    std::ostringstream out;
    auto transcript = [&](const char *title, const DemoTranscript &t) {
        out << title << "\n";
        out << "  start: " << t.initial << "\n";
        for (const DemoStep &s : t.steps) {
            out << "  " << std::left << std::setw(16) << s.str() << std::right << " -> " << s.result << "\n";
        }
        out << "  pairs:";
        for (auto [u, v] : t.bell_pairs) {
            out << " (" << u << "," << v << ")";
        }
        out << "\n  replays: " << (t.replays() ? "yes" : "NO") << "\n";
    };
    transcript("without CZ", demo.without_cz);
    transcript("with CZ(3,6)", demo.with_cz);
    out << "direct crossing (1,4),(2,5) from R_6: " << (demo.direct_crossing.decision ? "feasible" : "infeasible")
        << " (" << demo.direct_crossing.stats.sequences_tried << " measurement sequences exhausted)\n";
    return out.str();
}

}  // namespace lcroute
