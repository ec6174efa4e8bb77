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

#include <stdexcept>

namespace lcroute {

char pauli_name(Pauli p) {
    switch (p) {
        case Pauli::Z:
            return 'Z';
        case Pauli::Y:
            return 'Y';
        case Pauli::X:
            return 'X';
    }
    return '?';
}

Pauli parse_pauli(std::string_view text) {
    if (text.size() == 1) {
        switch (text[0]) {
            case 'Z':
            case 'z':
                return Pauli::Z;
            case 'Y':
            case 'y':
                return Pauli::Y;
            case 'X':
            case 'x':
                return Pauli::X;
            default:
                break;
        }
    }
    throw std::invalid_argument("unknown Pauli basis '" + std::string(text) + "'");
}

void measure_in_place(Graph &g, Vertex v, PauliBasis basis) {
    if (!g.contains(v)) {
        throw std::invalid_argument("cannot measure vertex " + std::to_string(v) + ": not in the graph");
    }
    switch (basis.axis) {
        case Pauli::Z:
            break;
        case Pauli::Y:
            g.complement_neighbourhood(v);
            break;
        case Pauli::X: {
            VertexSet nbrs = g.neighbourhood(v);
            if (basis.special.has_value() && !nbrs.contains(*basis.special)) {
                throw std::invalid_argument(
                    "special neighbour " + std::to_string(*basis.special) + " is not adjacent to " +
                    std::to_string(v));
            }
            if (nbrs.empty()) {
                break;
            }
            Vertex w = basis.special.value_or(nbrs.first());
            g.complement_neighbourhood(w);
            g.complement_neighbourhood(v);
            g.complement_neighbourhood(w);
            break;
        }
    }
    g.remove_vertex(v);
}

Graph measure(const Graph &g, Vertex v, PauliBasis basis) {
    Graph out = g;
    measure_in_place(out, v, basis);
    return out;
}

Graph apply_measurements(const Graph &g, const MeasurementSequence &sequence) {
    Graph out = g;
    VertexSet seen;
    for (const auto &m : sequence) {
        if (seen.contains(m.vertex)) {
            throw std::invalid_argument("vertex " + std::to_string(m.vertex) + " measured twice");
        }
        measure_in_place(out, m.vertex, m.basis);
        seen.insert(m.vertex);
    }
    return out;
}

std::string to_string(const Measurement &m) {
    std::string out = std::to_string(m.vertex);
    out += pauli_name(m.basis.axis);
    if (m.basis.special.has_value()) {
        out += "(w=" + std::to_string(*m.basis.special) + ")";
    }
    return out;
}

}  // namespace lcroute
