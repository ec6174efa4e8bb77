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

#ifndef LCROUTE_MEASUREMENT_H
#define LCROUTE_MEASUREMENT_H

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lcroute/graph.h"

namespace lcroute {

enum class Pauli { Z, Y, X };

/// Enumeration order used by the search.
inline constexpr std::array<Pauli, 3> kPauliOrder = {Pauli::Z, Pauli::Y, Pauli::X};

char pauli_name(Pauli p);
/// Parses "X", "Y" or "Z" (case-insensitive).
Pauli parse_pauli(std::string_view text);

/// Measurement basis. For X an optional special neighbour may be pinned;
/// otherwise the lowest-labeled neighbour is used.
struct PauliBasis {
    Pauli axis = Pauli::Z;
    std::optional<Vertex> special;

    bool operator==(const PauliBasis &) const = default;
};

struct Measurement {
    Vertex vertex = 0;
    PauliBasis basis;

    bool operator==(const Measurement &) const = default;
};

/// Ordered Pauli measurements; every vertex appears at most once.
using MeasurementSequence = std::vector<Measurement>;

/// Graph action of a Pauli measurement on v. The measured vertex is removed;
/// survivors keep their labels. Local-unitary byproducts are not tracked.
///
///   Z: delete v.
///   Y: tau_v, then delete v.
///   X: tau_w tau_v tau_w, then delete v, with w a neighbour of v.
///
/// X on an isolated vertex is plain deletion.
Graph measure(const Graph &g, Vertex v, PauliBasis basis);

/// In-place variant used by the search loops.
void measure_in_place(Graph &g, Vertex v, PauliBasis basis);

/// Applies the sequence left to right. Throws std::invalid_argument when a
/// vertex repeats or is absent at its step.
Graph apply_measurements(const Graph &g, const MeasurementSequence &sequence);

/// "3Y", "5X(w=4)" style rendering.
std::string to_string(const Measurement &m);

}  // namespace lcroute

#endif
