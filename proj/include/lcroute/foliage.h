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

#ifndef LCROUTE_FOLIAGE_H
#define LCROUTE_FOLIAGE_H

#include <vector>

#include "lcroute/graph.h"

namespace lcroute {

/// Leaves (degree one), axils (unique neighbour of a leaf) and twin pairs
/// (N(v) \ {w} == N(w) \ {v}, adjacent or not).
struct FoliageDecomposition {
    VertexSet leaves;
    VertexSet axils;
    /// Sorted (low, high) pairs.
    std::vector<Edge> twins;

    VertexSet twin_members() const;
    /// Union of leaves, axils and twin members.
    VertexSet foliage() const;

    bool operator==(const FoliageDecomposition &) const = default;
};

FoliageDecomposition foliage_decomposition(const Graph &g);

bool is_leaf(const Graph &g, Vertex v);
bool are_twins(const Graph &g, Vertex v, Vertex w);

/// Leaf neighbours of v, i.e. the leaves for which v is the axil.
VertexSet leaves_of(const Graph &g, Vertex v);

}  // namespace lcroute

#endif
