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

#include "lcroute/foliage.h"

namespace lcroute {

VertexSet FoliageDecomposition::twin_members() const {
    VertexSet out;
    for (const auto &[v, w] : twins) {
        out.insert(v);
        out.insert(w);
    }
    return out;
}

VertexSet FoliageDecomposition::foliage() const { return leaves | axils | twin_members(); }

bool is_leaf(const Graph &g, Vertex v) { return g.degree(v) == 1; }

bool are_twins(const Graph &g, Vertex v, Vertex w) {
    if (v == w) {
        return false;
    }
    VertexSet nv = g.neighbourhood(v) - VertexSet::single(w);
    VertexSet nw = g.neighbourhood(w) - VertexSet::single(v);
    return nv == nw;
}

VertexSet leaves_of(const Graph &g, Vertex v) {
    VertexSet out;
    for (Vertex u : g.neighbourhood(v)) {
        if (is_leaf(g, u)) {
            out.insert(u);
        }
    }
    return out;
}

FoliageDecomposition foliage_decomposition(const Graph &g) {
    FoliageDecomposition out;
    std::vector<Vertex> vs = g.vertices();
    for (Vertex v : vs) {
        if (is_leaf(g, v)) {
            out.leaves.insert(v);
            out.axils.insert(g.neighbourhood(v).first());
        }
    }
    for (size_t i = 0; i < vs.size(); i++) {
        for (size_t j = i + 1; j < vs.size(); j++) {
            if (are_twins(g, vs[i], vs[j])) {
                out.twins.emplace_back(vs[i], vs[j]);
            }
        }
    }
    return out;
}

}  // namespace lcroute
