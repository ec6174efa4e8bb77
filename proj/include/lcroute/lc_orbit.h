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

#ifndef LCROUTE_LC_ORBIT_H
#define LCROUTE_LC_ORBIT_H

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "lcroute/graph.h"

namespace lcroute {

inline constexpr size_t kDefaultOrbitCap = 5'000'000;

/// Thrown when an orbit grows past its cap. The instance is too large for
/// orbit-based equivalence; it does not mean "not equivalent".
class OrbitCapExceeded : public std::runtime_error {
   public:
    OrbitCapExceeded(size_t cap);
    size_t cap() const { return cap_; }

   private:
    size_t cap_;
};

/// Packs the upper triangle of a graph's adjacency (over its own label set)
/// into 64-bit words. All graphs sharing a label set share a layout.
class AdjacencyPacker {
   public:
    explicit AdjacencyPacker(VertexSet labels);

    VertexSet labels() const { return labels_; }
    size_t words() const { return words_; }
    void pack(const Graph &g, uint64_t *out) const;
    Graph unpack(const uint64_t *in) const;

   private:
    VertexSet labels_;
    std::vector<Vertex> order_;
    size_t words_;
};

/// Every labeled graph reachable from a seed by local complementations,
/// explored breadth first. Each member remembers the LC move that first
/// reached it, so paths from the seed can be recovered.
class LcOrbit {
   public:
    /// Throws OrbitCapExceeded if more than `cap` graphs are reachable.
    static LcOrbit explore(const Graph &seed, size_t cap = kDefaultOrbitCap);

    LcOrbit(LcOrbit &&) noexcept;
    LcOrbit &operator=(LcOrbit &&) noexcept;
    ~LcOrbit();

    const Graph &seed() const { return seed_; }
    size_t size() const;
    bool contains(const Graph &g) const;
    /// Member in BFS discovery order.
    Graph at(size_t index) const;
    std::vector<Graph> graphs() const;
    /// Vertices v1..vk such that tau_vk(...tau_v1(seed)) == g, shortest first.
    std::optional<std::vector<Vertex>> path_from_seed(const Graph &g) const;

   private:
    struct Store;
    LcOrbit(Graph seed, std::unique_ptr<Store> store);

    Graph seed_;
    std::unique_ptr<Store> store_;
};

inline LcOrbit lc_orbit(const Graph &g, size_t cap = kDefaultOrbitCap) { return LcOrbit::explore(g, cap); }

/// Orbit-membership test. Throws std::invalid_argument if the label sets
/// differ and OrbitCapExceeded when the orbit of g is too large.
bool is_lc_equivalent(const Graph &g, const Graph &h, size_t cap = kDefaultOrbitCap);

/// Applies tau_v for each v in order.
Graph apply_lc_path(const Graph &g, const std::vector<Vertex> &path);

}  // namespace lcroute

#endif
