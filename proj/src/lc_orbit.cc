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

#include "lcroute/lc_orbit.h"

#include <algorithm>
#include <unordered_set>

namespace lcroute {

OrbitCapExceeded::OrbitCapExceeded(size_t cap)
    : std::runtime_error("LC orbit exceeds cap of " + std::to_string(cap) + " graphs"), cap_(cap) {}

AdjacencyPacker::AdjacencyPacker(VertexSet labels) : labels_(labels), order_(labels.to_vector()) {
    size_t n = order_.size();
    size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    words_ = std::max<size_t>(1, (bits + 63) / 64);
}

void AdjacencyPacker::pack(const Graph &g, uint64_t *out) const {
    std::fill(out, out + words_, 0);
    size_t k = 0;
    for (size_t i = 0; i < order_.size(); i++) {
        uint64_t row = g.row(order_[i]);
        for (size_t j = i + 1; j < order_.size(); j++, k++) {
            if ((row >> order_[j]) & 1) {
                out[k >> 6] |= uint64_t{1} << (k & 63);
            }
        }
    }
}

Graph AdjacencyPacker::unpack(const uint64_t *in) const {
    Graph g(labels_);
    size_t k = 0;
    for (size_t i = 0; i < order_.size(); i++) {
        for (size_t j = i + 1; j < order_.size(); j++, k++) {
            if ((in[k >> 6] >> (k & 63)) & 1) {
                g.toggle_edge(order_[i], order_[j]);
            }
        }
    }
    return g;
}

namespace {

constexpr uint32_t kNoParent = UINT32_MAX;

}  // namespace

// Members live in a flat word arena; the hash set stores indices into it and
// accepts packed probes through transparent lookup.
struct LcOrbit::Store {
    struct Probe {
        const uint64_t *words;
    };
    struct KeyHash {
        using is_transparent = void;
        const Store *store;
        size_t operator()(uint32_t index) const { return (*this)(Probe{store->key(index)}); }
        size_t operator()(Probe p) const {
            uint64_t h = 0x243F6A8885A308D3ULL;
            for (size_t i = 0; i < store->packer.words(); i++) {
                h ^= p.words[i];
                h *= 0x9E3779B97F4A7C15ULL;
                h ^= h >> 29;
            }
            return static_cast<size_t>(h);
        }
    };
    struct KeyEq {
        using is_transparent = void;
        const Store *store;
        bool same(const uint64_t *a, const uint64_t *b) const {
            return std::equal(a, a + store->packer.words(), b);
        }
        bool operator()(uint32_t a, uint32_t b) const { return same(store->key(a), store->key(b)); }
        bool operator()(Probe a, uint32_t b) const { return same(a.words, store->key(b)); }
        bool operator()(uint32_t a, Probe b) const { return same(store->key(a), b.words); }
    };

    explicit Store(VertexSet labels) : packer(labels), index(16, KeyHash{this}, KeyEq{this}) {}

    const uint64_t *key(uint32_t i) const { return arena.data() + static_cast<size_t>(i) * packer.words(); }

    /// Returns the index of g, inserting it if new. Second is true on insert.
    std::pair<uint32_t, bool> intern(const Graph &g) {
        std::vector<uint64_t> scratch(packer.words());
        packer.pack(g, scratch.data());
        if (auto it = index.find(Probe{scratch.data()}); it != index.end()) {
            return {*it, false};
        }
        auto fresh = static_cast<uint32_t>(parent.size());
        arena.insert(arena.end(), scratch.begin(), scratch.end());
        parent.push_back(kNoParent);
        via.push_back(0);
        index.insert(fresh);
        return {fresh, true};
    }

    std::optional<uint32_t> find(const Graph &g) const {
        std::vector<uint64_t> scratch(packer.words());
        packer.pack(g, scratch.data());
        auto it = index.find(Probe{scratch.data()});
        if (it == index.end()) {
            return std::nullopt;
        }
        return *it;
    }

    AdjacencyPacker packer;
    std::vector<uint64_t> arena;
    std::vector<uint32_t> parent;
    std::vector<uint8_t> via;
    std::unordered_set<uint32_t, KeyHash, KeyEq> index;
};

LcOrbit::LcOrbit(Graph seed, std::unique_ptr<Store> store) : seed_(std::move(seed)), store_(std::move(store)) {}
LcOrbit::LcOrbit(LcOrbit &&) noexcept = default;
LcOrbit &LcOrbit::operator=(LcOrbit &&) noexcept = default;
LcOrbit::~LcOrbit() = default;

LcOrbit LcOrbit::explore(const Graph &seed, size_t cap) {
    if (cap < 1) {
        throw std::invalid_argument("orbit cap must be at least 1");
    }
    auto store = std::make_unique<Store>(seed.vertex_set());
    store->intern(seed);
    // Moves on isolated vertices are no-ops; skip them.
    std::vector<Vertex> movers;
    for (Vertex v : seed.vertex_set()) {
        if (seed.degree(v) > 0) {
            movers.push_back(v);
        }
    }
    for (size_t head = 0; head < store->parent.size(); head++) {
        Graph current = store->packer.unpack(store->key(static_cast<uint32_t>(head)));
        for (Vertex v : movers) {
            Graph next = current;
            next.complement_neighbourhood(v);
            auto [idx, inserted] = store->intern(next);
            if (inserted) {
                store->parent[idx] = static_cast<uint32_t>(head);
                store->via[idx] = static_cast<uint8_t>(v);
                if (store->parent.size() > cap) {
                    throw OrbitCapExceeded(cap);
                }
            }
        }
    }
    return LcOrbit(seed, std::move(store));
}

size_t LcOrbit::size() const { return store_->parent.size(); }

bool LcOrbit::contains(const Graph &g) const {
    if (g.vertex_set() != seed_.vertex_set()) {
        return false;
    }
    return store_->find(g).has_value();
}

Graph LcOrbit::at(size_t index) const {
    if (index >= size()) {
        throw std::out_of_range("orbit index out of range");
    }
    return store_->packer.unpack(store_->key(static_cast<uint32_t>(index)));
}

std::vector<Graph> LcOrbit::graphs() const {
    std::vector<Graph> out;
    out.reserve(size());
    for (size_t i = 0; i < size(); i++) {
        out.push_back(at(i));
    }
    return out;
}

std::optional<std::vector<Vertex>> LcOrbit::path_from_seed(const Graph &g) const {
    if (g.vertex_set() != seed_.vertex_set()) {
        return std::nullopt;
    }
    auto idx = store_->find(g);
    if (!idx.has_value()) {
        return std::nullopt;
    }
    std::vector<Vertex> path;
    for (uint32_t i = *idx; store_->parent[i] != kNoParent; i = store_->parent[i]) {
        path.push_back(store_->via[i]);
    }
    std::reverse(path.begin(), path.end());
    return path;
}

bool is_lc_equivalent(const Graph &g, const Graph &h, size_t cap) {
    if (g.vertex_set() != h.vertex_set()) {
        throw std::invalid_argument("LC equivalence needs identical vertex sets");
    }
    if (g == h) {
        return true;
    }
    // LC never merges or splits components.
    if (connected_components(g) != connected_components(h)) {
        return false;
    }
    return LcOrbit::explore(g, cap).contains(h);
}

Graph apply_lc_path(const Graph &g, const std::vector<Vertex> &path) {
    Graph out = g;
    for (Vertex v : path) {
        out.complement_neighbourhood(v);
    }
    return out;
}

}  // namespace lcroute
