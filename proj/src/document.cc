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

#include "lcroute/document.h"

#include <cctype>
#include <sstream>

namespace lcroute {

ParseError::ParseError(const std::string &message, size_t position)
    : std::invalid_argument(message + " (at offset " + std::to_string(position) + ")"), position_(position) {}

GraphFormat parse_format(std::string_view name) {
    if (name == "json") {
        return GraphFormat::Json;
    }
    if (name == "edgelist") {
        return GraphFormat::EdgeList;
    }
    throw std::invalid_argument("unknown graph format '" + std::string(name) + "'");
}

namespace {

// Adds an edge, translating the simple-graph rules into positioned errors.
void add_checked_edge(Graph &g, Vertex u, Vertex v, size_t pos) {
    if (u == v) {
        throw ParseError("self-loop on vertex " + std::to_string(u), pos);
    }
    if (!g.contains(u) || !g.contains(v)) {
        throw ParseError("edge " + std::to_string(u) + "-" + std::to_string(v) + " uses an unlisted vertex", pos);
    }
    if (g.adjacent(u, v)) {
        throw ParseError("duplicate edge " + std::to_string(u) + "-" + std::to_string(v), pos);
    }
    g.toggle_edge(u, v);
}

class EdgeListParser {
   public:
    explicit EdgeListParser(std::string_view text) : text_(text) {}

    Graph parse() {
        skip_space();
        std::optional<VertexSet> labels;
        size_t mark = pos_;
        if (peek() == '[') {
            labels = parse_label_list();
            expect(';');
        } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
            Vertex first = parse_label();
            skip_space();
            if (peek() == ';') {
                pos_++;
                if (first < 1) {
                    throw ParseError("vertex count must be at least 1", mark);
                }
                labels = VertexSet{};
                for (Vertex v = 1; v <= first; v++) {
                    require_label(v, mark);
                    labels->insert(v);
                }
            } else {
                pos_ = mark;
            }
        }

        std::vector<std::pair<Edge, size_t>> edges;
        skip_space();
        while (!at_end()) {
            size_t at = pos_;
            Vertex u = parse_label();
            expect('-');
            Vertex v = parse_label();
            edges.push_back({{u, v}, at});
            skip_space();
            if (at_end()) {
                break;
            }
            expect(',');
            skip_space();
            if (at_end()) {
                throw ParseError("expected an edge after ','", pos_);
            }
        }

        Graph g;
        if (labels) {
            g = Graph(*labels);
        } else {
            for (const auto &[e, at] : edges) {
                g.add_vertex(e.first);
                g.add_vertex(e.second);
            }
        }
        for (const auto &[e, at] : edges) {
            add_checked_edge(g, e.first, e.second, at);
        }
        return g;
    }

   private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }

    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            pos_++;
        }
    }

    void expect(char c) {
        skip_space();
        if (peek() != c) {
            std::string got = at_end() ? "end of input" : std::string("'") + peek() + "'";
            throw ParseError(std::string("expected '") + c + "' but found " + got, pos_);
        }
        pos_++;
    }

    static void require_label(long value, size_t at) {
        if (value > kMaxVertices - 1) {
            throw ParseError("label " + std::to_string(value) + " exceeds 63", at);
        }
    }

    Vertex parse_label() {
        skip_space();
        size_t start = pos_;
        long value = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + (text_[pos_] - '0');
            if (value > 1'000'000) {
                require_label(value, start);
            }
            pos_++;
        }
        if (pos_ == start) {
            throw ParseError("expected a vertex label", pos_);
        }
        require_label(value, start);
        return static_cast<Vertex>(value);
    }

    VertexSet parse_label_list() {
        expect('[');
        VertexSet out;
        skip_space();
        if (peek() == ']') {
            pos_++;
            return out;
        }
        while (true) {
            size_t at = pos_;
            Vertex v = parse_label();
            if (out.contains(v)) {
                throw ParseError("vertex " + std::to_string(v) + " listed twice", at);
            }
            out.insert(v);
            skip_space();
            if (peek() == ']') {
                pos_++;
                return out;
            }
            expect(',');
        }
    }

    std::string_view text_;
    size_t pos_ = 0;
};

// True when the labels are exactly 1..n for some n >= 1.
bool is_prefix_range(const Graph &g) {
    VertexSet prefix;
    for (Vertex v = 1; v <= g.num_vertices() && is_valid_label(v); v++) {
        prefix.insert(v);
    }
    return g.num_vertices() > 0 && g.vertex_set() == prefix;
}

}  // namespace

nlohmann::json graph_to_json(const Graph &g) {
    nlohmann::json edges = nlohmann::json::array();
    for (auto [u, v] : g.edges()) {
        edges.push_back({u, v});
    }
    return {{"version", kDocumentVersion}, {"v", g.vertices()}, {"e", std::move(edges)}};
}

Graph graph_from_json(const nlohmann::json &doc) {
    if (!doc.is_object()) {
        throw ParseError("graph document must be a JSON object", 0);
    }
    if (doc.contains("version") && doc["version"] != kDocumentVersion) {
        throw ParseError("unsupported document version " + doc["version"].dump(), 0);
    }
    if (!doc.contains("v") || !doc["v"].is_array()) {
        throw ParseError("graph document needs a \"v\" array", 0);
    }
    auto label = [](const nlohmann::json &x) {
        if (!x.is_number_integer()) {
            throw ParseError("vertex labels must be integers, got " + x.dump(), 0);
        }
        auto value = x.get<int64_t>();
        if (value < 0 || value > kMaxVertices - 1) {
            throw ParseError("label " + std::to_string(value) + " is outside 0..63", 0);
        }
        return static_cast<Vertex>(value);
    };
    Graph g;
    for (const auto &x : doc["v"]) {
        Vertex v = label(x);
        if (g.contains(v)) {
            throw ParseError("vertex " + std::to_string(v) + " listed twice", 0);
        }
        g.add_vertex(v);
    }
    if (doc.contains("e")) {
        if (!doc["e"].is_array()) {
            throw ParseError("\"e\" must be an array of pairs", 0);
        }
        for (const auto &e : doc["e"]) {
            if (!e.is_array() || e.size() != 2) {
                throw ParseError("each edge must be a pair, got " + e.dump(), 0);
            }
            add_checked_edge(g, label(e[0]), label(e[1]), 0);
        }
    }
    return g;
}

Graph parse_graph(std::string_view text, GraphFormat format) {
    if (format == GraphFormat::EdgeList) {
        return EdgeListParser(text).parse();
    }
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw ParseError(e.what(), e.byte);
    }
    return graph_from_json(doc);
}

std::string serialize(const Graph &g, GraphFormat format) {
    if (format == GraphFormat::Json) {
        return graph_to_json(g).dump();
    }
    std::ostringstream out;
    if (is_prefix_range(g)) {
        out << g.num_vertices() << ';';
    } else {
        out << '[';
        bool first = true;
        for (Vertex v : g.vertex_set()) {
            out << (first ? "" : ",") << v;
            first = false;
        }
        out << "];";
    }
    bool first = true;
    for (auto [u, v] : g.edges()) {
        out << (first ? " " : ",") << u << '-' << v;
        first = false;
    }
    return out.str();
}

std::string export_dot(const Graph &g, const std::optional<FoliageDecomposition> &highlight) {
    std::ostringstream out;
    out << "graph G {\n";
    out << "  node [shape=circle];\n";
    VertexSet twins = highlight ? highlight->twin_members() : VertexSet{};
    for (Vertex v : g.vertex_set()) {
        out << "  " << v;
        if (highlight) {
            std::vector<std::string> roles;
            if (highlight->leaves.contains(v)) roles.push_back("leaf");
            if (highlight->axils.contains(v)) roles.push_back("axil");
            if (twins.contains(v)) roles.push_back("twin");
            if (!roles.empty()) {
                // Axil wins over leaf wins over twin for the fill colour.
                const char *fill = highlight->axils.contains(v)    ? "#f4a261"
                                   : highlight->leaves.contains(v) ? "#8ecae6"
                                                                   : "#b5e48c";
                std::string names;
                for (const std::string &r : roles) {
                    names += (names.empty() ? "" : " ") + r;
                }
                out << " [style=filled, fillcolor=\"" << fill << "\", xlabel=\"" << names << "\", class=\"" << names
                    << "\"]";
            }
        }
        out << ";\n";
    }
    for (auto [u, v] : g.edges()) {
        out << "  " << u << " -- " << v << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace lcroute
