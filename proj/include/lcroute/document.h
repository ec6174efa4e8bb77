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

#ifndef LCROUTE_DOCUMENT_H
#define LCROUTE_DOCUMENT_H

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"
#include "lcroute/foliage.h"
#include "lcroute/graph.h"

namespace lcroute {

/// Graph text formats.
///
/// edgelist: an optional header, then comma separated `u-v` edges.
///     "4; 1-2,2-3,3-4,4-1"   labels 1..4
///     "[0,5,9]; 0-5"         exactly the listed labels
///     "1-2,2-3"              labels taken from the edges
/// json: {"version": 1, "v": [labels...], "e": [[u, v], ...]}. The version
///     key may be omitted on input.
enum class GraphFormat { Json, EdgeList };

inline constexpr int kDocumentVersion = 1;

GraphFormat parse_format(std::string_view name);

/// Raised for malformed text and for graphs that break the simple-graph
/// rules. `position` is a byte offset into the input.
class ParseError : public std::invalid_argument {
   public:
    ParseError(const std::string &message, size_t position);
    size_t position() const { return position_; }

   private:
    size_t position_;
};

Graph parse_graph(std::string_view text, GraphFormat format);
std::string serialize(const Graph &g, GraphFormat format);

/// Document form used by the JSON format and the HTTP service.
nlohmann::json graph_to_json(const Graph &g);
/// Throws ParseError (position 0) on structural problems.
Graph graph_from_json(const nlohmann::json &doc);

/// Graphviz text with vertices and edges in ascending order. With a
/// decomposition, leaves, axils and twins get distinct fills and an xlabel
/// naming their roles.
std::string export_dot(const Graph &g, const std::optional<FoliageDecomposition> &highlight = std::nullopt);

}  // namespace lcroute

#endif
