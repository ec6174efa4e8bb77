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

#ifndef LCROUTE_SESSION_H
#define LCROUTE_SESSION_H

#include <list>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "json.hpp"
#include "lcroute/graph.h"
#include "lcroute/measurement.h"
#include "lcroute/vertex_minor.h"

namespace lcroute {

struct SessionAction {
    enum class Kind { LocalComplement, Measure, ControlledZ, Undo };

    Kind kind = Kind::Undo;
    std::vector<Vertex> args;
    std::optional<PauliBasis> basis;

    /// Text form: "lc 3", "measure 1 Y", "measure 2 X 3" (special
    /// neighbour last), "cz 3 6", "undo".
    static SessionAction parse(std::string_view text);
    /// JSON form: {"action": "measure", "v": 1, "basis": "X", "special": 2},
    /// {"action": "cz", "u": 3, "v": 6}, {"action": "lc", "v": 3},
    /// {"action": "undo"}. A string is parsed as the text form.
    static SessionAction from_json(const nlohmann::json &body);

    std::string str() const;
};

/// Applies a non-undo action. Throws std::invalid_argument when it does not
/// apply to g.
Graph apply_action(const Graph &g, const SessionAction &action);

struct HistoryEntry {
    Graph graph;
    /// "create" for the first entry, otherwise SessionAction::str().
    std::string step;
};

enum class TargetStatus { Feasible, Infeasible, UnknownBudget };

const char *target_status_name(TargetStatus s);

struct TargetCheck {
    BellPairTarget target;
    TargetStatus status;
    std::string detail;
    std::optional<Witness> witness;
};

struct SessionState {
    std::string id;
    /// Never empty; the back is the current graph.
    std::vector<HistoryEntry> history;
    std::optional<BellPairTarget> target;

    const Graph &current() const { return history.back().graph; }
    /// Rebuilds every entry from the first graph and the recorded steps.
    bool replays() const;
};

/// Checks a Bell-pair target against g within the budget. Labels measured
/// away make the target infeasible without a search.
TargetCheck check_target(const Graph &g, const BellPairTarget &target, uint64_t budget);

/// Full response document: graph, history, foliage, components and, when a
/// target is watched, its check.
nlohmann::json session_document(const SessionState &state, uint64_t target_budget);

class UnknownSession : public std::out_of_range {
   public:
    explicit UnknownSession(const std::string &id) : std::out_of_range("unknown session '" + id + "'") {}
};

struct SessionStoreOptions {
    size_t capacity = 256;
    /// Work budget for target checks; past it the status is unknown-budget.
    uint64_t target_budget = 2'000'000;
    uint64_t seed = std::random_device{}();
};

/// In-memory sessions with least-recently-used eviction. Operations on one
/// session are serialized by its own mutex; different sessions proceed in
/// parallel.
class SessionStore {
   public:
    explicit SessionStore(SessionStoreOptions options = {});

    /// Returns the new session's document.
    nlohmann::json create(const Graph &initial);
    nlohmann::json get(const std::string &id);
    /// Applies the action (undo pops the history). Throws std::invalid_argument
    /// if it does not apply, including undo at the initial graph.
    nlohmann::json step(const std::string &id, const SessionAction &action);
    /// Watches a target, or clears it with nullopt.
    nlohmann::json set_target(const std::string &id, const std::optional<BellPairTarget> &target);
    /// Returns the final document.
    nlohmann::json remove(const std::string &id);

    SessionState snapshot(const std::string &id);
    size_t size() const;
    const SessionStoreOptions &options() const { return options_; }

   private:
    struct Entry {
        std::mutex mutex;
        SessionState state;
        std::list<std::string>::iterator lru;
    };

    std::shared_ptr<Entry> find(const std::string &id);
    std::string fresh_id();

    SessionStoreOptions options_;
    mutable std::mutex mutex_;
    std::unordered_map<std::string, std::shared_ptr<Entry>> sessions_;
    /// Most recently used at the front.
    std::list<std::string> lru_;
    std::mt19937_64 rng_;
};

}  // namespace lcroute

#endif
