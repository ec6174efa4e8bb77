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

#include "lcroute/session.h"

#include <cstdio>
#include <sstream>

#include "lcroute/document.h"
#include "lcroute/foliage.h"
#include "lcroute/lc_orbit.h"
#include "lcroute/reports.h"

namespace lcroute {

using nlohmann::json;

namespace {

Vertex parse_vertex(const std::string &word) {
    size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(word, &used);
    } catch (const std::exception &) {
        used = 0;
    }
    if (used != word.size() || used == 0 || !is_valid_label(value)) {
        throw std::invalid_argument("'" + word + "' is not a vertex label in 0..63");
    }
    return value;
}

Vertex json_vertex(const json &body, const char *key) {
    if (!body.contains(key) || !body[key].is_number_integer()) {
        throw std::invalid_argument(std::string("action needs an integer \"") + key + "\"");
    }
    auto value = body[key].get<int64_t>();
    if (value < 0 || value > kMaxVertices - 1) {
        throw std::invalid_argument(std::string("\"") + key + "\" is outside 0..63");
    }
    return static_cast<Vertex>(value);
}

}  // namespace

SessionAction SessionAction::parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::vector<std::string> words;
    for (std::string w; in >> w;) {
        words.push_back(w);
    }
    if (words.empty()) {
        throw std::invalid_argument("empty action");
    }
    SessionAction a;
    const std::string &op = words[0];
    auto want = [&](size_t lo, size_t hi) {
        if (words.size() < lo || words.size() > hi) {
            throw std::invalid_argument("wrong number of arguments for '" + op + "'");
        }
    };
    if (op == "lc") {
        want(2, 2);
        a.kind = Kind::LocalComplement;
        a.args = {parse_vertex(words[1])};
    } else if (op == "measure") {
        want(3, 4);
        a.kind = Kind::Measure;
        a.args = {parse_vertex(words[1])};
        a.basis = PauliBasis{parse_pauli(words[2]), std::nullopt};
        if (words.size() == 4) {
            if (a.basis->axis != Pauli::X) {
                throw std::invalid_argument("only X measurements take a special neighbour");
            }
            a.basis->special = parse_vertex(words[3]);
        }
    } else if (op == "cz") {
        want(3, 3);
        a.kind = Kind::ControlledZ;
        a.args = {parse_vertex(words[1]), parse_vertex(words[2])};
    } else if (op == "undo") {
        want(1, 1);
        a.kind = Kind::Undo;
    } else {
        throw std::invalid_argument("unknown action '" + op + "'");
    }
    return a;
}

SessionAction SessionAction::from_json(const json &body) {
    if (body.is_string()) {
        return parse(body.get<std::string>());
    }
    if (!body.is_object() || !body.contains("action") || !body["action"].is_string()) {
        throw std::invalid_argument("step body needs an \"action\" string");
    }
    std::string op = body["action"].get<std::string>();
    SessionAction a;
    if (op == "lc") {
        a.kind = Kind::LocalComplement;
        a.args = {json_vertex(body, "v")};
    } else if (op == "measure") {
        a.kind = Kind::Measure;
        a.args = {json_vertex(body, "v")};
        if (!body.contains("basis") || !body["basis"].is_string()) {
            throw std::invalid_argument("measure needs a \"basis\" of X, Y or Z");
        }
        a.basis = PauliBasis{parse_pauli(body["basis"].get<std::string>()), std::nullopt};
        if (body.contains("special") && !body["special"].is_null()) {
            if (a.basis->axis != Pauli::X) {
                throw std::invalid_argument("only X measurements take a special neighbour");
            }
            a.basis->special = json_vertex(body, "special");
        }
    } else if (op == "cz") {
        a.kind = Kind::ControlledZ;
        a.args = {json_vertex(body, "u"), json_vertex(body, "v")};
    } else if (op == "undo") {
        a.kind = Kind::Undo;
    } else {
        throw std::invalid_argument("unknown action '" + op + "'");
    }
    return a;
}

std::string SessionAction::str() const {
    std::ostringstream out;
    switch (kind) {
        case Kind::LocalComplement:
            out << "lc " << args.at(0);
            break;
        case Kind::Measure:
            out << "measure " << args.at(0) << ' ' << pauli_name(basis->axis);
            if (basis->special) {
                out << ' ' << *basis->special;
            }
            break;
        case Kind::ControlledZ:
            out << "cz " << args.at(0) << ' ' << args.at(1);
            break;
        case Kind::Undo:
            out << "undo";
            break;
    }
    return out.str();
}

Graph apply_action(const Graph &g, const SessionAction &action) {
    switch (action.kind) {
        case SessionAction::Kind::LocalComplement:
            return local_complement(g, action.args.at(0));
        case SessionAction::Kind::Measure:
            return measure(g, action.args.at(0), *action.basis);
        case SessionAction::Kind::ControlledZ:
            return toggle_cz(g, action.args.at(0), action.args.at(1));
        case SessionAction::Kind::Undo:
            break;
    }
    throw std::invalid_argument("undo is not a graph operation");
}

bool SessionState::replays() const {
    if (history.empty()) {
        return false;
    }
    Graph g = history.front().graph;
    for (size_t i = 1; i < history.size(); i++) {
        g = apply_action(g, SessionAction::parse(history[i].step));
        if (g != history[i].graph) {
            return false;
        }
    }
    return true;
}

const char *target_status_name(TargetStatus s) {
    switch (s) {
        case TargetStatus::Feasible:
            return "feasible";
        case TargetStatus::Infeasible:
            return "infeasible";
        case TargetStatus::UnknownBudget:
            return "unknown-budget";
    }
    return "?";
}

TargetCheck check_target(const Graph &g, const BellPairTarget &target, uint64_t budget) {
    TargetCheck out{target, TargetStatus::Infeasible, "", std::nullopt};
    VertexSet missing = target.labels() - g.vertex_set();
    if (!missing.empty()) {
        out.detail = "target label " + std::to_string(missing.first()) + " has been measured";
        return out;
    }
    SearchOptions options;
    options.budget = budget;
    try {
        VertexMinorReport report = can_extract_bell_pairs(g, target, options);
        if (report.decision) {
            out.status = TargetStatus::Feasible;
            out.witness = report.witness;
        }
        out.detail = std::to_string(report.stats.work) + " work units";
    } catch (const BudgetExceeded &e) {
        out.status = TargetStatus::UnknownBudget;
        out.detail = e.what();
    } catch (const OrbitCapExceeded &e) {
        out.status = TargetStatus::UnknownBudget;
        out.detail = e.what();
    }
    return out;
}

json session_document(const SessionState &state, uint64_t target_budget) {
    const Graph &g = state.current();
    FoliageDecomposition f = foliage_decomposition(g);
    json twins = json::array();
    for (auto [u, v] : f.twins) {
        twins.push_back({u, v});
    }
    json components = json::array();
    for (VertexSet c : connected_components(g)) {
        components.push_back(c.to_vector());
    }
    json steps = json::array();
    for (const HistoryEntry &e : state.history) {
        steps.push_back(e.step);
    }
    json doc = {{"id", state.id},
                {"graph", graph_to_json(g)},
                {"history_length", state.history.size()},
                {"steps", std::move(steps)},
                {"foliage",
                 {{"leaves", f.leaves.to_vector()},
                  {"axils", f.axils.to_vector()},
                  {"twins", std::move(twins)},
                  {"foliage", f.foliage().to_vector()}}},
                {"components", std::move(components)}};
    if (state.target) {
        TargetCheck check = check_target(g, *state.target, target_budget);
        auto [a1, a2] = state.target->pair_a();
        auto [b1, b2] = state.target->pair_b();
        json target = {{"pairs", {{a1, a2}, {b1, b2}}},
                       {"crossing", state.target->crossing()},
                       {"status", target_status_name(check.status)},
                       {"detail", check.detail}};
        target["witness"] = check.witness ? to_json(*check.witness) : json(nullptr);
        doc["target"] = std::move(target);
    } else {
        doc["target"] = nullptr;
    }
    return doc;
}

SessionStore::SessionStore(SessionStoreOptions options) : options_(options), rng_(options.seed) {
    if (options_.capacity == 0) {
        throw std::invalid_argument("session capacity must be positive");
    }
}

std::string SessionStore::fresh_id() {
    while (true) {
        char buf[17];
        std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(rng_()));
        if (!sessions_.contains(buf)) {
            return buf;
        }
    }
}

std::shared_ptr<SessionStore::Entry> SessionStore::find(const std::string &id) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = sessions_.find(id);
    if (it == sessions_.end()) {
        throw UnknownSession(id);
    }
    lru_.splice(lru_.begin(), lru_, it->second->lru);
    return it->second;
}

json SessionStore::create(const Graph &initial) {
    auto entry = std::make_shared<Entry>();
    {
        std::lock_guard<std::mutex> lock(mutex_);
        entry->state.id = fresh_id();
        entry->state.history.push_back({initial, "create"});
        if (sessions_.size() >= options_.capacity) {
            sessions_.erase(lru_.back());
            lru_.pop_back();
        }
        lru_.push_front(entry->state.id);
        entry->lru = lru_.begin();
        sessions_.emplace(entry->state.id, entry);
    }
    std::lock_guard<std::mutex> lock(entry->mutex);
    return session_document(entry->state, options_.target_budget);
}

json SessionStore::get(const std::string &id) {
    auto entry = find(id);
    std::lock_guard<std::mutex> lock(entry->mutex);
    return session_document(entry->state, options_.target_budget);
}

json SessionStore::step(const std::string &id, const SessionAction &action) {
    auto entry = find(id);
    std::lock_guard<std::mutex> lock(entry->mutex);
    SessionState &state = entry->state;
    if (action.kind == SessionAction::Kind::Undo) {
        if (state.history.size() == 1) {
            throw std::invalid_argument("nothing to undo");
        }
        state.history.pop_back();
    } else {
        state.history.push_back({apply_action(state.current(), action), action.str()});
    }
    return session_document(state, options_.target_budget);
}

json SessionStore::set_target(const std::string &id, const std::optional<BellPairTarget> &target) {
    auto entry = find(id);
    std::lock_guard<std::mutex> lock(entry->mutex);
    entry->state.target = target;
    return session_document(entry->state, options_.target_budget);
}

json SessionStore::remove(const std::string &id) {
    std::shared_ptr<Entry> entry;
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = sessions_.find(id);
        if (it == sessions_.end()) {
            throw UnknownSession(id);
        }
        entry = it->second;
        lru_.erase(entry->lru);
        sessions_.erase(it);
    }
    std::lock_guard<std::mutex> lock(entry->mutex);
    json doc = session_document(entry->state, options_.target_budget);
    doc["deleted"] = true;
    return doc;
}

SessionState SessionStore::snapshot(const std::string &id) {
    auto entry = find(id);
    std::lock_guard<std::mutex> lock(entry->mutex);
    return entry->state;
}

size_t SessionStore::size() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return sessions_.size();
}

}  // namespace lcroute
