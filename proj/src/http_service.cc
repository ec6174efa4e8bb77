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

#include "lcroute/http_service.h"

#include <cstdlib>

#include "httplib.h"
#include "lcroute/document.h"

namespace lcroute {

using nlohmann::json;

ListenAddress parse_listen_address(std::string_view text) {
    size_t colon = text.rfind(':');
    if (colon == std::string_view::npos) {
        throw std::invalid_argument("listen address must look like host:port");
    }
    std::string host(text.substr(0, colon));
    std::string port_text(text.substr(colon + 1));
    size_t used = 0;
    int port = -1;
    try {
        port = std::stoi(port_text, &used);
    } catch (const std::exception &) {
        used = 0;
    }
    if (used == 0 || used != port_text.size() || port < 0 || port > 65535) {
        throw std::invalid_argument("bad port '" + port_text + "'");
    }
    return {host.empty() ? "0.0.0.0" : host, port};
}

ListenAddress listen_address_from_env() {
    const char *value = std::getenv(kListenEnv);
    return parse_listen_address(value != nullptr && *value != '\0' ? value : kDefaultListen);
}

namespace {

void reply(httplib::Response &res, int status, const json &body) {
    res.status = status;
    res.set_content(body.dump(), "application/json");
}

json parse_body(const httplib::Request &req) {
    try {
        return json::parse(req.body);
    } catch (const json::parse_error &e) {
        throw ParseError(std::string("request body is not JSON: ") + e.what(), e.byte);
    }
}

Graph initial_graph(const json &body) {
    if (body.is_object() && body.contains("named")) {
        if (!body["named"].is_string() || !body.contains("n") || !body["n"].is_number_integer()) {
            throw std::invalid_argument("named graphs need \"named\" and an integer \"n\"");
        }
        std::string kind = body["named"].get<std::string>();
        NamedGraph named;
        if (kind == "ring") {
            named = NamedGraph::Ring;
        } else if (kind == "line") {
            named = NamedGraph::Line;
        } else if (kind == "complete") {
            named = NamedGraph::Complete;
        } else {
            throw std::invalid_argument("unknown named graph '" + kind + "'");
        }
        return construct_named(named, body["n"].get<int>());
    }
    if (body.is_object() && body.contains("edgelist")) {
        if (!body["edgelist"].is_string()) {
            throw std::invalid_argument("\"edgelist\" must be a string");
        }
        return parse_graph(body["edgelist"].get<std::string>(), GraphFormat::EdgeList);
    }
    if (body.is_object() && body.contains("graph")) {
        return graph_from_json(body["graph"]);
    }
    return graph_from_json(body);
}

std::optional<BellPairTarget> parse_target(const json &body) {
    if (!body.is_object() || !body.contains("pairs")) {
        throw std::invalid_argument("target body needs \"pairs\"");
    }
    const json &pairs = body["pairs"];
    if (pairs.is_null()) {
        return std::nullopt;
    }
    auto pair = [](const json &p) {
        if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer()) {
            throw std::invalid_argument("each pair must be two integer labels");
        }
        return Edge{p[0].get<int>(), p[1].get<int>()};
    };
    if (!pairs.is_array() || pairs.size() != 2) {
        throw std::invalid_argument("\"pairs\" must hold exactly two pairs");
    }
    return BellPairTarget(pair(pairs[0]), pair(pairs[1]));
}

// Runs a handler, mapping exceptions to JSON errors.
template <typename F>
httplib::Server::Handler guarded(F f) {
    return [f](const httplib::Request &req, httplib::Response &res) {
        res.set_header("Access-Control-Allow-Origin", "*");
        try {
            f(req, res);
        } catch (const UnknownSession &e) {
            reply(res, 404, {{"error", e.what()}});
        } catch (const std::invalid_argument &e) {
            reply(res, 400, {{"error", e.what()}});
        } catch (const std::exception &e) {
            reply(res, 500, {{"error", e.what()}});
        }
    };
}

}  // namespace

void register_routes(httplib::Server &server, SessionStore &store) {
    server.Post("/sessions", guarded([&store](const httplib::Request &req, httplib::Response &res) {
                    reply(res, 201, store.create(initial_graph(parse_body(req))));
                }));
    server.Get(R"(/sessions/([0-9a-f]+))", guarded([&store](const httplib::Request &req, httplib::Response &res) {
                   reply(res, 200, store.get(req.matches[1]));
               }));
    server.Post(R"(/sessions/([0-9a-f]+)/step)",
                guarded([&store](const httplib::Request &req, httplib::Response &res) {
                    reply(res, 200, store.step(req.matches[1], SessionAction::from_json(parse_body(req))));
                }));
    server.Post(R"(/sessions/([0-9a-f]+)/target)",
                guarded([&store](const httplib::Request &req, httplib::Response &res) {
                    reply(res, 200, store.set_target(req.matches[1], parse_target(parse_body(req))));
                }));
    server.Delete(R"(/sessions/([0-9a-f]+))", guarded([&store](const httplib::Request &req, httplib::Response &res) {
                      reply(res, 200, store.remove(req.matches[1]));
                  }));
    server.Options(R"(/sessions.*)", [](const httplib::Request &, httplib::Response &res) {
        res.set_header("Access-Control-Allow-Origin", "*");
        res.set_header("Access-Control-Allow-Methods", "GET, POST, DELETE, OPTIONS");
        res.set_header("Access-Control-Allow-Headers", "Content-Type");
        res.status = 204;
    });
}

void serve(const ListenAddress &address, SessionStore &store) {
    httplib::Server server;
    register_routes(server, store);
    if (!server.listen(address.host, address.port)) {
        throw std::runtime_error("cannot listen on " + address.host + ":" + std::to_string(address.port));
    }
}

}  // namespace lcroute
