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

#ifndef LCROUTE_HTTP_SERVICE_H
#define LCROUTE_HTTP_SERVICE_H

#include <string>
#include <string_view>

#include "lcroute/session.h"

namespace httplib {
class Server;
}

namespace lcroute {

/// Environment variable holding the listen address, as host:port.
inline constexpr const char *kListenEnv = "LCROUTE_LISTEN";
inline constexpr const char *kDefaultListen = "127.0.0.1:8080";

struct ListenAddress {
    std::string host;
    int port;
};

/// Splits "host:port". Throws std::invalid_argument on a bad port.
ListenAddress parse_listen_address(std::string_view text);
/// $LCROUTE_LISTEN, or the default when unset or empty.
ListenAddress listen_address_from_env();

/// Routes, all JSON:
///   POST   /sessions                 body: a graph document, or
///                                    {"graph": doc}, {"edgelist": "..."},
///                                    {"named": "ring", "n": 6}
///   GET    /sessions/{id}
///   POST   /sessions/{id}/step       body: see SessionAction::from_json
///   POST   /sessions/{id}/target     body: {"pairs": [[a1,a2],[b1,b2]]},
///                                    or {"pairs": null} to clear
///   DELETE /sessions/{id}
/// Every success returns the session document. Errors return
/// {"error": message} with 400 for bad input and 404 for unknown sessions.
void register_routes(httplib::Server &server, SessionStore &store);

/// Blocks serving on the address until the server stops.
void serve(const ListenAddress &address, SessionStore &store);

}  // namespace lcroute

#endif
