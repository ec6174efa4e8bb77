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

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "lcroute/butterfly_demo.h"
#include "lcroute/document.h"
#include "lcroute/http_service.h"
#include "lcroute/lc_orbit.h"
#include "lcroute/reports.h"
#include "lcroute/theorems.h"

using namespace lcroute;

namespace {

// Exit codes.
constexpr int kOk = 0;
constexpr int kNotConfirmed = 1;
constexpr int kBadInput = 2;
constexpr int kUnknown = 3;

struct Output {
    bool json = false;
    bool dot = false;
    std::string format = "edgelist";
};

/// Graph arguments are edgelist text, a JSON document, or @path.
Graph read_graph(const std::string &arg) {
    std::string text = arg;
    if (!arg.empty() && arg[0] == '@') {
        std::ifstream in(arg.substr(1));
        if (!in) {
            throw std::invalid_argument("cannot read " + arg.substr(1));
        }
        std::stringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    size_t first = text.find_first_not_of(" \t\r\n");
    bool is_json = first != std::string::npos && text[first] == '{';
    return parse_graph(text, is_json ? GraphFormat::Json : GraphFormat::EdgeList);
}

void print_graph(const Graph &g, const Output &out) {
    if (out.dot) {
        std::cout << export_dot(g);
    } else if (out.json) {
        std::cout << graph_to_json(g).dump(2) << "\n";
    } else {
        std::cout << serialize(g, parse_format(out.format)) << "\n";
    }
}

NamedGraph named_kind(const std::string &name) {
    if (name == "ring") return NamedGraph::Ring;
    if (name == "line") return NamedGraph::Line;
    if (name == "complete") return NamedGraph::Complete;
    throw std::invalid_argument("unknown graph family '" + name + "'");
}

int print_report(const VertexMinorReport &report, bool json) {
    if (json) {
        std::cout << to_json(report).dump(2) << "\n";
        return kOk;
    }
    std::cout << (report.decision ? "feasible" : "infeasible") << "\n";
    if (report.witness) {
        std::cout << "measurements:";
        for (const Measurement &m : report.witness->measurements) {
            std::cout << ' ' << to_string(m);
        }
        std::cout << "\nlc path:";
        for (Vertex v : report.witness->lc_path) {
            std::cout << ' ' << v;
        }
        std::cout << "\n";
    }
    std::cout << "sequences tried: " << report.stats.sequences_tried << ", work: " << report.stats.work << "\n";
    return kOk;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Graph-state routing toolkit: local complementation, Pauli measurements, vertex-minors."};
    app.require_subcommand(1);
    Output out;
    uint64_t budget = kDefaultBudget;
    int n_max = 8;
    unsigned threads = 0;
    bool no_prune = false;

    auto graph_output = [&](CLI::App *cmd) {
        cmd->add_flag("--json", out.json, "Print JSON");
        cmd->add_flag("--dot", out.dot, "Print Graphviz DOT");
        cmd->add_option("--format", out.format, "Text format for graphs")
            ->check(CLI::IsMember({"edgelist", "json"}));
    };

    std::string family;
    int size = 0;
    auto *make = app.add_subcommand("make", "Build a ring, line or complete graph on labels 1..n");
    make->add_option("family", family, "ring, line or complete")->required();
    make->add_option("n", size, "Number of vertices")->required();
    graph_output(make);

    std::string graph_arg;
    std::vector<Vertex> vertices;
    auto *lc = app.add_subcommand("lc", "Local complementation at each vertex in turn");
    lc->add_option("graph", graph_arg, "Edgelist, JSON or @file")->required();
    lc->add_option("vertices", vertices, "Vertices")->required();
    graph_output(lc);

    Vertex vertex = 0;
    std::string basis_name;
    std::optional<Vertex> special;
    auto *meas = app.add_subcommand("measure", "Pauli measurement graph action");
    meas->add_option("graph", graph_arg, "Edgelist, JSON or @file")->required();
    meas->add_option("vertex", vertex, "Measured vertex")->required();
    meas->add_option("basis", basis_name, "X, Y or Z")->required();
    meas->add_option("--special", special, "Special neighbour for X");
    graph_output(meas);

    Vertex u = 0, v = 0;
    auto *cz = app.add_subcommand("cz", "Toggle the edge u-v");
    cz->add_option("graph", graph_arg, "Edgelist, JSON or @file")->required();
    cz->add_option("u", u)->required();
    cz->add_option("v", v)->required();
    graph_output(cz);

    auto *fol = app.add_subcommand("foliage", "Leaves, axils and twins");
    fol->add_option("graph", graph_arg, "Edgelist, JSON or @file")->required();
    graph_output(fol);

    size_t cap = kDefaultOrbitCap;
    bool list_members = false;
    auto *orb = app.add_subcommand("orbit", "Size of the local-complementation orbit");
    orb->add_option("graph", graph_arg, "Edgelist, JSON or @file")->required();
    orb->add_option("--cap", cap, "Largest orbit explored");
    orb->add_flag("--list", list_members, "Print every member");
    graph_output(orb);

    std::string h_arg;
    auto *vm = app.add_subcommand("vminor", "Is H a vertex-minor of G?");
    vm->add_option("graph", graph_arg, "G: edgelist, JSON or @file")->required();
    vm->add_option("target", h_arg, "H: edgelist, JSON or @file")->required();
    vm->add_option("--budget", budget, "Work budget");
    vm->add_flag("--no-prune", no_prune, "Plain enumeration");
    vm->add_flag("--json", out.json, "Print JSON");

    std::vector<Vertex> quad;
    auto *bell = app.add_subcommand("bell", "Can pairs (a1,a2),(b1,b2) be extracted from G?");
    bell->add_option("graph", graph_arg, "Edgelist, JSON or @file")->required();
    bell->add_option("labels", quad, "a1 a2 b1 b2")->required()->expected(4);
    bell->add_option("--budget", budget, "Work budget");
    bell->add_flag("--no-prune", no_prune, "Plain enumeration");
    bell->add_flag("--json", out.json, "Print JSON");

    std::string what;
    auto *verify = app.add_subcommand("verify", "Exhaustive theorem checks; exit 0 iff confirmed");
    verify->add_option("what", what, "ring, line, foliage or controls")
        ->required()
        ->check(CLI::IsMember({"ring", "line", "foliage", "controls"}));
    verify->add_option("--n-max", n_max, "Largest graph size")->check(CLI::Range(1, kHarnessMaxN));
    verify->add_option("--budget", budget, "Work budget per instance");
    verify->add_option("--threads", threads, "Worker threads (0 = all cores)");
    verify->add_flag("--json", out.json, "Print JSON");

    std::string demo_name;
    auto *demo = app.add_subcommand("demo", "Worked examples");
    demo->add_option("name", demo_name, "butterfly")->required()->check(CLI::IsMember({"butterfly"}));
    demo->add_flag("--json", out.json, "Print JSON");

    std::string listen;
    size_t capacity = 256;
    uint64_t target_budget = SessionStoreOptions{}.target_budget;
    auto *srv = app.add_subcommand("serve", std::string("HTTP session service (address from ") + kListenEnv + ")");
    srv->add_option("--listen", listen, "host:port, overrides the environment");
    srv->add_option("--capacity", capacity, "Sessions kept before eviction");
    srv->add_option("--budget", target_budget, "Work budget for target checks");

    CLI11_PARSE(app, argc, argv);

    try {
        if (make->parsed()) {
            print_graph(construct_named(named_kind(family), size), out);
        } else if (lc->parsed()) {
            Graph g = read_graph(graph_arg);
            for (Vertex x : vertices) {
                g = local_complement(g, x);
            }
            print_graph(g, out);
        } else if (meas->parsed()) {
            PauliBasis basis{parse_pauli(basis_name), special};
            print_graph(measure(read_graph(graph_arg), vertex, basis), out);
        } else if (cz->parsed()) {
            print_graph(toggle_cz(read_graph(graph_arg), u, v), out);
        } else if (fol->parsed()) {
            Graph g = read_graph(graph_arg);
            FoliageDecomposition f = foliage_decomposition(g);
            if (out.dot) {
                std::cout << export_dot(g, f);
            } else if (out.json) {
                nlohmann::json twins = nlohmann::json::array();
                for (auto [a, b] : f.twins) twins.push_back({a, b});
                std::cout << nlohmann::json{{"leaves", f.leaves.to_vector()},
                                            {"axils", f.axils.to_vector()},
                                            {"twins", twins},
                                            {"foliage", f.foliage().to_vector()}}
                                 .dump(2)
                          << "\n";
            } else {
                std::cout << "leaves: " << f.leaves << "\naxils: " << f.axils << "\ntwins:";
                for (auto [a, b] : f.twins) std::cout << " (" << a << "," << b << ")";
                std::cout << "\nfoliage: " << f.foliage() << "\n";
            }
        } else if (orb->parsed()) {
            LcOrbit orbit = lc_orbit(read_graph(graph_arg), cap);
            if (out.json) {
                nlohmann::json doc = {{"size", orbit.size()}};
                if (list_members) {
                    doc["members"] = nlohmann::json::array();
                    for (const Graph &g : orbit.graphs()) doc["members"].push_back(graph_to_json(g));
                }
                std::cout << doc.dump(2) << "\n";
            } else {
                std::cout << orbit.size() << "\n";
                if (list_members) {
                    for (const Graph &g : orbit.graphs()) print_graph(g, out);
                }
            }
        } else if (vm->parsed() || bell->parsed()) {
            SearchOptions options = no_prune ? SearchOptions::unpruned() : SearchOptions{};
            options.budget = budget;
            Graph g = read_graph(graph_arg);
            VertexMinorReport report =
                vm->parsed() ? is_vertex_minor(g, read_graph(h_arg), options)
                             : can_extract_bell_pairs(g, BellPairTarget({quad[0], quad[1]}, {quad[2], quad[3]}), options);
            return print_report(report, out.json);
        } else if (verify->parsed()) {
            HarnessOptions options{n_max, budget, threads};
            bool confirmed = false;
            if (what == "foliage") {
                FoliageReport r = verify_foliage_invariance(FoliageOptions{n_max, 2000, 1});
                std::cout << (out.json ? to_json(r).dump(2) + "\n" : summary_table(r));
                confirmed = r.confirmed();
            } else if (what == "controls") {
                ControlsReport r = verify_noncrossing_controls(options);
                std::cout << (out.json ? to_json(r).dump(2) + "\n" : summary_table(r));
                confirmed = r.confirmed();
            } else {
                TheoremReport r = what == "ring" ? verify_ring_no_crossing(options) : verify_line_no_crossing(options);
                std::cout << (out.json ? to_json(r).dump(2) + "\n" : summary_table(r));
                confirmed = r.confirmed();
            }
            return confirmed ? kOk : kNotConfirmed;
        } else if (demo->parsed()) {
            ButterflyDemo d = demo_ring_butterfly();
            std::cout << (out.json ? to_json(d).dump(2) + "\n" : summary_table(d));
            bool ok = d.without_cz.replays() && d.with_cz.replays() && !d.direct_crossing.decision;
            return ok ? kOk : kNotConfirmed;
        } else if (srv->parsed()) {
            ListenAddress address = listen.empty() ? listen_address_from_env() : parse_listen_address(listen);
            SessionStoreOptions options;
            options.capacity = capacity;
            options.target_budget = target_budget;
            SessionStore store(options);
            std::cerr << "listening on " << address.host << ":" << address.port << "\n";
            serve(address, store);
        }
    } catch (const BudgetExceeded &e) {
        std::cerr << "unknown: " << e.what() << "\n";
        return kUnknown;
    } catch (const OrbitCapExceeded &e) {
        std::cerr << "unknown: " << e.what() << "\n";
        return kUnknown;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    }
    return kOk;
}
