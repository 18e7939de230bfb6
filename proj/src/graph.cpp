// Copyright 2026 The cqec authors
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

#include "cqec/graph.hpp"

#include <json.hpp>

#include <sstream>

namespace cqec {

Graph Graph::from_edges(size_t n, const std::vector<std::pair<size_t, size_t>> &edges) {
    Graph g(n);
    for (auto [i, j] : edges) {
        g.add_edge(i, j);
    }
    return g;
}

Graph Graph::from_adjacency(std::vector<BitVec> rows) {
    size_t n = rows.size();
    for (size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n) {
            throw ValidationError("adjacency matrix is not square");
        }
        if (rows[i].get(i)) {
            throw ValidationError("adjacency diagonal must be zero (vertex " +
                                  std::to_string(i + 1) + ")");
        }
        for (size_t j = i + 1; j < n; ++j) {
            if (rows[i].get(j) != rows[j].get(i)) {
                throw ValidationError("adjacency matrix is not symmetric");
            }
        }
    }
    Graph g(n);
    g.adj_ = std::move(rows);
    return g;
}

void Graph::add_edge(size_t i, size_t j) {
    if (i < 1 || i > n_ || j < 1 || j > n_) {
        throw ValidationError("edge (" + std::to_string(i) + "," + std::to_string(j) +
                              ") out of range 1.." + std::to_string(n_));
    }
    if (i == j) {
        throw ValidationError("self-loop at vertex " + std::to_string(i));
    }
    adj_[i - 1].set(j - 1, true);
    adj_[j - 1].set(i - 1, true);
}

std::vector<std::pair<size_t, size_t>> Graph::edges() const {
    std::vector<std::pair<size_t, size_t>> out;
    for (size_t i = 0; i < n_; ++i) {
        for (size_t j = i + 1; j < n_; ++j) {
            if (adj_[i].get(j)) {
                out.emplace_back(i + 1, j + 1);
            }
        }
    }
    return out;
}

std::string Graph::to_json() const {
    nlohmann::json j;
    j["n"] = n_;
    auto &rows = j["adjacency"] = nlohmann::json::array();
    for (size_t i = 0; i < n_; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (size_t k = 0; k < n_; ++k) {
            row.push_back(adj_[i].get(k) ? 1 : 0);
        }
        rows.push_back(std::move(row));
    }
    return j.dump(2);
}

Graph Graph::from_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw ParseError(std::string("invalid graph JSON: ") + e.what());
    }
    if (!j.contains("n") || !j.contains("adjacency")) {
        throw ParseError("graph JSON must contain \"n\" and \"adjacency\"");
    }
    size_t n = j["n"].get<size_t>();
    const auto &rows = j["adjacency"];
    if (!rows.is_array() || rows.size() != n) {
        throw ParseError("adjacency must be an n x n array");
    }
    std::vector<BitVec> adj(n, BitVec(n));
    for (size_t i = 0; i < n; ++i) {
        if (!rows[i].is_array() || rows[i].size() != n) {
            throw ParseError("adjacency must be an n x n array");
        }
        for (size_t k = 0; k < n; ++k) {
            int v = rows[i][k].get<int>();
            if (v != 0 && v != 1) {
                throw ParseError("adjacency entries must be 0 or 1");
            }
            adj[i].set(k, v == 1);
        }
    }
    return from_adjacency(std::move(adj));
}

Graph Graph::from_edge_list(std::string_view text, size_t n) {
    std::vector<std::pair<size_t, size_t>> edges;
    std::istringstream in{std::string(text)};
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream ls(line);
        size_t i = 0, j = 0;
        if (!(ls >> i)) {
            continue;  // blank
        }
        if (!(ls >> j)) {
            throw ParseError("line " + std::to_string(lineno) + ": expected two vertex indices");
        }
        edges.emplace_back(i, j);
    }
    return from_edges(n, edges);
}

GeneratorSet cluster_stabilizers(const Graph &g) {
    size_t n = g.num_vertices();
    std::vector<PauliOperator> gens;
    gens.reserve(n);
    for (size_t j = 0; j < n; ++j) {
        BitVec x(n), z = g.neighbors(j + 1);
        x.set(j, true);
        gens.emplace_back(std::move(x), std::move(z), uint8_t{0});
    }
    return GeneratorSet::unchecked(n, std::move(gens));
}

CircuitDescription cz_circuit(const Graph &g) {
    CircuitDescription c{g.num_vertices(), {}};
    for (size_t q = 1; q <= g.num_vertices(); ++q) {
        c.ops.push_back({CircuitOp::Kind::PrepPlus, q, 0});
    }
    for (auto [i, j] : g.edges()) {
        c.ops.push_back({CircuitOp::Kind::CZ, i, j});
    }
    return c;
}

std::string to_openqasm(const Graph &g, size_t message_index) {
    size_t n = g.num_vertices();
    if (message_index > n) {
        throw ValidationError("message qubit out of range");
    }
    std::ostringstream out;
    out << "OPENQASM 2.0;\n";
    out << "include \"qelib1.inc\";\n";
    out << "qreg q[" << n << "];\n";
    if (message_index != 0) {
        out << "creg c[1];\n";
    }
    for (size_t q = 0; q < n; ++q) {
        out << "h q[" << q << "];\n";
    }
    for (auto [i, j] : g.edges()) {
        out << "cz q[" << (i - 1) << "],q[" << (j - 1) << "];\n";
    }
    if (message_index != 0) {
        out << "h q[" << (message_index - 1) << "];\n";
        out << "measure q[" << (message_index - 1) << "] -> c[0];\n";
    }
    return out.str();
}

}  // namespace cqec
