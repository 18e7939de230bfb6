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

#ifndef CQEC_GRAPH_HPP
#define CQEC_GRAPH_HPP

#include <string>
#include <utility>
#include <vector>

#include "cqec/bitvec.hpp"
#include "cqec/errors.hpp"
#include "cqec/pauli.hpp"

namespace cqec {

/// Simple undirected graph as a symmetric, zero-diagonal GF(2)
/// adjacency matrix; the skeleton of a cluster state.
class Graph {
  public:
    explicit Graph(size_t n) : n_(n), adj_(n, BitVec(n)) {}

    /// Builds from 1-based edge pairs; duplicates are idempotent.
    static Graph from_edges(size_t n, const std::vector<std::pair<size_t, size_t>> &edges);

    /// Builds from adjacency rows; throws unless symmetric with zero diagonal.
    static Graph from_adjacency(std::vector<BitVec> rows);

    size_t num_vertices() const { return n_; }

    bool edge(size_t i, size_t j) const { return adj_[i - 1].get(j - 1); }

    void add_edge(size_t i, size_t j);

    /// Neighbor mask of 1-based vertex j (0-based bit positions).
    const BitVec &neighbors(size_t j) const { return adj_[j - 1]; }

    const std::vector<BitVec> &rows() const { return adj_; }

    /// Edges as (min,max) pairs in lexicographic order; 1-based.
    std::vector<std::pair<size_t, size_t>> edges() const;

    size_t num_edges() const { return edges().size(); }

    /// `{"n": int, "adjacency": [[0|1,...],...]}`
    std::string to_json() const;
    static Graph from_json(std::string_view text);

    /// One "i j" pair per line, 1-based; '#' comments allowed.
    static Graph from_edge_list(std::string_view text, size_t n);

    bool operator==(const Graph &other) const = default;

  private:
    size_t n_;
    std::vector<BitVec> adj_;
};

/// A cluster graph with a designated message vertex.
struct ClusterCode {
    Graph graph;
    size_t message_index;  // 1-based
};

/// Stabilizer generators of the cluster state on g: generator j is X on
/// vertex j and Z on each of its neighbors, sign +1.
GeneratorSet cluster_stabilizers(const Graph &g);

/// One preparation or entangling step of a cluster circuit.
struct CircuitOp {
    enum class Kind { PrepPlus, CZ } kind;
    size_t a = 0;  // 1-based qubit
    size_t b = 0;  // second qubit for CZ
};

struct CircuitDescription {
    size_t n;
    std::vector<CircuitOp> ops;
};

/// |+> preparation on every vertex followed by one CZ per edge in
/// lexicographic (min,max) order, so the export is byte-reproducible.
CircuitDescription cz_circuit(const Graph &g);

/// OpenQASM-2 subset text for the cluster circuit; when message_index is
/// nonzero, appends an X-basis measurement (H then Z-measure) of it.
std::string to_openqasm(const Graph &g, size_t message_index = 0);

}  // namespace cqec

#endif
