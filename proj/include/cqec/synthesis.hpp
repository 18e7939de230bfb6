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

#ifndef CQEC_SYNTHESIS_HPP
#define CQEC_SYNTHESIS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cqec/graph.hpp"
#include "cqec/measurement.hpp"
#include "cqec/pauli.hpp"

namespace cqec {

/// H = [Hx | Hz] over GF(2): row i encodes generator i, column j of hx
/// (hz) is set iff the generator has X-or-Y (Z-or-Y) on qubit j.
struct ParityCheckMatrix {
    size_t rows;
    size_t cols;
    std::vector<BitVec> hx;
    std::vector<BitVec> hz;
};

/// Extracts H from a generator set; signs are dropped.
ParityCheckMatrix parity_check_from_stabilizers(const GeneratorSet &s);

/// Result of the adjacency search behind `synthesize`.
struct AdjacencySearchResult {
    Graph adjacency;
    /// Whether rowspace(A) == rowspace(Hz). The search prefers such a
    /// matrix and falls back to any reconstruction-compatible one.
    bool row_space_equal;
};

/// Deterministic search for a symmetric zero-diagonal check-node adjacency
/// A compatible with the code: A * hx_i == hz_i or hz_i + (1,...,1) for
/// every generator row i (the all-ones offset is absorbed by the
/// hub-connected message qubit). Among compatible matrices, one whose row
/// space equals rowspace(Hz) is preferred. Throws
/// SynthesisInfeasibleError when no compatible matrix exists.
AdjacencySearchResult adjacency_from_parity_check(const ParityCheckMatrix &h);

/// Appends the message vertex, adjacent to every existing vertex.
ClusterCode extend_with_message(const Graph &a);

struct SynthesisResult {
    GeneratorSet target;
    Graph check_adjacency;     // A
    ClusterCode cluster;       // A' with the message vertex
    bool row_space_equal;      // diagnostic from the adjacency search
    std::vector<MeasurementRecord> records;
    GeneratorSet achieved;     // post-measurement code generators, pre-correction
    PauliOperator correction;
    bool verified;             // group_equal(achieved conjugated, target)

    std::string to_json() const;
};

/// Full pipeline: H -> A -> A' -> cluster stabilizers -> X-measure the
/// message qubit (forced or sampled) -> discard it -> extract the code
/// generators matching the target rows -> compute the correction frame.
/// Throws SynthesisMismatchError if the achieved group cannot be brought
/// onto the target.
SynthesisResult synthesize(const GeneratorSet &target, std::optional<int> forced_outcome,
                           BitSource &bits);

/// True iff (x, z) is a valid logical pair for the code: both commute with
/// every generator, lie outside the group's row space, and anticommute
/// with each other.
bool is_logical_pair(const GeneratorSet &s, const PauliOperator &x, const PauliOperator &z);

/// Minimum-weight logical pair (ties broken by lexicographic Pauli string
/// with I < X < Y < Z); the first operator is reported as logical X.
std::pair<PauliOperator, PauliOperator> logical_operators(const GeneratorSet &s);

}  // namespace cqec

#endif
