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

#include "cqec/synthesis.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>

namespace cqec {

ParityCheckMatrix parity_check_from_stabilizers(const GeneratorSet &s) {
    ParityCheckMatrix h{s.size(), s.num_qubits(), {}, {}};
    h.hx.reserve(s.size());
    h.hz.reserve(s.size());
    for (const auto &g : s) {
        h.hx.push_back(g.x_bits());
        h.hz.push_back(g.z_bits());
    }
    return h;
}

namespace {

// Unknowns of the adjacency system: the strict upper triangle of A in row
// order (0,1),(0,2),...,(0,n-1),(1,2),...
struct UpperTriangle {
    size_t n;
    std::vector<std::pair<size_t, size_t>> pairs;

    explicit UpperTriangle(size_t n_) : n(n_) {
        for (size_t i = 0; i < n; ++i) {
            for (size_t j = i + 1; j < n; ++j) {
                pairs.emplace_back(i, j);
            }
        }
    }

    std::vector<BitVec> to_rows(const BitVec &solution) const {
        std::vector<BitVec> rows(n, BitVec(n));
        for (size_t k = 0; k < pairs.size(); ++k) {
            if (solution.get(k)) {
                auto [i, j] = pairs[k];
                rows[i].set(j, true);
                rows[j].set(i, true);
            }
        }
        return rows;
    }
};

// Linear system over the upper-triangle unknowns: for generator row t and
// matrix row a, sum_j A[a][j] hx_t[j] = hz_t[a] + c_t.
struct AdjacencySystem {
    std::vector<BitVec> eqs;  // coefficients | rhs (last bit)
    size_t unknowns;

    AdjacencySystem(const ParityCheckMatrix &h, const UpperTriangle &tri, uint64_t c_mask) {
        size_t n = h.cols;
        unknowns = tri.pairs.size();
        for (size_t t = 0; t < h.rows; ++t) {
            bool c = (c_mask >> t) & 1u;
            for (size_t a = 0; a < n; ++a) {
                BitVec eq(unknowns + 1);
                for (size_t k = 0; k < tri.pairs.size(); ++k) {
                    auto [i, j] = tri.pairs[k];
                    bool coeff = (i == a && h.hx[t].get(j)) || (j == a && h.hx[t].get(i));
                    if (coeff) {
                        eq.set(k, true);
                    }
                }
                eq.set(unknowns, h.hz[t].get(a) ^ c);
                eqs.push_back(std::move(eq));
            }
        }
    }
};

struct SolvedSystem {
    bool consistent = false;
    std::vector<BitVec> reduced;      // RREF rows
    std::vector<size_t> pivot_cols;
    std::vector<size_t> free_cols;
    size_t unknowns = 0;

    BitVec assignment(uint64_t free_bits) const {
        BitVec sol(unknowns);
        for (size_t f = 0; f < free_cols.size(); ++f) {
            if ((free_bits >> f) & 1u) {
                sol.set(free_cols[f], true);
            }
        }
        for (size_t r = 0; r < pivot_cols.size(); ++r) {
            bool v = reduced[r].get(unknowns);
            for (size_t f = 0; f < free_cols.size(); ++f) {
                if (((free_bits >> f) & 1u) && reduced[r].get(free_cols[f])) {
                    v = !v;
                }
            }
            sol.set(pivot_cols[r], v);
        }
        return sol;
    }
};

SolvedSystem solve(AdjacencySystem sys) {
    SolvedSystem out;
    out.unknowns = sys.unknowns;
    auto &eqs = sys.eqs;
    size_t rank = 0;
    for (size_t col = 0; col < sys.unknowns && rank < eqs.size(); ++col) {
        size_t piv = rank;
        while (piv < eqs.size() && !eqs[piv].get(col)) {
            ++piv;
        }
        if (piv == eqs.size()) {
            continue;
        }
        std::swap(eqs[rank], eqs[piv]);
        for (size_t r = 0; r < eqs.size(); ++r) {
            if (r != rank && eqs[r].get(col)) {
                eqs[r] ^= eqs[rank];
            }
        }
        out.pivot_cols.push_back(col);
        ++rank;
    }
    for (size_t r = rank; r < eqs.size(); ++r) {
        if (eqs[r].get(sys.unknowns)) {
            return out;  // inconsistent
        }
    }
    out.consistent = true;
    eqs.resize(rank, BitVec(sys.unknowns + 1));
    out.reduced = std::move(eqs);
    for (size_t col = 0; col < sys.unknowns; ++col) {
        if (std::find(out.pivot_cols.begin(), out.pivot_cols.end(), col) ==
            out.pivot_cols.end()) {
            out.free_cols.push_back(col);
        }
    }
    return out;
}

}  // namespace

AdjacencySearchResult adjacency_from_parity_check(const ParityCheckMatrix &h) {
    size_t n = h.cols;
    size_t r = h.rows;
    if (r >= 64) {
        throw ValidationError("too many generator rows for adjacency search");
    }
    // Only even-X-weight operators survive the hub measurement: the code
    // generators are even products of the anticommuting cluster generators.
    for (size_t i = 0; i < r; ++i) {
        if (h.hx[i].popcount() % 2 != 0) {
            throw SynthesisInfeasibleError(
                "generator row " + std::to_string(i + 1) +
                " has odd X weight; no hub cluster can realize it");
        }
    }
    UpperTriangle tri(n);
    std::vector<BitVec> hz_basis = gf2_rref(h.hz);

    std::optional<Graph> fallback;
    // Deterministic order: offset masks ascending, then free-variable
    // assignments ascending. The first row-space-equal solution wins; the
    // very first solution of any kind is the fallback. A global budget
    // bounds the scan on degenerate inputs with huge solution spaces.
    uint64_t budget = uint64_t{1} << 22;
    for (uint64_t c_mask = 0; c_mask < (uint64_t{1} << r); ++c_mask) {
        SolvedSystem sol = solve(AdjacencySystem(h, tri, c_mask));
        if (!sol.consistent) {
            continue;
        }
        size_t fn = sol.free_cols.size();
        uint64_t limit = fn >= 22 ? budget : std::min(budget, uint64_t{1} << fn);
        for (uint64_t fb = 0; fb < limit; ++fb) {
            std::vector<BitVec> rows = tri.to_rows(sol.assignment(fb));
            if (!fallback) {
                fallback = Graph::from_adjacency(rows);
            }
            if (gf2_rref(rows) == hz_basis) {
                return {Graph::from_adjacency(std::move(rows)), true};
            }
        }
        budget = budget > limit ? budget - limit : 1;
    }
    if (fallback) {
        return {std::move(*fallback), false};
    }
    throw SynthesisInfeasibleError(
        "no symmetric zero-diagonal adjacency is compatible with the code");
}

ClusterCode extend_with_message(const Graph &a) {
    size_t n = a.num_vertices();
    Graph g(n + 1);
    for (auto [i, j] : a.edges()) {
        g.add_edge(i, j);
    }
    for (size_t v = 1; v <= n; ++v) {
        g.add_edge(v, n + 1);
    }
    return {std::move(g), n + 1};
}

SynthesisResult synthesize(const GeneratorSet &target, std::optional<int> forced_outcome,
                           BitSource &bits) {
    size_t n = target.num_qubits();
    if (target.size() + 1 != n) {
        throw ValidationError("expected n-1 independent generators on n qubits, got " +
                              std::to_string(target.size()) + " on " + std::to_string(n));
    }
    ParityCheckMatrix h = parity_check_from_stabilizers(target);
    AdjacencySearchResult adj = adjacency_from_parity_check(h);
    ClusterCode cluster = extend_with_message(adj.adjacency);

    GeneratorSet cluster_set = cluster_stabilizers(cluster.graph);
    MeasurementSpec spec{cluster.message_index, 'X', forced_outcome};
    auto [measured, record] = measure(cluster_set, spec, bits);
    GeneratorSet reduced = discard_qubit(measured, cluster.message_index).set;

    // The code generators are the group elements matching the target rows.
    std::vector<PauliOperator> achieved_gens;
    achieved_gens.reserve(target.size());
    for (const auto &t : target) {
        auto elem = reduced.project_onto_group(t);
        if (!elem) {
            throw SynthesisMismatchError(
                "target generator " + t.str() +
                " is not contained in the post-measurement group; post-measurement rows:\n" +
                GeneratorSet::unchecked(n, reduced.canonical_rows()).str());
        }
        achieved_gens.push_back(*elem);
    }
    GeneratorSet achieved = GeneratorSet::unchecked(n, std::move(achieved_gens));

    PauliOperator correction(n);
    try {
        correction = correction_frame(achieved, target);
    } catch (const FrameError &e) {
        throw SynthesisMismatchError(std::string("no correction frame exists: ") + e.what() +
                                     "\nachieved:\n" + achieved.str() + "target:\n" +
                                     target.str());
    }
    bool verified = group_equal(achieved.conjugated_by(correction), target);
    if (!verified) {
        throw SynthesisMismatchError("post-correction group differs from target; achieved:\n" +
                                     achieved.str() + "target:\n" + target.str());
    }
    return SynthesisResult{target,
                           std::move(adj.adjacency),
                           std::move(cluster),
                           adj.row_space_equal,
                           {record},
                           std::move(achieved),
                           std::move(correction),
                           verified};
}

std::string SynthesisResult::to_json() const {
    nlohmann::json j;
    auto set_to_array = [](const GeneratorSet &s) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto &g : s) {
            arr.push_back(g.str());
        }
        return arr;
    };
    auto adj_to_array = [](const Graph &g) {
        nlohmann::json rows = nlohmann::json::array();
        for (size_t i = 1; i <= g.num_vertices(); ++i) {
            nlohmann::json row = nlohmann::json::array();
            for (size_t k = 1; k <= g.num_vertices(); ++k) {
                row.push_back(i != k && g.edge(i, k) ? 1 : 0);
            }
            rows.push_back(std::move(row));
        }
        return rows;
    };
    j["target"] = set_to_array(target);
    j["adjacency"] = adj_to_array(check_adjacency);
    j["cluster_adjacency"] = adj_to_array(cluster.graph);
    j["message_qubit"] = cluster.message_index;
    j["row_space_equal"] = row_space_equal;
    auto &recs = j["records"] = nlohmann::json::array();
    for (const auto &r : records) {
        recs.push_back(nlohmann::json::parse(r.to_json()));
    }
    j["correction"] = correction.str();
    j["achieved"] = set_to_array(achieved);
    j["verified"] = verified;
    return j.dump(2);
}

bool is_logical_pair(const GeneratorSet &s, const PauliOperator &x, const PauliOperator &z) {
    for (const auto &g : s) {
        if (!g.commutes_with(x) || !g.commutes_with(z)) {
            return false;
        }
    }
    if (s.contains_unsigned(x) || s.contains_unsigned(z)) {
        return false;
    }
    return !x.commutes_with(z);
}

namespace {

// Visits the weight-w Paulis in lexicographic string order with letters
// ordered I < X < Z < Y (the x + 2z bit encoding); stops early once fn
// returns true.
bool for_each_pauli_of_weight(size_t n, size_t w,
                              const std::function<bool(const PauliOperator &)> &fn) {
    BitVec x(n), z(n);
    std::function<bool(size_t, size_t)> rec = [&](size_t pos, size_t remaining) -> bool {
        if (remaining == 0) {
            PauliOperator p(x, z, 0);
            return fn(p);
        }
        if (pos == n) {
            return false;
        }
        if (n - pos > remaining) {
            if (rec(pos + 1, remaining)) {
                return true;
            }
        }
        static constexpr bool kXBit[3] = {true, false, true};  // X, Z, Y
        static constexpr bool kZBit[3] = {false, true, true};
        for (int l = 0; l < 3; ++l) {
            x.set(pos, kXBit[l]);
            z.set(pos, kZBit[l]);
            bool done = rec(pos + 1, remaining - 1);
            x.set(pos, false);
            z.set(pos, false);
            if (done) {
                return true;
            }
        }
        return false;
    };
    return rec(0, w);
}

}  // namespace

std::pair<PauliOperator, PauliOperator> logical_operators(const GeneratorSet &s) {
    size_t n = s.num_qubits();
    auto is_logical = [&](const PauliOperator &p) {
        for (const auto &g : s) {
            if (!g.commutes_with(p)) {
                return false;
            }
        }
        return !s.contains_unsigned(p);
    };
    std::optional<PauliOperator> logical_x;
    for (size_t w = 1; w <= n && !logical_x; ++w) {
        for_each_pauli_of_weight(n, w, [&](const PauliOperator &p) {
            if (is_logical(p)) {
                logical_x = p;
                return true;
            }
            return false;
        });
    }
    if (!logical_x) {
        throw ValidationError("no logical operator exists for this set");
    }
    std::optional<PauliOperator> logical_z;
    for (size_t w = 1; w <= n && !logical_z; ++w) {
        for_each_pauli_of_weight(n, w, [&](const PauliOperator &p) {
            if (is_logical(p) && !p.commutes_with(*logical_x)) {
                logical_z = p;
                return true;
            }
            return false;
        });
    }
    if (!logical_z) {
        throw ValidationError("no anticommuting logical partner exists");
    }
    return {*logical_x, *logical_z};
}

}  // namespace cqec
