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

#include "cqec/analysis.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <sstream>

namespace cqec {

namespace {

// Smallest linearly dependent subset of the given columns, or 0 if all
// independent (never the case once #cols exceeds the bit length).
int min_dependent_columns(const std::vector<BitVec> &cols) {
    if (cols.size() > 14) {
        throw ValidationError("column subset search capped at 14 columns, got " +
                              std::to_string(cols.size()));
    }
    size_t m = cols.size();
    size_t bits = cols.empty() ? 0 : cols[0].size();
    for (size_t r = 1; r <= m; ++r) {
        // Enumerate r-subsets via combination recursion, XOR-accumulating.
        std::vector<size_t> idx(r);
        std::function<bool(size_t, size_t, BitVec)> rec = [&](size_t depth, size_t start,
                                                              BitVec acc) -> bool {
            if (depth == r) {
                return !acc.any();
            }
            for (size_t c = start; c + (r - depth) <= m; ++c) {
                BitVec next = acc;
                next ^= cols[c];
                if (rec(depth + 1, c + 1, std::move(next))) {
                    return true;
                }
            }
            return false;
        };
        if (rec(0, 0, BitVec(bits))) {
            return static_cast<int>(r);
        }
    }
    return 0;
}

std::vector<BitVec> columns_of(const std::vector<BitVec> &rows, size_t cols) {
    size_t r = rows.size();
    std::vector<BitVec> out(cols, BitVec(r));
    for (size_t i = 0; i < r; ++i) {
        for (size_t j = 0; j < cols; ++j) {
            if (rows[i].get(j)) {
                out[j].set(i, true);
            }
        }
    }
    return out;
}

}  // namespace

ColumnDistances distance_by_columns(const ParityCheckMatrix &h) {
    std::vector<BitVec> xcols = columns_of(h.hx, h.cols);
    std::vector<BitVec> zcols = columns_of(h.hz, h.cols);
    std::vector<BitVec> full = xcols;
    full.insert(full.end(), zcols.begin(), zcols.end());
    ColumnDistances out{};
    out.d = min_dependent_columns(full);
    out.dx = min_dependent_columns(zcols);
    out.dz = min_dependent_columns(xcols);
    return out;
}

int distance_brute_force(const GeneratorSet &s) {
    size_t n = s.num_qubits();
    if (n > 12) {
        throw ValidationError("brute-force distance capped at 12 qubits");
    }
    // Enumerate by increasing weight; the first logical operator found
    // fixes the distance.
    BitVec x(n), z(n);
    auto rows = s.canonical_rows();
    auto is_logical = [&](const PauliOperator &p) {
        for (const auto &g : s) {
            if (!g.commutes_with(p)) {
                return false;
            }
        }
        return !s.contains_unsigned(p);
    };
    for (size_t w = 1; w <= n; ++w) {
        bool found = false;
        std::function<bool(size_t, size_t)> rec = [&](size_t pos, size_t remaining) -> bool {
            if (remaining == 0) {
                return is_logical(PauliOperator(x, z, 0));
            }
            if (pos == n) {
                return false;
            }
            if (n - pos > remaining && rec(pos + 1, remaining)) {
                return true;
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
        found = rec(0, w);
        if (found) {
            return static_cast<int>(w);
        }
    }
    throw ValidationError("no logical operator exists: the set stabilizes a unique state");
}

bool hamming_bound(int n, int k, int t) {
    if (n < k || k < 0 || t < 0) {
        throw ValidationError("hamming_bound requires n >= k >= 0 and t >= 0");
    }
    if (n >= 63) {
        throw ValidationError("hamming_bound capped at n < 63");
    }
    unsigned __int128 lhs = 0;
    unsigned __int128 rhs = static_cast<unsigned __int128>(1) << n;
    unsigned __int128 binom = 1;  // C(n, 0)
    unsigned __int128 pow3 = 1;
    for (int j = 0; j <= t; ++j) {
        lhs += binom * pow3 << k;
        if (lhs > rhs) {
            return false;
        }
        binom = binom * static_cast<unsigned>(n - j) / static_cast<unsigned>(j + 1);
        pow3 *= 3;
    }
    return lhs <= rhs;
}

namespace {

bool hamming_saturated(int n, int k, int t) {
    unsigned __int128 lhs = 0;
    unsigned __int128 binom = 1;
    unsigned __int128 pow3 = 1;
    for (int j = 0; j <= t; ++j) {
        lhs += binom * pow3 << k;
        binom = binom * static_cast<unsigned>(n - j) / static_cast<unsigned>(j + 1);
        pow3 *= 3;
    }
    return lhs == (static_cast<unsigned __int128>(1) << n);
}

}  // namespace

CorrectabilityReport single_error_report(const GeneratorSet &s) {
    size_t n = s.num_qubits();
    CorrectabilityReport rep{};
    rep.n = n;
    static constexpr char kBases[3] = {'X', 'Y', 'Z'};
    for (char basis : kBases) {
        for (size_t q = 1; q <= n; ++q) {
            PauliOperator err = PauliOperator::single(n, q, basis);
            SyndromeEntry e{q, basis, {}};
            e.syndrome.reserve(s.size());
            for (const auto &g : s) {
                e.syndrome.push_back(g.commutes_with(err) ? 0 : 1);
            }
            rep.syndromes.push_back(std::move(e));
        }
    }

    auto nonzero = [](const SyndromeEntry &e) {
        return std::any_of(e.syndrome.begin(), e.syndrome.end(), [](int b) { return b != 0; });
    };
    auto class_entries = [&](char basis) {
        std::vector<const SyndromeEntry *> out;
        for (const auto &e : rep.syndromes) {
            if (e.basis == basis) {
                out.push_back(&e);
            }
        }
        return out;
    };
    auto evaluate = [&](char basis, bool &correctable, bool &detectable) {
        auto entries = class_entries(basis);
        detectable = std::all_of(entries.begin(), entries.end(),
                                 [&](const SyndromeEntry *e) { return nonzero(*e); });
        correctable = detectable;
        for (size_t i = 0; i < entries.size(); ++i) {
            for (size_t j = i + 1; j < entries.size(); ++j) {
                if (entries[i]->syndrome == entries[j]->syndrome) {
                    correctable = false;
                    rep.collisions.push_back({entries[i]->qubit, entries[i]->basis,
                                              entries[j]->qubit, entries[j]->basis});
                }
            }
        }
    };
    evaluate('X', rep.x_correctable, rep.x_detectable);
    evaluate('Y', rep.y_correctable, rep.y_detectable);
    evaluate('Z', rep.z_correctable, rep.z_detectable);

    rep.all_correctable = rep.x_correctable && rep.y_correctable && rep.z_correctable;
    if (rep.all_correctable) {
        for (size_t i = 0; i < rep.syndromes.size() && rep.all_correctable; ++i) {
            for (size_t j = i + 1; j < rep.syndromes.size(); ++j) {
                if (rep.syndromes[i].basis != rep.syndromes[j].basis &&
                    rep.syndromes[i].syndrome == rep.syndromes[j].syndrome) {
                    rep.all_correctable = false;
                    break;
                }
            }
        }
    }
    return rep;
}

AnalysisResult analyze_code(const GeneratorSet &s) {
    AnalysisResult out{};
    ParityCheckMatrix h = parity_check_from_stabilizers(s);
    ColumnDistances cd = distance_by_columns(h);
    out.params.n = static_cast<int>(s.num_qubits());
    out.params.k = static_cast<int>(s.num_qubits() - s.size());
    out.params.d = distance_brute_force(s);
    out.params.d_columns = cd.d;
    out.params.dx = cd.dx;
    out.params.dz = cd.dz;
    out.params.hamming_t1 = hamming_bound(out.params.n, out.params.k, 1);
    out.params.saturates_hamming =
        hamming_saturated(out.params.n, out.params.k, (out.params.d - 1) / 2);
    out.report = single_error_report(s);
    return out;
}

std::string AnalysisResult::to_json() const {
    nlohmann::json j;
    j["n"] = params.n;
    j["k"] = params.k;
    j["d"] = params.d_columns;
    j["dx"] = params.dx;
    j["dz"] = params.dz;
    j["d_bruteforce"] = params.d;
    j["hamming_t1"] = params.hamming_t1;
    j["saturates_hamming"] = params.saturates_hamming;
    j["correctable"] = {{"X", report.x_correctable},
                        {"Y", report.y_correctable},
                        {"Z", report.z_correctable}};
    j["all_single_errors_correctable"] = report.all_correctable;
    auto &coll = j["collisions"] = nlohmann::json::array();
    for (const auto &c : report.collisions) {
        coll.push_back({{"qubit_a", c.qubit_a},
                        {"basis_a", std::string(1, c.basis_a)},
                        {"qubit_b", c.qubit_b},
                        {"basis_b", std::string(1, c.basis_b)}});
    }
    return j.dump(2);
}

std::string AnalysisResult::to_text() const {
    std::ostringstream out;
    out << "[[" << params.n << "," << params.k << "," << params.d << "]] code\n";
    out << "distance (column method): d=" << params.d_columns << " dx=" << params.dx
        << " dz=" << params.dz << "  (dx from Hz columns, dz from Hx columns)\n";
    out << "distance (brute force):   d=" << params.d << "\n";
    out << "hamming bound at t=1: " << (params.hamming_t1 ? "satisfied" : "violated")
        << (params.saturates_hamming ? " (saturated)" : "") << "\n";
    auto verdict = [](bool v) { return v ? "correctable" : "NOT correctable"; };
    out << "single-qubit X errors: " << verdict(report.x_correctable) << "\n";
    out << "single-qubit Y errors: " << verdict(report.y_correctable) << "\n";
    out << "single-qubit Z errors: " << verdict(report.z_correctable) << "\n";
    if (report.all_correctable) {
        out << "all single-qubit Pauli errors correctable\n";
    }
    for (const auto &c : report.collisions) {
        out << "syndrome collision: " << c.basis_a << c.qubit_a << " vs " << c.basis_b
            << c.qubit_b << "\n";
    }
    return out.str();
}

}  // namespace cqec
