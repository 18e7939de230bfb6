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

#include "cqec/measurement.hpp"

#include <algorithm>
#include <sstream>

namespace cqec {

std::string MeasurementRecord::to_json() const {
    std::ostringstream out;
    out << "{\"qubit\":" << qubit << ",\"basis\":\"" << basis << "\",\"s\":" << outcome
        << ",\"deterministic\":" << (deterministic ? "true" : "false") << "}";
    return out.str();
}

std::vector<MeasurementSpec> parse_measurement_script(std::string_view text) {
    std::vector<MeasurementSpec> specs;
    std::istringstream in{std::string(text)};
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream ls(line);
        size_t qubit = 0;
        std::string basis;
        if (!(ls >> qubit)) {
            continue;
        }
        if (!(ls >> basis) || basis.size() != 1 ||
            (basis[0] != 'X' && basis[0] != 'Y' && basis[0] != 'Z')) {
            throw ParseError("line " + std::to_string(lineno) + ": expected basis X, Y or Z");
        }
        MeasurementSpec spec{qubit, basis[0], std::nullopt};
        int forced = 0;
        if (ls >> forced) {
            if (forced != 0 && forced != 1) {
                throw ParseError("line " + std::to_string(lineno) +
                                 ": forced outcome must be 0 or 1");
            }
            spec.forced_outcome = forced;
        }
        specs.push_back(spec);
    }
    return specs;
}

namespace {

PauliOperator observable_of(const GeneratorSet &set, const MeasurementSpec &spec) {
    if (spec.qubit < 1 || spec.qubit > set.num_qubits()) {
        throw ValidationError("measured qubit " + std::to_string(spec.qubit) +
                              " out of range 1.." + std::to_string(set.num_qubits()));
    }
    return PauliOperator::single(set.num_qubits(), spec.qubit, spec.basis);
}

}  // namespace

std::vector<size_t> anticommuting_indices(const GeneratorSet &set, const MeasurementSpec &spec) {
    PauliOperator m = observable_of(set, spec);
    std::vector<size_t> out;
    for (size_t i = 0; i < set.size(); ++i) {
        if (!set[i].commutes_with(m)) {
            out.push_back(i);
        }
    }
    return out;
}

std::pair<GeneratorSet, MeasurementRecord> measure(const GeneratorSet &set,
                                                   const MeasurementSpec &spec, BitSource &bits,
                                                   std::optional<size_t> pivot_override) {
    PauliOperator m = observable_of(set, spec);
    std::vector<size_t> anti = anticommuting_indices(set, spec);
    std::vector<PauliOperator> gens = set.generators();

    if (!anti.empty()) {
        size_t pivot = anti.front();
        if (pivot_override) {
            if (std::find(anti.begin(), anti.end(), *pivot_override) == anti.end()) {
                throw ValidationError("pivot override does not anticommute with the observable");
            }
            pivot = *pivot_override;
        }
        for (size_t i : anti) {
            if (i != pivot) {
                gens[i] = gens[pivot] * gens[i];
            }
        }
        int s = spec.forced_outcome ? *spec.forced_outcome : bits.next_bit();
        gens[pivot] = m.with_phase(static_cast<uint8_t>(2 * s));
        MeasurementRecord rec{spec.qubit, spec.basis, s, false};
        return {GeneratorSet::unchecked(set.num_qubits(), std::move(gens)), rec};
    }

    // Everything commutes: the outcome is fixed iff M is in the row space.
    if (auto elem = set.project_onto_group(m)) {
        int s = elem->phase() == 2 ? 1 : 0;
        if (spec.forced_outcome && *spec.forced_outcome != s) {
            throw ContradictionError("outcome of " + std::string(1, spec.basis) + " on qubit " +
                                     std::to_string(spec.qubit) + " is fixed to s=" +
                                     std::to_string(s) + ", cannot force s=" +
                                     std::to_string(*spec.forced_outcome));
        }
        MeasurementRecord rec{spec.qubit, spec.basis, s, true};
        return {set, rec};
    }

    // Underdetermined set: a commuting observable outside the group is
    // still a fair coin; the signed observable joins the group.
    int s = spec.forced_outcome ? *spec.forced_outcome : bits.next_bit();
    gens.push_back(m.with_phase(static_cast<uint8_t>(2 * s)));
    MeasurementRecord rec{spec.qubit, spec.basis, s, false};
    return {GeneratorSet::unchecked(set.num_qubits(), std::move(gens)), rec};
}

DiscardResult discard_qubit(const GeneratorSet &set, size_t qubit) {
    size_t n = set.num_qubits();
    if (qubit < 1 || qubit > n) {
        throw ValidationError("qubit " + std::to_string(qubit) + " out of range 1.." +
                              std::to_string(n));
    }
    size_t q = qubit - 1;
    std::vector<PauliOperator> gens = set.generators();
    auto acting = [&] {
        std::vector<size_t> idx;
        for (size_t i = 0; i < gens.size(); ++i) {
            if (gens[i].x_bit(q) || gens[i].z_bit(q)) {
                idx.push_back(i);
            }
        }
        return idx;
    };

    std::vector<size_t> acts = acting();
    if (acts.empty()) {
        throw StateError("qubit " + std::to_string(qubit) +
                         " is unconstrained; nothing to discard");
    }
    // All generators commute, so every nonidentity letter on q must be the
    // same; otherwise the qubit is entangled with the rest.
    for (size_t i : acts) {
        if (gens[i].letter(q) != gens[acts[0]].letter(q)) {
            throw StateError("qubit " + std::to_string(qubit) + " is still entangled");
        }
    }
    while (acts.size() > 1) {
        gens[acts.back()] = gens[acts.front()] * gens[acts.back()];
        acts = acting();
    }
    // The survivor must be replaceable by the group's own single-qubit
    // element on q; otherwise q is genuinely entangled.
    char single_letter = gens[acts[0]].letter(q);
    auto elem = set.project_onto_group(PauliOperator::single(n, qubit, single_letter));
    if (!elem) {
        throw StateError("qubit " + std::to_string(qubit) + " is still entangled");
    }
    gens[acts[0]] = *elem;

    std::vector<bool> keep(n, true);
    keep[q] = false;
    std::vector<PauliOperator> out;
    out.reserve(gens.size() - 1);
    for (size_t i = 0; i < gens.size(); ++i) {
        if (i != acts[0]) {
            out.push_back(gens[i].restricted(keep));
        }
    }
    std::vector<size_t> new_label(n, 0);
    size_t next = 1;
    for (size_t i = 0; i < n; ++i) {
        if (i != q) {
            new_label[i] = next++;
        }
    }
    return {GeneratorSet::unchecked(n - 1, std::move(out)), std::move(new_label)};
}

PauliOperator correction_frame(const GeneratorSet &set, const GeneratorSet &target) {
    size_t n = set.num_qubits();
    if (target.num_qubits() != n) {
        throw ValidationError("generator sets act on different qubit counts");
    }
    auto rows_a = set.canonical_rows();
    auto rows_b = target.canonical_rows();
    if (rows_a.size() != rows_b.size()) {
        throw FrameError("unsigned row spaces differ (rank mismatch)");
    }
    size_t r = rows_a.size();
    for (size_t i = 0; i < r; ++i) {
        if (rows_a[i].x_bits() != rows_b[i].x_bits() || rows_a[i].z_bits() != rows_b[i].z_bits()) {
            throw FrameError("unsigned row spaces differ");
        }
    }

    // Solve <row_i, P>_symplectic = b_i over the 2n unknowns (P.x|P.z),
    // where b_i flags a sign mismatch on canonical row i.
    std::vector<BitVec> eqs;  // each row: 2n coefficient bits + 1 rhs bit
    bool any_mismatch = false;
    for (size_t i = 0; i < r; ++i) {
        BitVec eq(2 * n + 1);
        // Anticommutation of P with row: <row.x, P.z> + <row.z, P.x>.
        for (size_t qq = 0; qq < n; ++qq) {
            eq.set(qq, rows_a[i].z_bit(qq));       // coefficient of P.x_q
            eq.set(n + qq, rows_a[i].x_bit(qq));   // coefficient of P.z_q
        }
        bool b = rows_a[i].phase() != rows_b[i].phase();
        any_mismatch |= b;
        eq.set(2 * n, b);
        eqs.push_back(std::move(eq));
    }
    if (!any_mismatch) {
        return PauliOperator(n);
    }

    // Gaussian elimination to particular solution + null-space basis.
    std::vector<size_t> pivot_col;
    size_t rank = 0;
    for (size_t col = 0; col < 2 * n && rank < eqs.size(); ++col) {
        size_t piv = rank;
        while (piv < eqs.size() && !eqs[piv].get(col)) {
            ++piv;
        }
        if (piv == eqs.size()) {
            continue;
        }
        std::swap(eqs[rank], eqs[piv]);
        for (size_t rr = 0; rr < eqs.size(); ++rr) {
            if (rr != rank && eqs[rr].get(col)) {
                eqs[rr] ^= eqs[rank];
            }
        }
        pivot_col.push_back(col);
        ++rank;
    }
    for (size_t rr = rank; rr < eqs.size(); ++rr) {
        if (eqs[rr].get(2 * n)) {
            throw FrameError("no sign-fixing Pauli exists");
        }
    }

    std::vector<size_t> free_cols;
    for (size_t col = 0; col < 2 * n; ++col) {
        if (std::find(pivot_col.begin(), pivot_col.end(), col) == pivot_col.end()) {
            free_cols.push_back(col);
        }
    }

    auto build = [&](uint64_t free_bits) {
        BitVec sol(2 * n);
        for (size_t fidx = 0; fidx < free_cols.size(); ++fidx) {
            if ((free_bits >> fidx) & 1u) {
                sol.set(free_cols[fidx], true);
            }
        }
        for (size_t i = 0; i < rank; ++i) {
            bool v = eqs[i].get(2 * n);
            for (size_t fidx = 0; fidx < free_cols.size(); ++fidx) {
                if (((free_bits >> fidx) & 1u) && eqs[i].get(free_cols[fidx])) {
                    v = !v;
                }
            }
            sol.set(pivot_col[i], v);
        }
        BitVec x(n), z(n);
        for (size_t qq = 0; qq < n; ++qq) {
            x.set(qq, sol.get(qq));
            z.set(qq, sol.get(n + qq));
        }
        return PauliOperator(std::move(x), std::move(z), 0);
    };

    // Enumerate the solution space for the minimum-weight frame when it is
    // small; otherwise settle for the particular solution.
    size_t fn = free_cols.size();
    if (fn > 16) {
        return build(0);
    }
    PauliOperator best = build(0);
    // Letter order I < X < Z < Y, matching the x + 2z encoding.
    auto lex_key = [](const PauliOperator &p) {
        std::string k;
        k.reserve(p.num_qubits());
        for (size_t qq = 0; qq < p.num_qubits(); ++qq) {
            k.push_back(static_cast<char>('0' + (p.x_bit(qq) ? 1 : 0) + (p.z_bit(qq) ? 2 : 0)));
        }
        return k;
    };
    for (uint64_t fb = 1; fb < (uint64_t{1} << fn); ++fb) {
        PauliOperator cand = build(fb);
        if (cand.weight() < best.weight() ||
            (cand.weight() == best.weight() && lex_key(cand) < lex_key(best))) {
            best = cand;
        }
    }
    return best;
}

std::pair<GeneratorSet, std::vector<MeasurementRecord>> evolve_sequence(
    const GeneratorSet &set, const std::vector<MeasurementSpec> &specs, BitSource &bits) {
    for (size_t i = 0; i < specs.size(); ++i) {
        for (size_t j = i + 1; j < specs.size(); ++j) {
            if (specs[i].qubit == specs[j].qubit) {
                throw ValidationError("measurement sequence repeats qubit " +
                                      std::to_string(specs[i].qubit));
            }
        }
    }
    GeneratorSet cur = set;
    std::vector<MeasurementRecord> records;
    records.reserve(specs.size());
    for (const auto &spec : specs) {
        auto [next, rec] = measure(cur, spec, bits);
        cur = std::move(next);
        records.push_back(rec);
    }
    return {std::move(cur), std::move(records)};
}

}  // namespace cqec
