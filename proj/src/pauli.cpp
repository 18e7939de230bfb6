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

#include "cqec/pauli.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace cqec {

namespace {

// i-exponent of the scalar picked up when multiplying two single-qubit
// letters: P(a) * P(b) = i^f * P(a^b), letters encoded as x + 2z.
constexpr int single_letter_phase(unsigned a, unsigned b) {
    auto is_y = [](unsigned v) { return v == 3 ? 1 : 0; };
    unsigned z1 = (a >> 1) & 1u;
    unsigned x2 = b & 1u;
    return static_cast<int>((is_y(a) + is_y(b) + 2 * (z1 & x2) + 4 - is_y(a ^ b)) % 4);
}

constexpr std::array<uint8_t, 16> make_phase_table() {
    std::array<uint8_t, 16> t{};
    for (unsigned a = 0; a < 4; ++a) {
        for (unsigned b = 0; b < 4; ++b) {
            t[(a << 2) | b] = static_cast<uint8_t>(single_letter_phase(a, b));
        }
    }
    return t;
}

constexpr auto kPhaseTable = make_phase_table();

}  // namespace

PauliOperator::PauliOperator(BitVec x, BitVec z, uint8_t phase)
    : x_(std::move(x)), z_(std::move(z)), phase_(static_cast<uint8_t>(phase & 3u)) {
    if (x_.size() != z_.size()) {
        throw ValidationError("x and z bit vectors differ in length");
    }
}

PauliOperator PauliOperator::single(size_t n, size_t qubit, char letter) {
    if (qubit < 1 || qubit > n) {
        throw ValidationError("qubit index " + std::to_string(qubit) + " out of range 1.." +
                              std::to_string(n));
    }
    PauliOperator p(n);
    size_t q = qubit - 1;
    switch (letter) {
        case 'X':
            p.x_.set(q, true);
            break;
        case 'Z':
            p.z_.set(q, true);
            break;
        case 'Y':
            p.x_.set(q, true);
            p.z_.set(q, true);
            break;
        default:
            throw ValidationError(std::string("unknown Pauli letter '") + letter + "'");
    }
    return p;
}

PauliOperator PauliOperator::parse(std::string_view text, size_t n) {
    size_t pos = 0;
    uint8_t phase = 0;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        bool minus = text[pos] == '-';
        ++pos;
        bool imag = pos < text.size() && text[pos] == 'i';
        if (imag) {
            ++pos;
        }
        phase = static_cast<uint8_t>((minus ? 2 : 0) + (imag ? 1 : 0));
    } else if (pos < text.size() && text[pos] == 'i') {
        throw ParseError("malformed sign at position 1: bare 'i' (use '+i' or '-i')");
    }
    if (text.size() - pos != n) {
        throw ParseError("expected " + std::to_string(n) + " Pauli letters, got " +
                         std::to_string(text.size() - pos));
    }
    PauliOperator p(n);
    p.phase_ = phase;
    for (size_t q = 0; q < n; ++q) {
        char c = text[pos + q];
        switch (c) {
            case 'I':
                break;
            case 'X':
                p.x_.set(q, true);
                break;
            case 'Z':
                p.z_.set(q, true);
                break;
            case 'Y':
                p.x_.set(q, true);
                p.z_.set(q, true);
                break;
            default:
                throw ParseError(std::string("illegal character '") + c + "' at position " +
                                 std::to_string(pos + q + 1));
        }
    }
    return p;
}

std::string PauliOperator::str() const {
    static constexpr const char *kSigns[4] = {"+", "+i", "-", "-i"};
    std::string out = kSigns[phase_];
    out.reserve(out.size() + num_qubits());
    for (size_t q = 0; q < num_qubits(); ++q) {
        out.push_back(letter(q));
    }
    return out;
}

size_t PauliOperator::weight() const {
    size_t w = 0;
    for (size_t q = 0; q < num_qubits(); ++q) {
        if (x_.get(q) || z_.get(q)) {
            ++w;
        }
    }
    return w;
}

bool PauliOperator::commutes_with(const PauliOperator &other) const {
    if (num_qubits() != other.num_qubits()) {
        throw ValidationError("operator length mismatch");
    }
    return !(parity_and(x_, other.z_) ^ parity_and(z_, other.x_));
}

PauliOperator operator*(const PauliOperator &p, const PauliOperator &q) {
    if (p.num_qubits() != q.num_qubits()) {
        throw ValidationError("operator length mismatch");
    }
    unsigned phase = p.phase_ + q.phase_;
    for (size_t i = 0; i < p.num_qubits(); ++i) {
        unsigned a = (p.x_.get(i) ? 1u : 0u) | (p.z_.get(i) ? 2u : 0u);
        unsigned b = (q.x_.get(i) ? 1u : 0u) | (q.z_.get(i) ? 2u : 0u);
        phase += kPhaseTable[(a << 2) | b];
    }
    PauliOperator out(p.num_qubits());
    out.x_ = p.x_ ^ q.x_;
    out.z_ = p.z_ ^ q.z_;
    out.phase_ = static_cast<uint8_t>(phase & 3u);
    return out;
}

PauliOperator PauliOperator::conjugated_by(const PauliOperator &c) const {
    PauliOperator out = *this;
    if (!commutes_with(c)) {
        out.phase_ = static_cast<uint8_t>((out.phase_ + 2) & 3u);
    }
    return out;
}

PauliOperator PauliOperator::restricted(const std::vector<bool> &keep) const {
    size_t m = static_cast<size_t>(std::count(keep.begin(), keep.end(), true));
    BitVec x(m), z(m);
    size_t j = 0;
    for (size_t q = 0; q < num_qubits(); ++q) {
        if (keep[q]) {
            x.set(j, x_.get(q));
            z.set(j, z_.get(q));
            ++j;
        }
    }
    return PauliOperator(std::move(x), std::move(z), phase_);
}

size_t symplectic_rank(const std::vector<PauliOperator> &ops) {
    if (ops.empty()) {
        return 0;
    }
    size_t n = ops[0].num_qubits();
    std::vector<BitVec> rows;
    rows.reserve(ops.size());
    for (const auto &p : ops) {
        if (p.num_qubits() != n) {
            throw ValidationError("operator length mismatch");
        }
        BitVec row(2 * n);
        for (size_t q = 0; q < n; ++q) {
            row.set(q, p.x_bit(q));
            row.set(n + q, p.z_bit(q));
        }
        rows.push_back(std::move(row));
    }
    return gf2_rank(std::move(rows));
}

GeneratorSet::GeneratorSet(size_t n, std::vector<PauliOperator> generators)
    : n_(n), gens_(std::move(generators)) {
    for (size_t i = 0; i < gens_.size(); ++i) {
        if (gens_[i].num_qubits() != n_) {
            throw ValidationError("generator " + std::to_string(i + 1) + " has wrong qubit count");
        }
        if (!gens_[i].has_real_sign()) {
            throw ValidationError("generator " + std::to_string(i + 1) + " (" + gens_[i].str() +
                                  ") has imaginary sign");
        }
        for (size_t j = i + 1; j < gens_.size(); ++j) {
            if (!gens_[i].commutes_with(gens_[j])) {
                throw ValidationError("generators " + std::to_string(i + 1) + " and " +
                                      std::to_string(j + 1) + " anticommute");
            }
        }
    }
    if (symplectic_rank(gens_) != gens_.size()) {
        throw ValidationError("generators are not GF(2)-independent");
    }
}

GeneratorSet GeneratorSet::unchecked(size_t n, std::vector<PauliOperator> generators) {
    GeneratorSet s(n);
    s.gens_ = std::move(generators);
    return s;
}

GeneratorSet GeneratorSet::parse(std::string_view text) {
    std::vector<PauliOperator> gens;
    size_t n = 0;
    std::istringstream in{std::string(text)};
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        auto begin = line.find_first_not_of(" \t\r");
        if (begin == std::string::npos) {
            continue;
        }
        auto end = line.find_last_not_of(" \t\r");
        std::string tok = line.substr(begin, end - begin + 1);
        if (gens.empty()) {
            size_t letters = tok.size();
            if (!tok.empty() && (tok[0] == '+' || tok[0] == '-')) {
                letters -= (tok.size() > 1 && tok[1] == 'i') ? 2 : 1;
            }
            n = letters;
        }
        try {
            gens.push_back(PauliOperator::parse(tok, n));
        } catch (const ParseError &e) {
            throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return GeneratorSet(n, std::move(gens));
}

std::string GeneratorSet::str() const {
    std::string out;
    for (const auto &g : gens_) {
        out += g.str();
        out += '\n';
    }
    return out;
}

std::vector<PauliOperator> GeneratorSet::canonical_rows() const {
    std::vector<PauliOperator> rows = gens_;
    auto bit = [this](const PauliOperator &p, size_t col) {
        return col < n_ ? p.x_bit(col) : p.z_bit(col - n_);
    };
    size_t rank = 0;
    for (size_t col = 0; col < 2 * n_ && rank < rows.size(); ++col) {
        size_t piv = rank;
        while (piv < rows.size() && !bit(rows[piv], col)) {
            ++piv;
        }
        if (piv == rows.size()) {
            continue;
        }
        std::swap(rows[rank], rows[piv]);
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r != rank && bit(rows[r], col)) {
                rows[r] = rows[rank] * rows[r];
            }
        }
        ++rank;
    }
    rows.resize(rank, PauliOperator(n_));
    return rows;
}

namespace {

// Reduces p by canonical rows; the residue is identity-shaped iff p's
// (x|z) row lies in the span. All operators involved commute pairwise,
// so multiplication order does not affect the accumulated phase.
PauliOperator reduce_by_rows(const std::vector<PauliOperator> &rows, PauliOperator p, size_t n) {
    auto bit = [n](const PauliOperator &q, size_t col) {
        return col < n ? q.x_bit(col) : q.z_bit(col - n);
    };
    for (const auto &row : rows) {
        size_t piv = 2 * n;
        for (size_t col = 0; col < 2 * n; ++col) {
            if (bit(row, col)) {
                piv = col;
                break;
            }
        }
        if (piv < 2 * n && bit(p, piv)) {
            p = row * p;
        }
    }
    return p;
}

}  // namespace

bool GeneratorSet::contains(const PauliOperator &p) const {
    PauliOperator res = reduce_by_rows(canonical_rows(), p, n_);
    return res.is_identity() && res.phase() == 0;
}

bool GeneratorSet::contains_unsigned(const PauliOperator &p) const {
    PauliOperator res = reduce_by_rows(canonical_rows(), p.with_phase(0), n_);
    return res.is_identity();
}

std::optional<PauliOperator> GeneratorSet::project_onto_group(const PauliOperator &p) const {
    // Reduce the unsigned row of p, accumulating the product of the rows
    // used; that product is the group element matching p's (x|z) row and
    // carries the group's own sign. Canonical rows commute pairwise, so
    // the accumulation order is immaterial.
    PauliOperator cur = p.with_phase(0);
    PauliOperator acc(n_);
    auto rows = canonical_rows();
    auto bit = [this](const PauliOperator &q, size_t col) {
        return col < n_ ? q.x_bit(col) : q.z_bit(col - n_);
    };
    for (const auto &row : rows) {
        size_t piv = 2 * n_;
        for (size_t col = 0; col < 2 * n_; ++col) {
            if (bit(row, col)) {
                piv = col;
                break;
            }
        }
        if (piv < 2 * n_ && bit(cur, piv)) {
            cur = row * cur;
            acc = acc * row;
        }
    }
    if (!cur.is_identity()) {
        return std::nullopt;
    }
    return acc;
}

GeneratorSet GeneratorSet::conjugated_by(const PauliOperator &c) const {
    std::vector<PauliOperator> gens;
    gens.reserve(gens_.size());
    for (const auto &g : gens_) {
        gens.push_back(g.conjugated_by(c));
    }
    return GeneratorSet::unchecked(n_, std::move(gens));
}

bool group_equal(const GeneratorSet &a, const GeneratorSet &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw ValidationError("generator sets act on different qubit counts");
    }
    return a.canonical_rows() == b.canonical_rows();
}

bool same_row_space(const GeneratorSet &a, const GeneratorSet &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw ValidationError("generator sets act on different qubit counts");
    }
    auto strip = [](const GeneratorSet &s) {
        std::vector<PauliOperator> out;
        out.reserve(s.size());
        for (const auto &g : s) {
            out.push_back(g.with_phase(0));
        }
        return GeneratorSet::unchecked(s.num_qubits(), std::move(out)).canonical_rows();
    };
    return strip(a) == strip(b);
}

}  // namespace cqec
