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

#ifndef CQEC_PAULI_HPP
#define CQEC_PAULI_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cqec/bitvec.hpp"
#include "cqec/errors.hpp"

namespace cqec {

/// Signed n-qubit Pauli operator in symplectic GF(2) form.
///
/// The operator is i^phase * P_1 x P_2 x ... x P_n where each letter
/// P_j in {I,X,Y,Z} is encoded by the bit pair (x_j, z_j): I=(0,0),
/// X=(1,0), Z=(0,1), Y=(1,1). The phase is the exponent of i relative
/// to the literal letters, so "+ZYZY" carries phase 0 and "-Y" phase 2.
/// Qubits are 1-based in all text, 0-based in the bit vectors.
class PauliOperator {
  public:
    explicit PauliOperator(size_t n) : x_(n), z_(n), phase_(0) {}

    PauliOperator(BitVec x, BitVec z, uint8_t phase);

    /// Single-letter operator: `letter` in {X,Y,Z} on 1-based `qubit`.
    static PauliOperator single(size_t n, size_t qubit, char letter);

    /// Parses `[+|-|+i|-i]?[IXYZ]{n}`, leftmost letter = qubit 1.
    static PauliOperator parse(std::string_view text, size_t n);

    /// Canonical string form; inverse of parse.
    std::string str() const;

    size_t num_qubits() const { return x_.size(); }

    uint8_t phase() const { return phase_; }

    /// True for Hermitian sign +/-1 (phase 0 or 2).
    bool has_real_sign() const { return (phase_ & 1u) == 0; }

    /// +1 or -1; only meaningful when has_real_sign().
    int sign() const { return phase_ == 0 ? +1 : -1; }

    bool x_bit(size_t q) const { return x_.get(q); }
    bool z_bit(size_t q) const { return z_.get(q); }
    const BitVec &x_bits() const { return x_; }
    const BitVec &z_bits() const { return z_; }

    char letter(size_t q) const {
        static constexpr char kLetters[4] = {'I', 'X', 'Z', 'Y'};
        return kLetters[(x_.get(q) ? 1 : 0) | (z_.get(q) ? 2 : 0)];
    }

    bool is_identity() const { return !x_.any() && !z_.any(); }

    /// Number of qubits with a non-identity letter.
    size_t weight() const;

    bool commutes_with(const PauliOperator &other) const;

    /// Exact product with accumulated i-powers from per-qubit reordering.
    friend PauliOperator operator*(const PauliOperator &p, const PauliOperator &q);

    /// P -> C P C^dagger for Pauli C: flips the sign iff they anticommute.
    PauliOperator conjugated_by(const PauliOperator &c) const;

    /// Same operator with phase forced to the given value.
    PauliOperator with_phase(uint8_t phase) const { return PauliOperator(x_, z_, phase); }

    /// Restriction to the qubits where keep[q] is true.
    PauliOperator restricted(const std::vector<bool> &keep) const;

    bool operator==(const PauliOperator &other) const = default;

  private:
    BitVec x_;
    BitVec z_;
    uint8_t phase_;
};

inline PauliOperator multiply(const PauliOperator &p, const PauliOperator &q) {
    return p * q;
}

inline bool commutes(const PauliOperator &p, const PauliOperator &q) {
    return p.commutes_with(q);
}

inline size_t weight(const PauliOperator &p) {
    return p.weight();
}

/// GF(2) rank of the stacked (x|z) rows; phases ignored.
size_t symplectic_rank(const std::vector<PauliOperator> &ops);

/// Ordered list of independent, mutually commuting, +-1-signed Paulis:
/// a presentation of a stabilizer group.
class GeneratorSet {
  public:
    /// Validates all invariants; throws ValidationError on failure.
    GeneratorSet(size_t n, std::vector<PauliOperator> generators);

    /// Empty set on n qubits.
    explicit GeneratorSet(size_t n) : n_(n) {}

    /// Skips invariant validation; for internal callers that guarantee them.
    static GeneratorSet unchecked(size_t n, std::vector<PauliOperator> generators);

    /// Parses one Pauli per line; '#' starts a comment; blank lines skipped.
    /// Qubit count inferred from the first generator.
    static GeneratorSet parse(std::string_view text);

    std::string str() const;

    size_t num_qubits() const { return n_; }
    size_t size() const { return gens_.size(); }
    bool empty() const { return gens_.empty(); }
    const PauliOperator &operator[](size_t i) const { return gens_[i]; }
    const std::vector<PauliOperator> &generators() const { return gens_; }

    auto begin() const { return gens_.begin(); }
    auto end() const { return gens_.end(); }

    /// Sign-carrying reduced row-echelon form over columns x_1..x_n,z_1..z_n.
    /// Canonical: two sets generate the same signed group iff their
    /// canonical rows are identical.
    std::vector<PauliOperator> canonical_rows() const;

    /// Signed membership: p is a product of generators, including phase.
    /// Requires p to commute with every generator.
    bool contains(const PauliOperator &p) const;

    /// Membership of the (x|z) row in the unsigned row space.
    bool contains_unsigned(const PauliOperator &p) const;

    /// The signed product of generators whose (x|z) rows combine to p's,
    /// or nullopt if p is outside the row space. Phases of p are ignored;
    /// the returned operator carries the group's own sign.
    std::optional<PauliOperator> project_onto_group(const PauliOperator &p) const;

    /// Conjugates every generator by c.
    GeneratorSet conjugated_by(const PauliOperator &c) const;

  private:
    size_t n_ = 0;
    std::vector<PauliOperator> gens_;
};

/// True iff the signed groups generated by a and b are identical.
bool group_equal(const GeneratorSet &a, const GeneratorSet &b);

/// True iff the unsigned row spaces coincide.
bool same_row_space(const GeneratorSet &a, const GeneratorSet &b);

}  // namespace cqec

#endif
