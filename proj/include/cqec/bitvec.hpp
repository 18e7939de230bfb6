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

#ifndef CQEC_BITVEC_HPP
#define CQEC_BITVEC_HPP

#include <bit>
#include <cstdint>
#include <cstddef>
#include <vector>

namespace cqec {

/// Fixed-length GF(2) vector packed into 64-bit words.
/// Row operations (xor, inner products) are word-parallel.
class BitVec {
  public:
    BitVec() = default;
    explicit BitVec(size_t n) : n_(n), words_((n + 63) / 64, 0) {}

    size_t size() const { return n_; }

    bool get(size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }

    void set(size_t i, bool v) {
        uint64_t mask = uint64_t{1} << (i & 63);
        if (v) {
            words_[i >> 6] |= mask;
        } else {
            words_[i >> 6] &= ~mask;
        }
    }

    void flip(size_t i) { words_[i >> 6] ^= uint64_t{1} << (i & 63); }

    BitVec &operator^=(const BitVec &other) {
        for (size_t w = 0; w < words_.size(); ++w) {
            words_[w] ^= other.words_[w];
        }
        return *this;
    }

    friend BitVec operator^(BitVec a, const BitVec &b) {
        a ^= b;
        return a;
    }

    bool operator==(const BitVec &other) const = default;

    bool any() const {
        for (uint64_t w : words_) {
            if (w) {
                return true;
            }
        }
        return false;
    }

    size_t popcount() const {
        size_t c = 0;
        for (uint64_t w : words_) {
            c += static_cast<size_t>(std::popcount(w));
        }
        return c;
    }

    /// Parity of the AND with another vector: <a, b> over GF(2).
    friend bool parity_and(const BitVec &a, const BitVec &b) {
        uint64_t acc = 0;
        for (size_t w = 0; w < a.words_.size(); ++w) {
            acc ^= a.words_[w] & b.words_[w];
        }
        return std::popcount(acc) & 1u;
    }

    /// Index of the lowest set bit, or size() if none.
    size_t lowest_set() const {
        for (size_t w = 0; w < words_.size(); ++w) {
            if (words_[w]) {
                return (w << 6) + static_cast<size_t>(std::countr_zero(words_[w]));
            }
        }
        return n_;
    }

  private:
    size_t n_ = 0;
    std::vector<uint64_t> words_;
};

/// GF(2) rank of a list of rows (destructive elimination on a copy).
inline size_t gf2_rank(std::vector<BitVec> rows) {
    size_t rank = 0;
    size_t cols = rows.empty() ? 0 : rows[0].size();
    for (size_t col = 0; col < cols && rank < rows.size(); ++col) {
        size_t piv = rank;
        while (piv < rows.size() && !rows[piv].get(col)) {
            ++piv;
        }
        if (piv == rows.size()) {
            continue;
        }
        std::swap(rows[rank], rows[piv]);
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r != rank && rows[r].get(col)) {
                rows[r] ^= rows[rank];
            }
        }
        ++rank;
    }
    return rank;
}

/// Reduced row-echelon basis of the span of `rows` (zero rows removed).
inline std::vector<BitVec> gf2_rref(std::vector<BitVec> rows) {
    size_t rank = 0;
    size_t cols = rows.empty() ? 0 : rows[0].size();
    for (size_t col = 0; col < cols && rank < rows.size(); ++col) {
        size_t piv = rank;
        while (piv < rows.size() && !rows[piv].get(col)) {
            ++piv;
        }
        if (piv == rows.size()) {
            continue;
        }
        std::swap(rows[rank], rows[piv]);
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r != rank && rows[r].get(col)) {
                rows[r] ^= rows[rank];
            }
        }
        ++rank;
    }
    rows.resize(rank, BitVec(cols));
    return rows;
}

/// True iff the two row lists span the same subspace.
inline bool gf2_same_span(const std::vector<BitVec> &a, const std::vector<BitVec> &b) {
    return gf2_rref(a) == gf2_rref(b);
}

}  // namespace cqec

#endif
