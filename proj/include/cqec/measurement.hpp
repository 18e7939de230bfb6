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

#ifndef CQEC_MEASUREMENT_HPP
#define CQEC_MEASUREMENT_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cqec/pauli.hpp"

namespace cqec {

/// Seedable source of fair bits; injected so runs are reproducible.
class BitSource {
  public:
    explicit BitSource(uint64_t seed = 0) : rng_(seed) {}

    int next_bit() { return static_cast<int>(rng_() & 1u); }

  private:
    std::mt19937_64 rng_;
};

/// A single-qubit Pauli measurement request.
struct MeasurementSpec {
    size_t qubit;  // 1-based
    char basis;    // 'X', 'Y' or 'Z'
    std::optional<int> forced_outcome;  // honored only for random outcomes
};

/// Outcome s: 0 <-> eigenvalue +1, 1 <-> eigenvalue -1.
struct MeasurementRecord {
    size_t qubit;
    char basis;
    int outcome;
    bool deterministic;

    std::string to_json() const;
};

/// Parses one `<qubit> <X|Y|Z> [<0|1>]` spec per line; '#' comments allowed.
std::vector<MeasurementSpec> parse_measurement_script(std::string_view text);

/// Measures the observable spec.basis on spec.qubit.
///
/// If some generators anticommute with the observable M, the lowest-index
/// one becomes the pivot (overridable for equivalence testing), is
/// multiplied into every other anticommuting generator, and is replaced by
/// (-1)^s M with s sampled (or forced). Otherwise the outcome is fixed by
/// the group: s solves (-1)^s M = product of generators; the set is
/// returned unchanged. If M commutes with everything but lies outside the
/// row space (underdetermined set), (-1)^s M is appended as a new
/// generator with s random.
std::pair<GeneratorSet, MeasurementRecord> measure(const GeneratorSet &set,
                                                   const MeasurementSpec &spec, BitSource &bits,
                                                   std::optional<size_t> pivot_override = {});

/// Indices (0-based) of generators anticommuting with the spec observable;
/// the valid pivot choices for `measure`.
std::vector<size_t> anticommuting_indices(const GeneratorSet &set, const MeasurementSpec &spec);

struct DiscardResult {
    GeneratorSet set;
    /// new_label[q-1] is the 1-based new label of old qubit q, 0 for the
    /// discarded qubit.
    std::vector<size_t> new_label;
};

/// Removes a disentangled qubit: the group must contain a single-qubit
/// generator on it (the state just measured). That generator is removed,
/// the qubit's column deleted and remaining labels compacted.
DiscardResult discard_qubit(const GeneratorSet &set, size_t qubit);

/// A Pauli frame P with P set P^dagger = target including signs. Requires
/// equal unsigned row spaces. Identity when the signs already match;
/// otherwise the minimum-weight solution (lexicographic tie-break).
PauliOperator correction_frame(const GeneratorSet &set, const GeneratorSet &target);

/// Folds `measure` over the specs (which must reference distinct qubits).
std::pair<GeneratorSet, std::vector<MeasurementRecord>> evolve_sequence(
    const GeneratorSet &set, const std::vector<MeasurementSpec> &specs, BitSource &bits);

}  // namespace cqec

#endif
