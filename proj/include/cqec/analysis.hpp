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

#ifndef CQEC_ANALYSIS_HPP
#define CQEC_ANALYSIS_HPP

#include <string>
#include <vector>

#include "cqec/pauli.hpp"
#include "cqec/synthesis.hpp"

namespace cqec {

/// Distances computed by minimum linearly dependent column subsets.
/// Convention: d scans the columns of the whole [Hx|Hz] block, dx the
/// columns of Hz (Z checks catch X errors), dz the columns of Hx.
struct ColumnDistances {
    int d;
    int dx;
    int dz;
};

/// Exhaustive subset search over column families; refuses above 14 columns
/// per family rather than approximating.
ColumnDistances distance_by_columns(const ParityCheckMatrix &h);

/// True quantum distance: minimum weight of a Pauli commuting with every
/// generator but outside the group. Exhaustive by increasing weight;
/// requires n <= 12.
int distance_brute_force(const GeneratorSet &s);

/// Quantum Hamming bound: sum_{j=0}^{t} C(n,j) 3^j 2^k <= 2^n.
bool hamming_bound(int n, int k, int t);

/// Syndrome of one single-qubit error against each generator.
struct SyndromeEntry {
    size_t qubit;  // 1-based
    char basis;
    std::vector<int> syndrome;  // one commutation bit per generator
};

struct SyndromeCollision {
    size_t qubit_a;
    char basis_a;
    size_t qubit_b;
    char basis_b;
};

/// Per-class single-error verdicts: an error class is correctable iff all
/// its single-qubit syndromes are distinct and nonzero, detectable iff
/// all nonzero (non-degenerate decoding).
struct CorrectabilityReport {
    size_t n;
    std::vector<SyndromeEntry> syndromes;
    bool x_correctable, y_correctable, z_correctable;
    bool x_detectable, y_detectable, z_detectable;
    /// All 3n single-qubit errors pairwise distinguishable and detectable.
    bool all_correctable;
    std::vector<SyndromeCollision> collisions;  // within-class collisions
};

CorrectabilityReport single_error_report(const GeneratorSet &s);

/// Summary of an [[n, k, d]] code.
struct CodeParameters {
    int n;
    int k;
    int d;             // brute-force (true) distance
    int d_columns;     // column-method distance on [Hx|Hz]
    int dx;
    int dz;
    bool hamming_t1;   // bound satisfied at t=1
    bool saturates_hamming;  // equality at t = (d-1)/2
};

struct AnalysisResult {
    CodeParameters params;
    CorrectabilityReport report;

    std::string to_json() const;
    std::string to_text() const;
};

/// Full report for an [[n,1]] code presentation.
AnalysisResult analyze_code(const GeneratorSet &s);

}  // namespace cqec

#endif
