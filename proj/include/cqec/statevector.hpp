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

#ifndef CQEC_STATEVECTOR_HPP
#define CQEC_STATEVECTOR_HPP

#include <Eigen/Dense>

#include <complex>
#include <optional>

#include "cqec/graph.hpp"
#include "cqec/measurement.hpp"
#include "cqec/pauli.hpp"

namespace cqec {

/// Hard cap on oracle size: 2^12 dense amplitudes.
inline constexpr size_t kMaxOracleQubits = 12;

/// Dense 2^n-amplitude state, the ground truth the tableau engine is
/// checked against. Basis index bit convention: qubit 1 is the most
/// significant bit, matching the leftmost-is-qubit-1 Pauli strings.
class StateVector {
  public:
    /// |0...0>
    explicit StateVector(size_t n);

    StateVector(size_t n, Eigen::VectorXcd amplitudes);

    size_t num_qubits() const { return n_; }
    const Eigen::VectorXcd &amplitudes() const { return amps_; }

    std::complex<double> amplitude(size_t basis_index) const { return amps_(basis_index); }

    double norm() const { return amps_.norm(); }

    /// True iff the states coincide up to a global unit phase.
    bool equals_up_to_phase(const StateVector &other, double tol = 1e-9) const;

    bool operator==(const StateVector &other) const = default;

  private:
    size_t n_;
    Eigen::VectorXcd amps_;
};

/// Optional replacement of one |+> by a message state alpha|0>+beta|1>.
struct MessageQubit {
    size_t index;  // 1-based
    std::complex<double> alpha;
    std::complex<double> beta;
};

/// Every qubit in |+> (except the optional message qubit), then one CZ
/// per edge of g.
StateVector prepare_cluster(const Graph &g, std::optional<MessageQubit> message = {});

/// Exact action of a signed Pauli, including phase.
StateVector apply_pauli(const StateVector &sv, const PauliOperator &p);

/// True iff ||P|psi> - |psi>|| < tol.
bool is_stabilized(const StateVector &sv, const PauliOperator &p, double tol = 1e-9);

struct ProjectiveResult {
    StateVector state;
    int outcome;        // s: 0 <-> +1 eigenspace, 1 <-> -1
    double probability; // Born probability of that outcome
};

/// Projects onto the (-1)^s eigenspace of the single-qubit observable and
/// renormalizes. Unforced outcomes need `bits` unless the measurement is
/// deterministic; forcing a zero-probability outcome throws.
ProjectiveResult measure_pauli(const StateVector &sv, char basis, size_t qubit,
                               std::optional<int> forced = {}, BitSource *bits = nullptr);

/// True iff sv is a +1 eigenstate of every generator. With set.size() == n
/// this pins sv up to global phase.
bool equivalence_check(const GeneratorSet &set, const StateVector &sv, double tol = 1e-9);

/// Factors out a qubit known to be in the (-1)^s X eigenstate |+/->,
/// returning the state of the remaining qubits. Throws StateError if the
/// qubit is entangled with the rest.
StateVector factor_out_x_eigenstate(const StateVector &sv, size_t qubit, int s);

}  // namespace cqec

#endif
