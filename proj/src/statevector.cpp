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

#include "cqec/statevector.hpp"

#include <cmath>

namespace cqec {

namespace {

constexpr std::complex<double> kIPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

void check_size(size_t n) {
    if (n > kMaxOracleQubits) {
        throw ValidationError("statevector oracle capped at " +
                              std::to_string(kMaxOracleQubits) + " qubits, got " +
                              std::to_string(n));
    }
}

// Bit of qubit q (1-based) inside a basis index; qubit 1 = MSB.
inline bool qubit_bit(size_t index, size_t q, size_t n) {
    return (index >> (n - q)) & 1u;
}

}  // namespace

StateVector::StateVector(size_t n) : n_(n), amps_(Eigen::VectorXcd::Zero(ptrdiff_t{1} << n)) {
    check_size(n);
    amps_(0) = 1.0;
}

StateVector::StateVector(size_t n, Eigen::VectorXcd amplitudes)
    : n_(n), amps_(std::move(amplitudes)) {
    check_size(n);
    if (amps_.size() != (ptrdiff_t{1} << n)) {
        throw ValidationError("amplitude vector must have 2^n entries");
    }
    if (std::abs(amps_.norm() - 1.0) > 1e-10) {
        throw ValidationError("statevector is not normalized");
    }
}

bool StateVector::equals_up_to_phase(const StateVector &other, double tol) const {
    if (n_ != other.n_) {
        return false;
    }
    std::complex<double> overlap = amps_.dot(other.amps_);
    return std::abs(std::abs(overlap) - 1.0) < tol;
}

StateVector prepare_cluster(const Graph &g, std::optional<MessageQubit> message) {
    size_t n = g.num_vertices();
    check_size(n);
    if (message) {
        if (message->index < 1 || message->index > n) {
            throw ValidationError("message qubit out of range");
        }
        double norm2 = std::norm(message->alpha) + std::norm(message->beta);
        if (std::abs(norm2 - 1.0) > 1e-10) {
            throw ValidationError("message amplitudes are not normalized");
        }
    }
    size_t dim = size_t{1} << n;
    Eigen::VectorXcd amps(static_cast<ptrdiff_t>(dim));
    double plus_amp = std::pow(1.0 / std::sqrt(2.0), message ? n - 1 : n);
    for (size_t idx = 0; idx < dim; ++idx) {
        std::complex<double> a = plus_amp;
        if (message) {
            a *= qubit_bit(idx, message->index, n) ? message->beta : message->alpha;
        }
        amps(static_cast<ptrdiff_t>(idx)) = a;
    }
    for (auto [i, j] : g.edges()) {
        for (size_t idx = 0; idx < dim; ++idx) {
            if (qubit_bit(idx, i, n) && qubit_bit(idx, j, n)) {
                amps(static_cast<ptrdiff_t>(idx)) = -amps(static_cast<ptrdiff_t>(idx));
            }
        }
    }
    return StateVector(n, std::move(amps));
}

StateVector apply_pauli(const StateVector &sv, const PauliOperator &p) {
    size_t n = sv.num_qubits();
    if (p.num_qubits() != n) {
        throw ValidationError("operator length mismatch");
    }
    // Globally the operator is i^(phase + #Y) * X^x Z^z with Z acting first.
    size_t x_mask = 0, z_mask = 0;
    unsigned y_count = 0;
    for (size_t q = 1; q <= n; ++q) {
        if (p.x_bit(q - 1)) {
            x_mask |= size_t{1} << (n - q);
        }
        if (p.z_bit(q - 1)) {
            z_mask |= size_t{1} << (n - q);
        }
        if (p.letter(q - 1) == 'Y') {
            ++y_count;
        }
    }
    std::complex<double> global = kIPowers[(p.phase() + y_count) & 3u];
    size_t dim = size_t{1} << n;
    Eigen::VectorXcd out(static_cast<ptrdiff_t>(dim));
    for (size_t idx = 0; idx < dim; ++idx) {
        std::complex<double> a = sv.amplitudes()(static_cast<ptrdiff_t>(idx)) * global;
        if (std::popcount(idx & z_mask) & 1u) {
            a = -a;
        }
        out(static_cast<ptrdiff_t>(idx ^ x_mask)) = a;
    }
    return StateVector(n, std::move(out));
}

bool is_stabilized(const StateVector &sv, const PauliOperator &p, double tol) {
    StateVector applied = apply_pauli(sv, p);
    return (applied.amplitudes() - sv.amplitudes()).norm() < tol;
}

ProjectiveResult measure_pauli(const StateVector &sv, char basis, size_t qubit,
                               std::optional<int> forced, BitSource *bits) {
    size_t n = sv.num_qubits();
    if (qubit < 1 || qubit > n) {
        throw ValidationError("measured qubit out of range");
    }
    PauliOperator obs = PauliOperator::single(n, qubit, basis);
    StateVector applied = apply_pauli(sv, obs);

    // P_s = (I + (-1)^s B) / 2
    Eigen::VectorXcd plus = 0.5 * (sv.amplitudes() + applied.amplitudes());
    Eigen::VectorXcd minus = 0.5 * (sv.amplitudes() - applied.amplitudes());
    double p0 = plus.squaredNorm();
    double p1 = minus.squaredNorm();

    int s;
    if (forced) {
        s = *forced;
        double p = s == 0 ? p0 : p1;
        if (p < 1e-12) {
            throw ValidationError("forced outcome has zero probability");
        }
    } else if (p0 > 1.0 - 1e-12) {
        s = 0;
    } else if (p0 < 1e-12) {
        s = 1;
    } else {
        if (bits == nullptr) {
            throw ValidationError("random measurement outcome requires a bit source");
        }
        // Projective outcomes on stabilizer states are fair coins; assert
        // rather than resample a biased distribution.
        if (std::abs(p0 - 0.5) > 1e-9) {
            throw StateError("non-stabilizer measurement probability encountered");
        }
        s = bits->next_bit();
    }
    Eigen::VectorXcd &chosen = s == 0 ? plus : minus;
    double p = s == 0 ? p0 : p1;
    chosen /= std::sqrt(p);
    return {StateVector(n, std::move(chosen)), s, p};
}

bool equivalence_check(const GeneratorSet &set, const StateVector &sv, double tol) {
    if (set.num_qubits() != sv.num_qubits()) {
        throw ValidationError("generator set and statevector qubit counts differ");
    }
    for (const auto &g : set) {
        if (!is_stabilized(sv, g, tol)) {
            return false;
        }
    }
    return true;
}

StateVector factor_out_x_eigenstate(const StateVector &sv, size_t qubit, int s) {
    size_t n = sv.num_qubits();
    if (qubit < 1 || qubit > n) {
        throw ValidationError("qubit out of range");
    }
    size_t dim_out = size_t{1} << (n - 1);
    size_t lo_bits = n - qubit;  // index bits of qubits qubit+1..n
    double sign = s == 0 ? 1.0 : -1.0;
    double inv_r2 = 1.0 / std::sqrt(2.0);
    Eigen::VectorXcd out(static_cast<ptrdiff_t>(dim_out));
    for (size_t idx = 0; idx < dim_out; ++idx) {
        size_t hi = idx >> lo_bits;
        size_t lo = idx & ((size_t{1} << lo_bits) - 1);
        size_t base = (hi << (lo_bits + 1)) | lo;
        size_t with_one = base | (size_t{1} << lo_bits);
        // <+/-|_qubit psi
        out(static_cast<ptrdiff_t>(idx)) =
            inv_r2 * (sv.amplitudes()(static_cast<ptrdiff_t>(base)) +
                      sign * sv.amplitudes()(static_cast<ptrdiff_t>(with_one)));
    }
    double nrm = out.norm();
    if (std::abs(nrm - 1.0) > 1e-9) {
        throw StateError("qubit " + std::to_string(qubit) +
                         " is not in the requested X eigenstate");
    }
    out /= nrm;
    return StateVector(n - 1, std::move(out));
}

}  // namespace cqec
