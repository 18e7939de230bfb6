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

#ifndef CQEC_ERRORS_HPP
#define CQEC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cqec {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed textual input (Pauli strings, stabilizer files, scripts, JSON).
struct ParseError : Error {
    using Error::Error;
};

/// Structurally invalid arguments (length mismatch, out-of-range qubit,
/// broken generator-set invariants, self loops, ...).
struct ValidationError : Error {
    using Error::Error;
};

/// A forced outcome disagrees with a deterministically fixed one.
struct ContradictionError : Error {
    using Error::Error;
};

/// Operation requires a state property that does not hold
/// (e.g. discarding a qubit that is still entangled).
struct StateError : Error {
    using Error::Error;
};

/// No sign-fixing Pauli frame exists between two generator sets.
struct FrameError : Error {
    using Error::Error;
};

/// No admissible adjacency matrix exists for the requested code.
struct SynthesisInfeasibleError : Error {
    using Error::Error;
};

/// Synthesis produced a cluster whose post-measurement group does not
/// match the requested code.
struct SynthesisMismatchError : Error {
    using Error::Error;
};

}  // namespace cqec

#endif
