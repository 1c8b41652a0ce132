// Copyright 2026 The qres Authors
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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qres/linalg.hpp"

namespace qres {

enum class PauliLetter : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char to_char(PauliLetter p);
PauliLetter pauli_letter_from_char(char c);

/// A tensor product of single-qubit Pauli operators. letters[q] acts on
/// qubit q, and qubit 0 is the least-significant bit of the state index
/// (so the dense matrix is letters[n-1] (x) ... (x) letters[0]).
struct PauliString {
    int n_qubits = 0;
    std::vector<PauliLetter> letters;

    PauliString() = default;
    PauliString(int n, std::vector<PauliLetter> ls);

    /// Identity on n qubits.
    static PauliString identity(int n);

    /// Parse a label written qubit-0-last, e.g. "XZIY" on 4 qubits puts
    /// Y on qubit 0 and X on qubit 3.
    static PauliString from_label(int n, const std::string& label);

    /// Label written qubit-0-last (the serialization convention).
    std::string label() const;

    /// Base-4 code with qubit q in digit q; total order used for term merging.
    std::uint64_t code() const;

    bool operator==(const PauliString& other) const = default;
};

/// Bit-mask form of a Pauli string: P|k> = phase(k) |k ^ x_mask> with
/// phase(k) = base * (-1)^popcount(k & z_mask). Used by the dense
/// conversion loops and by statevector expectation values.
struct CompiledPauli {
    std::uint64_t x_mask = 0;
    std::uint64_t z_mask = 0;
    cdouble base{1.0, 0.0};
};

CompiledPauli compile_pauli(const PauliString& s);

struct PauliTerm {
    cdouble coeff;
    PauliString string;
};

/// Weighted sum of Pauli strings on a common qubit count. A normalized sum
/// has unique strings sorted by code and no coefficient below the drop
/// threshold in magnitude.
struct PauliSum {
    int n_qubits = 0;
    std::vector<PauliTerm> terms;
};

/// Default absolute threshold below which coefficients are dropped.
inline constexpr double kCoeffDropThreshold = 1e-14;

/// Merge duplicate strings, drop small coefficients, sort deterministically.
PauliSum normalized(PauliSum s, double drop_threshold = kCoeffDropThreshold);

/// Jordan-Wigner ladder operators on n fermionic modes:
///   a_j^dag = 1/2 (X_j - i Y_j) (x) Z_{j-1} (x) ... (x) Z_0
/// jw_annihilation is the conjugate transpose.
PauliSum jw_creation(int j, int n);
PauliSum jw_annihilation(int j, int n);

/// Expand a 2^m x 2^m matrix over all 4^m Pauli strings with coefficients
/// Tr(P M) / 2^m. Requires m <= 8; throws validation_error otherwise or when
/// the dimension is not a power of two.
PauliSum pauli_decompose(const CMatrix& m, double drop_threshold = kCoeffDropThreshold);

/// Dense matrix of a Pauli sum. Throws validation_error on empty input or
/// inconsistent qubit counts.
CMatrix pauli_reconstruct(const PauliSum& s);

}  // namespace qres
