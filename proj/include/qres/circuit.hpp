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

#include <optional>
#include <vector>

#include "qres/linalg.hpp"
#include "qres/pauli.hpp"

namespace qres {

enum class GateKind { RY, RZ, CNOT };

/// One gate of a parameterized circuit. Rotations carry either a parameter
/// slot or a fixed angle, never both. Conventions:
///   RY(t) = exp(-i t Y / 2),  RZ(t) = exp(-i t Z / 2).
struct Gate {
    GateKind kind;
    int target = 0;
    std::optional<int> control;     // CNOT only
    std::optional<int> param_slot;  // rotations only
    std::optional<double> fixed_angle;

    static Gate ry(int target, int slot) { return {GateKind::RY, target, {}, slot, {}}; }
    static Gate rz(int target, int slot) { return {GateKind::RZ, target, {}, slot, {}}; }
    static Gate ry_fixed(int target, double angle) { return {GateKind::RY, target, {}, {}, angle}; }
    static Gate rz_fixed(int target, double angle) { return {GateKind::RZ, target, {}, {}, angle}; }
    static Gate cnot(int control, int target) { return {GateKind::CNOT, target, control, {}, {}}; }
};

struct Circuit {
    int n_qubits = 0;
    std::vector<Gate> gates;
    int n_params = 0;

    /// Throws validation_error when a gate breaks the structural invariants.
    void validate() const;
};

/// Layered ansatz geometry: per layer, every qubit gets RZ-RY-RZ rotations
/// followed by the cyclic entangler CNOT(q, (q + offset) mod n). The default
/// offset of layer l is (l mod (n-1)) + 1, which shifts the connection
/// sequence by one extra position every layer.
struct AnsatzLayout {
    int n_qubits = 0;
    int n_layers = 0;
    std::vector<int> offsets;  // one per layer, each in [1, n_qubits)

    static AnsatzLayout standard(int n_qubits, int n_layers);
    void validate() const;
};

struct StateVector {
    int n_qubits = 0;
    std::vector<cdouble> amps;

    static StateVector zero_state(int n_qubits);
    double norm() const;
    CVector to_eigen() const;
    static StateVector from_eigen(const CVector& v);
};

/// Rotation angles in radians. Length is 3 * n_qubits * n_layers for the
/// standard ansatz; slot order is (layer, qubit, position).
struct ParameterSet {
    std::vector<double> values;

    /// Wrap every value into [0, 2pi).
    ParameterSet wrapped() const;
};

Circuit build_ansatz(const AnsatzLayout& layout);

/// Exact statevector from |0...0>. Deterministic bit-for-bit for identical
/// inputs on a fixed kernel backend.
StateVector run_circuit(const Circuit& c, const ParameterSet& p);

/// <s|O|s> with conjugation on the bra.
cdouble expectation(const StateVector& s, const CMatrix& op);
cdouble expectation(const StateVector& s, const PauliSum& op);

/// <s|H|s> / <s|N|s>. Throws numeric_error when |<s|N|s>| < 1e-12.
cdouble rayleigh_quotient(const StateVector& s, const CMatrix& h, const CMatrix& n);

}  // namespace qres
