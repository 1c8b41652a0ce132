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

#include "qres/circuit.hpp"

#include <bit>
#include <cmath>
#include <numbers>

#include "qres/errors.hpp"
#include "qres/kernels.hpp"

namespace qres {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_qubit(int q, int n, const char* what) {
    if (q < 0 || q >= n) throw validation_error(std::string(what) + ": qubit index out of range");
}

}  // namespace

void Circuit::validate() const {
    if (n_qubits < 1) throw validation_error("Circuit: qubit count must be positive");
    for (const auto& g : gates) {
        check_qubit(g.target, n_qubits, "Circuit");
        if (g.kind == GateKind::CNOT) {
            if (!g.control) throw validation_error("Circuit: CNOT without control");
            check_qubit(*g.control, n_qubits, "Circuit");
            if (*g.control == g.target)
                throw validation_error("Circuit: CNOT control equals target");
            if (g.param_slot || g.fixed_angle)
                throw validation_error("Circuit: CNOT takes no angle");
        } else {
            if (g.control) throw validation_error("Circuit: rotation with a control");
            if (g.param_slot.has_value() == g.fixed_angle.has_value())
                throw validation_error(
                    "Circuit: rotation needs exactly one of param_slot / fixed_angle");
            if (g.param_slot && (*g.param_slot < 0 || *g.param_slot >= n_params))
                throw validation_error("Circuit: parameter slot out of range");
        }
    }
}

AnsatzLayout AnsatzLayout::standard(int n_qubits, int n_layers) {
    AnsatzLayout layout;
    layout.n_qubits = n_qubits;
    layout.n_layers = n_layers;
    for (int l = 0; l < n_layers; ++l)
        layout.offsets.push_back(n_qubits > 1 ? (l % (n_qubits - 1)) + 1 : 0);
    return layout;
}

void AnsatzLayout::validate() const {
    if (n_qubits < 1) throw validation_error("AnsatzLayout: qubit count must be positive");
    if (n_layers < 1) throw validation_error("AnsatzLayout: need at least one layer");
    if (static_cast<int>(offsets.size()) != n_layers)
        throw validation_error("AnsatzLayout: one offset per layer required");
    for (int off : offsets) {
        if (n_qubits == 1) {
            if (off != 0) throw validation_error("AnsatzLayout: single qubit has no entangler");
        } else if (off < 1 || off >= n_qubits) {
            throw validation_error("AnsatzLayout: offset outside [1, n_qubits)");
        }
    }
}

Circuit build_ansatz(const AnsatzLayout& layout) {
    layout.validate();
    Circuit c;
    c.n_qubits = layout.n_qubits;
    c.n_params = 3 * layout.n_qubits * layout.n_layers;
    for (int l = 0; l < layout.n_layers; ++l) {
        for (int q = 0; q < layout.n_qubits; ++q) {
            const int slot = 3 * (l * layout.n_qubits + q);
            c.gates.push_back(Gate::rz(q, slot));
            c.gates.push_back(Gate::ry(q, slot + 1));
            c.gates.push_back(Gate::rz(q, slot + 2));
        }
        const int off = layout.offsets[l];
        if (off > 0)
            for (int q = 0; q < layout.n_qubits; ++q)
                c.gates.push_back(Gate::cnot(q, (q + off) % layout.n_qubits));
    }
    c.validate();
    return c;
}

StateVector StateVector::zero_state(int n_qubits) {
    StateVector s;
    s.n_qubits = n_qubits;
    s.amps.assign(std::size_t{1} << n_qubits, cdouble{0.0, 0.0});
    s.amps[0] = cdouble{1.0, 0.0};
    return s;
}

double StateVector::norm() const {
    const auto& k = kernels::active();
    return std::sqrt(k.dot_conj(amps.data(), amps.data(), amps.size()).real());
}

CVector StateVector::to_eigen() const {
    return Eigen::Map<const CVector>(amps.data(), static_cast<Eigen::Index>(amps.size()));
}

StateVector StateVector::from_eigen(const CVector& v) {
    if (!is_power_of_two(v.size()))
        throw validation_error("StateVector: length must be a power of two");
    StateVector s;
    s.n_qubits = log2_exact(v.size());
    s.amps.assign(v.data(), v.data() + v.size());
    return s;
}

ParameterSet ParameterSet::wrapped() const {
    ParameterSet out = *this;
    for (double& v : out.values) {
        v = std::fmod(v, kTwoPi);
        if (v < 0) v += kTwoPi;
    }
    return out;
}

StateVector run_circuit(const Circuit& c, const ParameterSet& p) {
    c.validate();
    if (static_cast<int>(p.values.size()) != c.n_params)
        throw validation_error("run_circuit: parameter count mismatch");

    StateVector s = StateVector::zero_state(c.n_qubits);
    const auto& k = kernels::active();
    for (const auto& g : c.gates) {
        if (g.kind == GateKind::CNOT) {
            k.apply_cnot(s.amps.data(), s.amps.size(), *g.control, g.target);
            continue;
        }
        const double angle = g.param_slot ? p.values[*g.param_slot] : *g.fixed_angle;
        const double ch = std::cos(angle / 2);
        const double sh = std::sin(angle / 2);
        cdouble m[4];
        if (g.kind == GateKind::RY) {
            m[0] = {ch, 0.0};
            m[1] = {-sh, 0.0};
            m[2] = {sh, 0.0};
            m[3] = {ch, 0.0};
        } else {  // RZ
            m[0] = {ch, -sh};
            m[1] = {0.0, 0.0};
            m[2] = {0.0, 0.0};
            m[3] = {ch, sh};
        }
        k.apply_1q(s.amps.data(), s.amps.size(), g.target, m);
    }
    return s;
}

cdouble expectation(const StateVector& s, const CMatrix& op) {
    const Eigen::Index dim = static_cast<Eigen::Index>(s.amps.size());
    if (op.rows() != dim || op.cols() != dim)
        throw validation_error("expectation: operator dimension mismatch");
    const CVector v = s.to_eigen();
    return v.dot(op * v);  // Eigen's dot conjugates the left argument
}

cdouble expectation(const StateVector& s, const PauliSum& op) {
    if (op.n_qubits != s.n_qubits)
        throw validation_error("expectation: Pauli sum qubit count mismatch");
    const std::uint64_t dim = s.amps.size();
    cdouble total{0.0, 0.0};
    for (const auto& term : op.terms) {
        const CompiledPauli cp = compile_pauli(term.string);
        cdouble acc{0.0, 0.0};
        for (std::uint64_t j = 0; j < dim; ++j) {
            const double sign = (std::popcount(j & cp.z_mask) & 1) ? -1.0 : 1.0;
            acc += sign * std::conj(s.amps[j ^ cp.x_mask]) * s.amps[j];
        }
        total += term.coeff * cp.base * acc;
    }
    return total;
}

cdouble rayleigh_quotient(const StateVector& s, const CMatrix& h, const CMatrix& n) {
    const cdouble den = expectation(s, n);
    if (std::abs(den) < 1e-12)
        throw numeric_error("rayleigh_quotient: degenerate metric, |<s|N|s>| < 1e-12");
    return expectation(s, h) / den;
}

}  // namespace qres
