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
#include <iosfwd>
#include <vector>

#include "qres/circuit.hpp"
#include "qres/linalg.hpp"

namespace qres {

struct TrainingConfig {
    double learning_rate = 0.1;
    int max_iterations = 200;
    double energy_tolerance = 1e-8;  // stop when |E_t - E_{t-1}| drops below
    std::uint64_t seed = 0;
    std::vector<double> schedule;  // optional per-iteration learning-rate multipliers
    bool relaxed = false;          // accept the iteration-cap state without convergence

    void validate() const;
};

struct TraceRow {
    int iteration;
    double energy;
    double grad_norm;
    double eta;
};

struct TrainingTrace {
    std::vector<TraceRow> rows;

    /// CSV with columns iteration, energy, grad_norm, eta.
    void write_csv(std::ostream& out) const;
};

struct TrainResult {
    double energy = 0.0;  // minimum over all iterations
    ParameterSet params;  // the iterate attaining it
    StateVector state;
    TrainingTrace trace;
    bool converged = false;
};

/// Re(<psi|H|psi> / <psi|N|psi>) for psi = ansatz(p). Pass an empty (0x0)
/// metric for the orthonormal case. Throws validation_error for non-Hermitian
/// H, numeric_error when the metric expectation degenerates or the quotient
/// picks up an imaginary part above 1e-8.
double loss(const ParameterSet& p, const CMatrix& h, const CMatrix& n, const Circuit& ansatz);

/// Exact gradient via the parameter-shift rule. With a non-identity metric,
/// numerator and denominator are shift-differentiated separately and combined
/// with the quotient rule (the plain rule is exact only for N = I).
RVector parameter_shift_grad(const ParameterSet& p, const CMatrix& h, const CMatrix& n,
                             const Circuit& ansatz);

/// p - eta * g, wrapped into [0, 2pi).
ParameterSet sgd_step(const ParameterSet& p, const RVector& g, double eta);

/// SGD minimization of the (generalized) Rayleigh quotient from a seeded
/// uniform-random start. Non-convergence at the iteration cap is reported via
/// the converged flag, never thrown.
TrainResult train(const CMatrix& h, const CMatrix& n, const AnsatzLayout& layout,
                  const TrainingConfig& cfg);

/// Pseudo-potential deflation H + c * sum_i N|phi_i><phi_i|N. The metric
/// dressing makes the penalty act in the physical inner product; it reduces
/// to H + c sum |phi><phi| when N = I. lower_states must be normalized in the
/// N metric.
CMatrix project_hamiltonian(const CMatrix& h, const CMatrix& n,
                            const std::vector<StateVector>& lower_states, double c);

/// Default pseudo-potential strength: 10x the spectral range of H.
double default_projection_constant(const CMatrix& h);

}  // namespace qres
