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

#include <json.hpp>

#include "qres/linalg.hpp"

namespace qres {

enum class HhlBackend { ideal, qpe };

/// Solver knobs. The qpe backend emulates the full phase-estimation circuit:
/// state prep of b/||b||, QPE with exp(iAt), the eigenvalue-inversion ancilla
/// rotation, inverse QPE, and post-selection on ancilla = 1 (by exact
/// projection, no sampling).
struct HhlBackendConfig {
    HhlBackend backend = HhlBackend::ideal;

    int clock_qubits = 10;
    /// Evolution time; default pi / (2 * lambda_max), lambda_max estimated by
    /// power iteration.
    std::optional<double> evolution_time;
    /// Ancilla rotation constant C; default 0.5 * lambda_min, estimated by
    /// inverse power iteration.
    std::optional<double> rotation_constant;
    /// Two's-complement clock encoding so negative eigenvalues land on the
    /// upper half of the register. Required whenever the spectrum is signed.
    bool signed_spectrum = true;

    /// Relative floor under which min |lambda| means "singular".
    double singularity_floor = 1e-12;

    /// Record the post-QPE clock spectrum histogram in the solution.
    bool capture_diagnostics = false;

    static HhlBackendConfig from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;
};

struct HhlSolution {
    CVector x;
    double post_selection_probability = 1.0;  // 1 for the ideal backend
    std::optional<double> fidelity_estimate;  // qpe only: overlap with the exact solve
    std::vector<double> clock_histogram;      // filled when capture_diagnostics

    nlohmann::json diagnostics_json() const;
};

/// Block matrix [[0, C], [C^dag, 0]]; Hermitian by construction, spectrum is
/// plus/minus the singular values of C.
CMatrix hermitian_embed(const CMatrix& c);

/// Solve A x = b for Hermitian A and real b. Non-power-of-two dimensions are
/// zero-padded (identity on the padded diagonal block) and stripped on
/// return. The solution magnitude is restored analytically from ||b|| and C,
/// so residual checks are meaningful. Throws numeric_error for singular A and
/// validation_error for bad shapes, non-Hermitian input, or phase-aliasing
/// configurations.
HhlSolution hhl_solve(const CMatrix& a, const RVector& b, const HhlBackendConfig& cfg);

/// Solve C x = b for invertible complex C and complex b through the Hermitian
/// embedding: two real-b HHL solves (real and imaginary parts of the
/// right-hand side) combined by linearity; the solution is read from the
/// second block.
CVector solve_complex_linear(const CMatrix& c, const CVector& b, const HhlBackendConfig& cfg);

}  // namespace qres
