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

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qres/hhl.hpp"
#include "qres/linalg.hpp"

namespace qres {

/// Paired complex H and N matrices of a generalized eigenproblem
/// H phi = E N phi. For c-product metrics both are symmetric under plain
/// transpose, not conjugate transpose.
struct GeneralizedEigenProblem {
    CMatrix h;
    CMatrix n;
    std::string label;

    void validate() const;
    static GeneralizedEigenProblem from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;
};

/// Bilinear pairing sum_i u_i v_i with no conjugation; the natural inner
/// product for complex-scaled problems.
cdouble c_product(const CVector& u, const CVector& v);

struct ReduceOptions {
    double condition_cap = 1e12;
};

struct ReducedProblem {
    CMatrix m;  // N^-1 H
    double metric_condition = 0.0;
};

/// Classical reduction of the generalized problem to M = N^-1 H. Throws
/// numeric_error (with the condition estimate in the message) when the metric
/// is ill-conditioned beyond the cap.
ReducedProblem reduce_generalized(const GeneralizedEigenProblem& p, const ReduceOptions& opts = {});

/// Fixed-point operator C(E, beta) = (M - (E - beta) I) / beta.
/// C phi = phi if and only if M phi = E phi.
CMatrix build_c_matrix(const CMatrix& m, cdouble e, cdouble beta);

/// How to produce E_{k+1} from the iterates.
enum class EnergyUpdate {
    /// Generalized c-Rayleigh quotient of the new iterate (exact at the fixed
    /// point). The default.
    c_rayleigh,
    /// Shifted-inverse estimate (E_k - beta) + beta * c(phi_k, phi_k) /
    /// c(phi_k, phi_k+1'), using c-products of the new and old wave functions.
    overlap_shift,
};

struct IhhlConfig {
    cdouble beta{1.0, 0.0};
    double tolerance = 1e-8;  // |E_k+1 - E_k| threshold (1e-4 is apt for qpe)
    int max_iterations = 200;
    HhlBackendConfig hhl;
    double deflation_constant = 0.0;  // <= 0 selects 10 * ||M||_F
    EnergyUpdate update = EnergyUpdate::c_rayleigh;
    double residual_tolerance = 1e-6;  // required for the converged flag (ideal backend)

    void validate() const;
    static IhhlConfig from_json(const nlohmann::json& j);
};

struct IhhlTraceRow {
    int iter;
    cdouble energy;
    double residual;  // ||M phi - E phi|| / ||phi||
    cdouble c_norm;   // c(phi', phi') of the unnormalized iterate
};

struct IhhlTrace {
    std::vector<IhhlTraceRow> rows;

    /// CSV with columns iter, re_E, im_E, residual.
    void write_csv(std::ostream& out) const;
};

struct IhhlResult {
    cdouble energy{0.0, 0.0};
    CVector phi;
    IhhlTrace trace;
    bool converged = false;
    int beta_retries = 0;    // singular-C retries taken (beta scaled by 1.37 each)
    int restarts = 0;        // degenerate-c-norm restarts of phi0
};

/// The iterative eigensolver on an already-reduced matrix M: repeatedly solve
/// C(E_k, beta) phi_{k+1} = phi_k through the HHL backend, c-normalize, update
/// the energy, and stop once |dE| <= tolerance (and, on the ideal backend,
/// the residual is below residual_tolerance). e0 defaults to the c-Rayleigh
/// quotient of phi0.
IhhlResult ihhl_iterate(const CMatrix& m, const CVector& phi0, std::optional<cdouble> e0,
                        const IhhlConfig& cfg);

/// Convenience overload: reduce the generalized problem, then iterate.
IhhlResult ihhl_iterate(const GeneralizedEigenProblem& p, const CVector& phi0,
                        std::optional<cdouble> e0, const IhhlConfig& cfg);

struct DeflationResult {
    CMatrix m;
    std::vector<int> skipped;  // states with defective c-norm, projector not applied
};

/// c-product deflation M + c * sum_i phi_i phi_i^T for already-found
/// eigenpairs (phi c-normalized). Found eigenvalues shift away by about c;
/// the rest of the spectrum is preserved.
DeflationResult deflate(const CMatrix& m, const std::vector<std::pair<cdouble, CVector>>& found,
                        double c);

}  // namespace qres
