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

#include "qres/ihhl.hpp"

#include <cmath>
#include <ostream>

#include "qres/errors.hpp"
#include "qres/jsonio.hpp"
#include "qres/kernels.hpp"

namespace qres {

namespace {

constexpr double kBetaRetryFactor = 1.37;  // irrational-ish, avoids re-collision
constexpr int kMaxBetaRetries = 3;
constexpr int kMaxRestarts = 3;
constexpr double kDegenerateCNorm = 1e-12;

/// Square root of the c-norm with the branch fixed so the largest-magnitude
/// component of phi / root has positive real part (ties: positive imaginary).
cdouble c_norm_root(const CVector& phi, cdouble nu) {
    cdouble root = std::sqrt(nu);
    Eigen::Index j;
    phi.cwiseAbs().maxCoeff(&j);
    const cdouble lead = phi[j] / root;
    if (lead.real() < 0 || (lead.real() == 0 && lead.imag() < 0)) root = -root;
    return root;
}

}  // namespace

void GeneralizedEigenProblem::validate() const {
    if (h.rows() != h.cols() || n.rows() != n.cols())
        throw validation_error("GeneralizedEigenProblem: matrices must be square");
    if (h.rows() != n.rows())
        throw validation_error("GeneralizedEigenProblem: H and N dimensions differ");
}

GeneralizedEigenProblem GeneralizedEigenProblem::from_json(const nlohmann::json& j) {
    GeneralizedEigenProblem p;
    p.h = cmatrix_from_json(j.at("H"));
    p.n = j.contains("N") ? cmatrix_from_json(j.at("N"))
                          : CMatrix(CMatrix::Identity(p.h.rows(), p.h.cols()));
    if (j.contains("label")) p.label = j["label"].get<std::string>();
    p.validate();
    return p;
}

nlohmann::json GeneralizedEigenProblem::to_json() const {
    return {{"H", matrix_to_json(h)}, {"N", matrix_to_json(n)}, {"label", label}};
}

cdouble c_product(const CVector& u, const CVector& v) {
    if (u.size() != v.size()) throw validation_error("c_product: length mismatch");
    return kernels::active().dot_bilinear(u.data(), v.data(), static_cast<std::size_t>(u.size()));
}

ReducedProblem reduce_generalized(const GeneralizedEigenProblem& p, const ReduceOptions& opts) {
    p.validate();
    ReducedProblem out;
    out.metric_condition = condition_number(p.n);
    if (!std::isfinite(out.metric_condition) || out.metric_condition > opts.condition_cap)
        throw numeric_error("reduce_generalized: metric condition " +
                            std::to_string(out.metric_condition) + " exceeds cap " +
                            std::to_string(opts.condition_cap));
    out.m = Eigen::PartialPivLU<CMatrix>(p.n).solve(p.h);
    return out;
}

CMatrix build_c_matrix(const CMatrix& m, cdouble e, cdouble beta) {
    if (m.rows() != m.cols()) throw validation_error("build_c_matrix: matrix must be square");
    if (beta == cdouble{0.0, 0.0}) throw validation_error("build_c_matrix: beta must be nonzero");
    CMatrix c = m;
    c.diagonal().array() -= (e - beta);
    return c / beta;
}

void IhhlConfig::validate() const {
    if (beta == cdouble{0.0, 0.0}) throw validation_error("IhhlConfig: beta must be nonzero");
    if (tolerance <= 0) throw validation_error("IhhlConfig: tolerance must be positive");
    if (max_iterations < 1) throw validation_error("IhhlConfig: max_iterations must be >= 1");
}

IhhlConfig IhhlConfig::from_json(const nlohmann::json& j) {
    IhhlConfig cfg;
    if (j.contains("beta")) cfg.beta = complex_from_json(j["beta"]);
    if (j.contains("tolerance")) cfg.tolerance = j["tolerance"].get<double>();
    if (j.contains("max_iterations")) cfg.max_iterations = j["max_iterations"].get<int>();
    if (j.contains("hhl")) cfg.hhl = HhlBackendConfig::from_json(j["hhl"]);
    if (j.contains("deflation_constant"))
        cfg.deflation_constant = j["deflation_constant"].get<double>();
    if (j.contains("residual_tolerance"))
        cfg.residual_tolerance = j["residual_tolerance"].get<double>();
    if (j.contains("update")) {
        const std::string u = j["update"].get<std::string>();
        if (u == "c_rayleigh") cfg.update = EnergyUpdate::c_rayleigh;
        else if (u == "overlap_shift") cfg.update = EnergyUpdate::overlap_shift;
        else throw validation_error("ihhl config: unknown energy update mode");
    }
    cfg.validate();
    return cfg;
}

void IhhlTrace::write_csv(std::ostream& out) const {
    out << "iter,re_E,im_E,residual\n";
    for (const auto& r : rows)
        out << r.iter << ',' << r.energy.real() << ',' << r.energy.imag() << ',' << r.residual
            << '\n';
}

namespace {

IhhlResult iterate_once(const CMatrix& m, const CVector& phi0, std::optional<cdouble> e0,
                        const IhhlConfig& cfg) {
    IhhlResult result;
    const double norm0 = phi0.norm();
    cdouble nu0 = c_product(phi0, phi0);
    if (std::abs(nu0) < kDegenerateCNorm * norm0 * norm0)
        throw numeric_error("ihhl: degenerate c-norm of the start vector");

    CVector phi = phi0 / c_norm_root(phi0, nu0);
    cdouble energy = e0 ? *e0 : c_product(phi, m * phi) / c_product(phi, phi);
    cdouble beta = cfg.beta;
    const bool ideal = cfg.hhl.backend == HhlBackend::ideal;

    for (int k = 1; k <= cfg.max_iterations; ++k) {
        CVector next;
        for (;;) {
            const CMatrix c = build_c_matrix(m, energy, beta);
            try {
                next = solve_complex_linear(c, phi, cfg.hhl);
                break;
            } catch (const numeric_error&) {
                if (result.beta_retries >= kMaxBetaRetries) throw;
                beta *= kBetaRetryFactor;  // the fixed point does not move
                ++result.beta_retries;
            }
        }

        const cdouble nu = c_product(next, next);
        if (std::abs(nu) < kDegenerateCNorm * next.squaredNorm())
            throw numeric_error("ihhl: degenerate c-norm of an iterate");
        const CVector phi_next = next / c_norm_root(next, nu);

        cdouble e_next;
        if (cfg.update == EnergyUpdate::c_rayleigh) {
            e_next = c_product(phi_next, m * phi_next) / c_product(phi_next, phi_next);
        } else {
            e_next = (energy - beta) + beta * c_product(phi, phi) / c_product(phi, next);
        }
        const double residual = (m * phi_next - e_next * phi_next).norm() / phi_next.norm();
        result.trace.rows.push_back({k, e_next, residual, nu});

        const bool energy_settled = std::abs(e_next - energy) <= cfg.tolerance;
        const bool residual_ok = !ideal || residual <= cfg.residual_tolerance;
        energy = e_next;
        phi = phi_next;
        if (energy_settled && residual_ok) {
            result.converged = true;
            break;
        }
    }
    result.energy = energy;
    result.phi = phi;
    return result;
}

}  // namespace

IhhlResult ihhl_iterate(const CMatrix& m, const CVector& phi0, std::optional<cdouble> e0,
                        const IhhlConfig& cfg) {
    cfg.validate();
    if (m.rows() != m.cols()) throw validation_error("ihhl_iterate: matrix must be square");
    if (phi0.size() != m.rows()) throw validation_error("ihhl_iterate: phi0 size mismatch");
    if (phi0.norm() == 0.0) throw validation_error("ihhl_iterate: phi0 must be nonzero");

    // Degenerate c-norms restart from a deterministically perturbed phi0.
    CVector start = phi0;
    for (int attempt = 0;; ++attempt) {
        try {
            IhhlResult r = iterate_once(m, start, e0, cfg);
            r.restarts = attempt;
            return r;
        } catch (const numeric_error& err) {
            const bool degenerate =
                std::string_view(err.what()).find("degenerate c-norm") != std::string_view::npos;
            if (!degenerate || attempt >= kMaxRestarts) throw;
            start = phi0;
            start[attempt % start.size()] +=
                cdouble(0.0, 1e-2 * (1.0 + attempt)) * phi0.norm();
        }
    }
}

IhhlResult ihhl_iterate(const GeneralizedEigenProblem& p, const CVector& phi0,
                        std::optional<cdouble> e0, const IhhlConfig& cfg) {
    return ihhl_iterate(reduce_generalized(p).m, phi0, e0, cfg);
}

DeflationResult deflate(const CMatrix& m, const std::vector<std::pair<cdouble, CVector>>& found,
                        double c) {
    if (c <= 0) throw validation_error("deflate: c must be positive");
    DeflationResult out{m, {}};
    for (std::size_t i = 0; i < found.size(); ++i) {
        const CVector& phi = found[i].second;
        if (phi.size() != m.rows()) throw validation_error("deflate: eigenvector size mismatch");
        const cdouble nu = c_product(phi, phi);
        if (std::abs(nu - cdouble{1.0, 0.0}) > 1e-6) {
            out.skipped.push_back(static_cast<int>(i));  // defective c-norm
            continue;
        }
        out.m += c * (phi * phi.transpose());
    }
    return out;
}

}  // namespace qres
