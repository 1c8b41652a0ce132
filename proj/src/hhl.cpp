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

#include "qres/hhl.hpp"

#include <cmath>
#include <numbers>

#include "qres/errors.hpp"

namespace qres {

namespace {

constexpr double kPi = std::numbers::pi;

// Normalized DFT on a power-of-two length: sign=+1 is the QFT kernel
// e^{+2pi i xy / K} / sqrt(K), sign=-1 its inverse.
void fourier_pow2(std::vector<cdouble>& a, int sign) {
    const std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = sign * 2.0 * kPi / static_cast<double>(len);
        const cdouble wl(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            cdouble w{1.0, 0.0};
            for (std::size_t k = 0; k < len / 2; ++k) {
                const cdouble u = a[i + k];
                const cdouble v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
                w *= wl;
            }
        }
    }
    const double norm = 1.0 / std::sqrt(static_cast<double>(n));
    for (auto& x : a) x *= norm;
}

// Spectral-radius estimate by power iteration on A^2 (A Hermitian, so A^2 is
// PSD and the iteration cannot oscillate between +/- eigenvalues).
double power_iteration_max(const CMatrix& a) {
    const Eigen::Index n = a.rows();
    CVector v(n);
    for (Eigen::Index i = 0; i < n; ++i) v[i] = cdouble(1.0 + 0.01 * static_cast<double>(i), 0.0);
    v.normalize();
    double est = 0.0;
    for (int it = 0; it < 100; ++it) {
        CVector w = a * (a * v);
        const double norm = w.norm();
        if (norm == 0.0) return 0.0;
        est = std::sqrt(norm);
        v = w / norm;
    }
    return est;
}

// Smallest |eigenvalue| estimate by inverse power iteration on A^2.
double inverse_power_min(const CMatrix& a) {
    const Eigen::Index n = a.rows();
    Eigen::PartialPivLU<CMatrix> lu(a);
    CVector v(n);
    for (Eigen::Index i = 0; i < n; ++i) v[i] = cdouble(1.0 + 0.01 * static_cast<double>(i), 0.0);
    v.normalize();
    double est = 0.0;
    for (int it = 0; it < 100; ++it) {
        CVector w = lu.solve(lu.solve(v));
        const double norm = w.norm();
        if (!std::isfinite(norm) || norm == 0.0) return 0.0;
        est = 1.0 / std::sqrt(norm);
        v = w / norm;
    }
    return est;
}

struct PaddedProblem {
    CMatrix a;
    CVector b;
    Eigen::Index original_dim;
};

PaddedProblem pad_to_power_of_two(const CMatrix& a, const CVector& b) {
    const Eigen::Index n = a.rows();
    Eigen::Index dim = 1;
    while (dim < n) dim <<= 1;
    PaddedProblem out{CMatrix::Identity(dim, dim), CVector::Zero(dim), n};
    out.a.topLeftCorner(n, n) = a;
    out.b.head(n) = b;
    return out;
}

}  // namespace

HhlBackendConfig HhlBackendConfig::from_json(const nlohmann::json& j) {
    HhlBackendConfig cfg;
    if (j.contains("backend")) {
        const std::string b = j["backend"].get<std::string>();
        if (b == "ideal") cfg.backend = HhlBackend::ideal;
        else if (b == "qpe") cfg.backend = HhlBackend::qpe;
        else throw validation_error("hhl config: backend must be \"ideal\" or \"qpe\"");
    }
    if (j.contains("clock_qubits")) cfg.clock_qubits = j["clock_qubits"].get<int>();
    if (j.contains("evolution_time")) cfg.evolution_time = j["evolution_time"].get<double>();
    if (j.contains("rotation_constant"))
        cfg.rotation_constant = j["rotation_constant"].get<double>();
    if (j.contains("signed_spectrum")) cfg.signed_spectrum = j["signed_spectrum"].get<bool>();
    if (j.contains("capture_diagnostics"))
        cfg.capture_diagnostics = j["capture_diagnostics"].get<bool>();
    return cfg;
}

nlohmann::json HhlBackendConfig::to_json() const {
    nlohmann::json j;
    j["backend"] = backend == HhlBackend::ideal ? "ideal" : "qpe";
    j["clock_qubits"] = clock_qubits;
    if (evolution_time) j["evolution_time"] = *evolution_time;
    if (rotation_constant) j["rotation_constant"] = *rotation_constant;
    j["signed_spectrum"] = signed_spectrum;
    j["capture_diagnostics"] = capture_diagnostics;
    return j;
}

nlohmann::json HhlSolution::diagnostics_json() const {
    nlohmann::json j;
    j["post_selection_probability"] = post_selection_probability;
    if (fidelity_estimate) j["fidelity_estimate"] = *fidelity_estimate;
    if (!clock_histogram.empty()) j["clock_histogram"] = clock_histogram;
    return j;
}

CMatrix hermitian_embed(const CMatrix& c) {
    if (c.rows() != c.cols()) throw validation_error("hermitian_embed: matrix must be square");
    const Eigen::Index n = c.rows();
    CMatrix out = CMatrix::Zero(2 * n, 2 * n);
    out.topRightCorner(n, n) = c;
    out.bottomLeftCorner(n, n) = c.adjoint();
    return out;
}

HhlSolution hhl_solve(const CMatrix& a, const RVector& b, const HhlBackendConfig& cfg) {
    if (a.rows() != a.cols()) throw validation_error("hhl_solve: matrix must be square");
    if (b.size() != a.rows()) throw validation_error("hhl_solve: right-hand-side size mismatch");
    if (!is_hermitian(a, 1e-10)) throw validation_error("hhl_solve: matrix must be Hermitian");
    const double b_norm = b.norm();
    if (b_norm == 0.0) throw validation_error("hhl_solve: right-hand side must be nonzero");

    PaddedProblem p = pad_to_power_of_two(a, b.cast<cdouble>());
    const Eigen::Index dim = p.a.rows();

    Eigen::SelfAdjointEigenSolver<CMatrix> es(p.a);
    const RVector lambda = es.eigenvalues();
    const CMatrix& v = es.eigenvectors();
    const double abs_max = lambda.cwiseAbs().maxCoeff();
    const double abs_min = lambda.cwiseAbs().minCoeff();
    if (abs_max == 0.0 || abs_min <= cfg.singularity_floor * abs_max)
        throw numeric_error("hhl_solve: singular matrix (min |eigenvalue| below floor)");

    const CVector beta = v.adjoint() * (p.b / b_norm);
    const CVector exact_dir = v * (beta.array() / lambda.array().cast<cdouble>()).matrix();

    HhlSolution sol;
    if (cfg.backend == HhlBackend::ideal) {
        sol.x = b_norm * exact_dir.head(p.original_dim);
        return sol;
    }

    // --- QPE-circuit emulation, carried in the eigenbasis of A ---
    if (cfg.clock_qubits < 1 || cfg.clock_qubits > 20)
        throw validation_error("hhl_solve: clock_qubits out of range [1, 20]");
    const std::size_t clock_dim = std::size_t{1} << cfg.clock_qubits;

    const double t = cfg.evolution_time.value_or(kPi / (2.0 * power_iteration_max(p.a)));
    const double rot_c = cfg.rotation_constant.value_or(0.5 * inverse_power_min(p.a));
    if (!(t > 0.0)) throw validation_error("hhl_solve: evolution time must be positive");
    if (!(rot_c > 0.0)) throw validation_error("hhl_solve: rotation constant must be positive");
    if (cfg.signed_spectrum) {
        if (t * abs_max >= kPi)
            throw validation_error("hhl_solve: phase aliasing, t*|lambda_max| >= pi");
    } else {
        if (lambda.minCoeff() < -cfg.singularity_floor * abs_max)
            throw validation_error(
                "hhl_solve: negative eigenvalues require signed_spectrum");
        if (t * abs_max >= 2.0 * kPi)
            throw validation_error("hhl_solve: phase aliasing, t*lambda_max >= 2*pi");
    }

    // anc=0 branch after Hadamards and the controlled evolution.
    // y0[c*dim + e] = beta_e e^{i lambda_e t c} / sqrt(K)
    std::vector<cdouble> y0(clock_dim * dim);
    const double inv_sqrt_k = 1.0 / std::sqrt(static_cast<double>(clock_dim));
    for (std::size_t c = 0; c < clock_dim; ++c)
        for (Eigen::Index e = 0; e < dim; ++e) {
            const double phase = lambda[e] * t * static_cast<double>(c);
            y0[c * dim + e] = beta[e] * cdouble(std::cos(phase), std::sin(phase)) * inv_sqrt_k;
        }

    // Inverse QFT over the clock index, one line per eigencomponent.
    std::vector<cdouble> line(clock_dim);
    for (Eigen::Index e = 0; e < dim; ++e) {
        for (std::size_t c = 0; c < clock_dim; ++c) line[c] = y0[c * dim + e];
        fourier_pow2(line, -1);
        for (std::size_t c = 0; c < clock_dim; ++c) y0[c * dim + e] = line[c];
    }

    if (cfg.capture_diagnostics) {
        sol.clock_histogram.resize(clock_dim);
        for (std::size_t c = 0; c < clock_dim; ++c) {
            double pr = 0.0;
            for (Eigen::Index e = 0; e < dim; ++e) pr += std::norm(y0[c * dim + e]);
            sol.clock_histogram[c] = pr;
        }
    }

    // Eigenvalue-inversion rotation: RY(2 asin(C / lambda(y))) on the ancilla,
    // controlled on each clock value y.
    std::vector<cdouble> y1(clock_dim * dim, cdouble{0.0, 0.0});
    double p1 = 0.0;
    for (std::size_t y = 0; y < clock_dim; ++y) {
        if (y == 0) continue;  // lambda(0) = 0 carries no inversion
        double value = static_cast<double>(y);
        if (cfg.signed_spectrum && y >= clock_dim / 2)
            value -= static_cast<double>(clock_dim);
        const double lam_y = 2.0 * kPi * value / (static_cast<double>(clock_dim) * t);
        double ratio = rot_c / lam_y;
        ratio = std::clamp(ratio, -1.0, 1.0);
        const double sin_half = ratio;
        const double cos_half = std::sqrt(1.0 - ratio * ratio);
        for (Eigen::Index e = 0; e < dim; ++e) {
            const cdouble a0 = y0[y * dim + e];
            y0[y * dim + e] = cos_half * a0;
            y1[y * dim + e] = sin_half * a0;
            p1 += std::norm(y1[y * dim + e]);
        }
    }
    sol.post_selection_probability = p1;

    // Uncompute on the ancilla=1 branch: QFT, conjugate evolution, Hadamards.
    for (Eigen::Index e = 0; e < dim; ++e) {
        for (std::size_t c = 0; c < clock_dim; ++c) line[c] = y1[c * dim + e];
        fourier_pow2(line, +1);
        for (std::size_t c = 0; c < clock_dim; ++c) y1[c * dim + e] = line[c];
    }
    CVector slice = CVector::Zero(dim);
    for (Eigen::Index e = 0; e < dim; ++e) {
        cdouble acc{0.0, 0.0};
        for (std::size_t c = 0; c < clock_dim; ++c) {
            const double phase = -lambda[e] * t * static_cast<double>(c);
            acc += y1[c * dim + e] * cdouble(std::cos(phase), std::sin(phase));
        }
        slice[e] = acc * inv_sqrt_k;  // clock=0 row of the final Hadamards
    }

    CVector x_full = v * slice * (b_norm / rot_c);
    sol.x = x_full.head(p.original_dim);

    const double nx = sol.x.norm();
    const double ne = exact_dir.head(p.original_dim).norm();
    if (nx > 0 && ne > 0)
        sol.fidelity_estimate =
            std::abs(exact_dir.head(p.original_dim).dot(sol.x)) / (nx * ne);
    return sol;
}

CVector solve_complex_linear(const CMatrix& c, const CVector& b, const HhlBackendConfig& cfg) {
    if (c.rows() != c.cols())
        throw validation_error("solve_complex_linear: matrix must be square");
    if (b.size() != c.rows())
        throw validation_error("solve_complex_linear: right-hand-side size mismatch");
    const Eigen::Index n = c.rows();
    const CMatrix embedded = hermitian_embed(c);

    RVector rhs = RVector::Zero(2 * n);
    CVector x = CVector::Zero(n);

    rhs.head(n) = b.real();
    if (rhs.norm() > 0) x += hhl_solve(embedded, rhs, cfg).x.tail(n);

    rhs.head(n) = b.imag();
    if (rhs.norm() > 0) x += cdouble{0.0, 1.0} * hhl_solve(embedded, rhs, cfg).x.tail(n);

    return x;
}

}  // namespace qres
