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

#include "qres/vqe.hpp"

#include <cmath>
#include <numbers>
#include <ostream>
#include <random>

#include "qres/errors.hpp"

namespace qres {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kImagTol = 1e-8;

bool has_metric(const CMatrix& n) { return n.size() != 0; }

void check_operators(const CMatrix& h, const CMatrix& n) {
    if (!is_hermitian(h, 1e-10)) throw validation_error("loss: H must be Hermitian");
    if (has_metric(n)) {
        if (!is_hermitian(n, 1e-10)) throw validation_error("loss: N must be Hermitian");
        if (n.rows() != h.rows()) throw validation_error("loss: H/N dimension mismatch");
    }
}

// Numerator and denominator of the quotient, no validation.
struct QuotientParts {
    double num;
    double den;
};

QuotientParts evaluate_parts(const ParameterSet& p, const CMatrix& h, const CMatrix& n,
                             const Circuit& ansatz) {
    const StateVector s = run_circuit(ansatz, p);
    const cdouble num = expectation(s, h);
    cdouble den{1.0, 0.0};
    if (has_metric(n)) den = expectation(s, n);
    if (std::abs(den) < 1e-12) throw numeric_error("loss: degenerate metric expectation");
    return {num.real(), den.real()};
}

double quotient(const QuotientParts& q) { return q.num / q.den; }

}  // namespace

void TrainingConfig::validate() const {
    if (learning_rate <= 0) throw validation_error("TrainingConfig: learning rate must be > 0");
    if (max_iterations < 1) throw validation_error("TrainingConfig: max_iterations must be >= 1");
    if (energy_tolerance <= 0) throw validation_error("TrainingConfig: tolerance must be > 0");
}

void TrainingTrace::write_csv(std::ostream& out) const {
    out << "iteration,energy,grad_norm,eta\n";
    for (const auto& r : rows)
        out << r.iteration << ',' << r.energy << ',' << r.grad_norm << ',' << r.eta << '\n';
}

double loss(const ParameterSet& p, const CMatrix& h, const CMatrix& n, const Circuit& ansatz) {
    check_operators(h, n);
    const StateVector s = run_circuit(ansatz, p);
    const cdouble value =
        has_metric(n) ? rayleigh_quotient(s, h, n) : expectation(s, h);
    if (std::abs(value.imag()) > kImagTol)
        throw numeric_error("loss: quotient has imaginary part " +
                            std::to_string(value.imag()));
    return value.real();
}

RVector parameter_shift_grad(const ParameterSet& p, const CMatrix& h, const CMatrix& n,
                             const Circuit& ansatz) {
    check_operators(h, n);
    const int n_params = ansatz.n_params;
    if (static_cast<int>(p.values.size()) != n_params)
        throw validation_error("parameter_shift_grad: parameter count mismatch");

    const bool metric = has_metric(n);
    const QuotientParts at_p = evaluate_parts(p, h, n, ansatz);
    RVector grad(n_params);
    ParameterSet shifted = p;
    for (int k = 0; k < n_params; ++k) {
        const double saved = shifted.values[k];
        shifted.values[k] = saved + kHalfPi;
        const QuotientParts plus = evaluate_parts(shifted, h, n, ansatz);
        shifted.values[k] = saved - kHalfPi;
        const QuotientParts minus = evaluate_parts(shifted, h, n, ansatz);
        shifted.values[k] = saved;

        if (!metric) {
            grad[k] = 0.5 * (plus.num - minus.num);
        } else {
            const double dnum = 0.5 * (plus.num - minus.num);
            const double dden = 0.5 * (plus.den - minus.den);
            grad[k] = (dnum * at_p.den - at_p.num * dden) / (at_p.den * at_p.den);
        }
    }
    return grad;
}

ParameterSet sgd_step(const ParameterSet& p, const RVector& g, double eta) {
    if (static_cast<Eigen::Index>(p.values.size()) != g.size())
        throw validation_error("sgd_step: gradient length mismatch");
    ParameterSet out = p;
    for (Eigen::Index k = 0; k < g.size(); ++k) out.values[k] -= eta * g[k];
    return out.wrapped();
}

TrainResult train(const CMatrix& h, const CMatrix& n, const AnsatzLayout& layout,
                  const TrainingConfig& cfg) {
    cfg.validate();
    check_operators(h, n);
    const Circuit ansatz = build_ansatz(layout);

    // Portable seeded uniform init in [0, 2pi); distribution spelled out so
    // identical seeds give identical traces on every platform.
    std::mt19937_64 rng(cfg.seed);
    ParameterSet p;
    p.values.resize(ansatz.n_params);
    for (double& v : p.values)
        v = kTwoPi * (static_cast<double>(rng() >> 11) * 0x1.0p-53);

    TrainResult result;
    double best = std::numeric_limits<double>::infinity();
    double previous = std::numeric_limits<double>::quiet_NaN();
    for (int t = 0; t < cfg.max_iterations; ++t) {
        const double energy = quotient(evaluate_parts(p, h, n, ansatz));
        if (energy < best) {
            best = energy;
            result.params = p;
        }
        const RVector g = parameter_shift_grad(p, h, n, ansatz);
        double eta = cfg.learning_rate;
        if (!cfg.schedule.empty())
            eta *= cfg.schedule[std::min<std::size_t>(t, cfg.schedule.size() - 1)];
        result.trace.rows.push_back({t, energy, g.norm(), eta});
        if (t > 0 && std::abs(energy - previous) < cfg.energy_tolerance) {
            result.converged = true;
            break;
        }
        previous = energy;
        p = sgd_step(p, g, eta);
    }
    // The post-step parameters never got an energy row; still consider them.
    const double tail = quotient(evaluate_parts(p, h, n, ansatz));
    if (tail < best) {
        best = tail;
        result.params = p;
    }
    result.energy = best;
    result.state = run_circuit(ansatz, result.params);
    return result;
}

CMatrix project_hamiltonian(const CMatrix& h, const CMatrix& n,
                            const std::vector<StateVector>& lower_states, double c) {
    if (c <= 0) throw validation_error("project_hamiltonian: c must be positive");
    CMatrix out = h;
    for (const auto& s : lower_states) {
        CVector phi = s.to_eigen();
        if (phi.size() != h.rows())
            throw validation_error("project_hamiltonian: state dimension mismatch");
        if (has_metric(n)) phi = n * phi;
        out += c * (phi * phi.adjoint());
    }
    return out;
}

double default_projection_constant(const CMatrix& h) {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(h, Eigen::EigenvaluesOnly);
    const auto& ev = es.eigenvalues();
    const double range = ev(ev.size() - 1) - ev(0);
    return 10.0 * std::max(range, 1.0);
}

}  // namespace qres
