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

#include "qres/csm.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>

#include "qres/errors.hpp"

namespace qres {

namespace {

constexpr double kPi = std::numbers::pi;

double nu_of(double b) { return 1.0 / (2.0 * b * b); }

}  // namespace

std::vector<double> GaussianBasis::widths() const {
    std::vector<double> out(n);
    double b = b1;
    for (int i = 0; i < n; ++i, b *= ratio) out[i] = b;
    return out;
}

void GaussianBasis::validate() const {
    if (l < 0 || l > 2) throw validation_error("GaussianBasis: l must be 0, 1 or 2");
    if (n < 1) throw validation_error("GaussianBasis: need at least one width");
    if (b1 <= 0) throw validation_error("GaussianBasis: b1 must be positive");
    if (ratio <= 1.0)
        throw validation_error("GaussianBasis: ratio must exceed 1 (strictly increasing widths)");
}

void TwoBodySystem::validate() const {
    if (kinetic_scale <= 0) throw validation_error("TwoBodySystem: kinetic scale must be positive");
    if (potential.empty()) throw validation_error("TwoBodySystem: need at least one component");
    for (const auto& term : potential)
        if (term.range <= 0) throw validation_error("TwoBodySystem: ranges must be positive");
    if (coulomb_strength < 0)
        throw validation_error("TwoBodySystem: coulomb strength must be non-negative");
}

TwoBodySystem barrier_benchmark() {
    TwoBodySystem sys;
    sys.kinetic_scale = 1.0;
    sys.potential = {{-8.0, 3.2}, {4.0, 5.6}};
    return sys;
}

RMatrix overlap_matrix(const GaussianBasis& basis) {
    basis.validate();
    const auto bs = basis.widths();
    const int n = basis.n;
    const double p = basis.l + 1.5;
    RMatrix out(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j) {
            const double bi = bs[i], bj = bs[j];
            out(i, j) = out(j, i) = std::pow(2.0 * bi * bj / (bi * bi + bj * bj), p);
        }
    return out;
}

GeneralizedEigenProblem build_hamiltonian(const TwoBodySystem& sys, const GaussianBasis& basis,
                                          double gamma) {
    sys.validate();
    basis.validate();
    if (std::abs(gamma) >= kPi / 4.0)
        throw validation_error("build_hamiltonian: |gamma| must stay below pi/4");

    const auto bs = basis.widths();
    const int n = basis.n;
    const int l = basis.l;
    const double p = l + 1.5;
    const double gam_l32 = std::tgamma(p);
    const double gam_l1 = std::tgamma(static_cast<double>(l + 1));

    const cdouble kin_phase = std::exp(cdouble(0.0, -2.0 * gamma));
    const cdouble coul_phase = std::exp(cdouble(0.0, -gamma));
    const cdouble range_phase = std::exp(cdouble(0.0, 2.0 * gamma));

    GeneralizedEigenProblem out;
    out.n = overlap_matrix(basis).cast<cdouble>();
    out.h = CMatrix::Zero(n, n);

    std::vector<double> nu(n);
    for (int i = 0; i < n; ++i) nu[i] = nu_of(bs[i]);

    for (int i = 0; i < n; ++i) {
        for (int j = 0; j <= i; ++j) {
            const double c = nu[i] + nu[j];
            // unnormalized diagonal overlaps for this pair's normalization
            const double sii = gam_l32 / (2.0 * std::pow(2.0 * nu[i], p));
            const double sjj = gam_l32 / (2.0 * std::pow(2.0 * nu[j], p));
            const double inv_norm = 1.0 / std::sqrt(sii * sjj);
            const double nij = out.n(i, j).real();

            cdouble h = kin_phase * sys.kinetic_scale * (2.0 * l + 3.0) *
                        (2.0 * nu[i] * nu[j] / c) * nij;
            for (const auto& term : sys.potential) {
                const cdouble kappa = range_phase / (term.range * term.range);
                h += sys.coupling * term.depth * nij * std::pow(cdouble(c, 0.0) / (c + kappa), p);
            }
            if (sys.coulomb_strength > 0.0) {
                const double radial = gam_l1 / (2.0 * std::pow(c, static_cast<double>(l + 1)));
                h += coul_phase * sys.coulomb_strength * radial * inv_norm;
            }
            out.h(i, j) = h;
            out.h(j, i) = h;
        }
    }
    return out;
}

namespace {

struct AngleSolution {
    std::vector<cdouble> values;
    CMatrix vectors;
};

AngleSolution dense_solve(const TwoBodySystem& sys, const GaussianBasis& basis, double theta) {
    const GeneralizedEigenProblem p = build_hamiltonian(sys, basis, theta);
    const ReducedProblem red = reduce_generalized(p);
    Eigen::ComplexEigenSolver<CMatrix> es(red.m);
    AngleSolution out;
    out.vectors = es.eigenvectors();
    out.values.assign(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
    return out;
}

double overlap_score(const CMatrix& a, Eigen::Index ca, const CMatrix& b, Eigen::Index cb) {
    const cdouble ov = (a.col(ca).transpose() * b.col(cb))(0, 0);
    return std::abs(ov) / (a.col(ca).norm() * b.col(cb).norm());
}

CsmSweep sweep_dense(const TwoBodySystem& sys, const GaussianBasis& basis,
                     const std::vector<double>& gammas, const SweepOptions& opts) {
    CsmSweep sweep;
    sweep.gammas = gammas;

    AngleSolution prev = dense_solve(sys, basis, -gammas.front());
    const int dim = static_cast<int>(prev.values.size());

    // Deterministic trajectory ids: ascending real part at the first angle.
    std::vector<int> order(dim);
    for (int i = 0; i < dim; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const cdouble ea = prev.values[a], eb = prev.values[b];
        if (ea.real() != eb.real()) return ea.real() < eb.real();
        return ea.imag() < eb.imag();
    });

    sweep.trajectories.resize(dim);
    std::vector<Eigen::Index> prev_col(dim);
    for (int t = 0; t < dim; ++t) {
        sweep.trajectories[t].id = t;
        sweep.trajectories[t].points.push_back({gammas.front(), prev.values[order[t]], false});
        prev_col[t] = order[t];
    }

    for (std::size_t ai = 1; ai < gammas.size(); ++ai) {
        AngleSolution cur = dense_solve(sys, basis, -gammas[ai]);

        // Greedy global assignment by eigenvalue distance.
        struct Pair {
            double dist;
            int traj;
            int col;
        };
        std::vector<Pair> pairs;
        pairs.reserve(static_cast<std::size_t>(dim) * dim);
        for (int t = 0; t < dim; ++t) {
            const cdouble e_prev = sweep.trajectories[t].points.back().energy;
            for (int c = 0; c < dim; ++c)
                pairs.push_back({std::abs(cur.values[c] - e_prev), t, c});
        }
        std::sort(pairs.begin(), pairs.end(),
                  [](const Pair& a, const Pair& b) { return a.dist < b.dist; });

        std::vector<bool> traj_done(dim, false), col_done(dim, false);
        std::vector<int> assigned(dim, -1);
        std::vector<bool> flagged(dim, false);
        for (const auto& pr : pairs) {
            if (traj_done[pr.traj] || col_done[pr.col]) continue;
            // Tie check: another free eigenvalue within tolerance of this one?
            int chosen = pr.col;
            const cdouble e_prev = sweep.trajectories[pr.traj].points.back().energy;
            for (int c = 0; c < dim; ++c) {
                if (c == pr.col || col_done[c]) continue;
                const double d = std::abs(cur.values[c] - e_prev);
                if (d - pr.dist < opts.tie_tolerance) {
                    flagged[pr.traj] = true;
                    if (overlap_score(prev.vectors, prev_col[pr.traj], cur.vectors, c) >
                        overlap_score(prev.vectors, prev_col[pr.traj], cur.vectors, chosen))
                        chosen = c;
                }
            }
            traj_done[pr.traj] = true;
            col_done[chosen] = true;
            assigned[pr.traj] = chosen;
        }
        for (int t = 0; t < dim; ++t) {
            sweep.trajectories[t].points.push_back(
                {gammas[ai], cur.values[assigned[t]], flagged[t]});
            prev_col[t] = assigned[t];
        }
        prev = std::move(cur);
    }
    return sweep;
}

CsmSweep sweep_ihhl(const TwoBodySystem& sys, const GaussianBasis& basis,
                    const std::vector<double>& gammas, const SweepOptions& opts) {
    CsmSweep sweep;
    sweep.gammas = gammas;
    sweep.trajectories.resize(1);
    sweep.trajectories[0].id = 0;

    std::optional<CVector> phi = opts.seed_phi;
    std::optional<cdouble> energy = opts.seed_energy;
    for (double gamma : gammas) {
        const GeneralizedEigenProblem p = build_hamiltonian(sys, basis, -gamma);
        const CVector start = phi ? *phi : CVector(CVector::Ones(p.h.rows()));
        IhhlResult r = ihhl_iterate(p, start, energy, opts.ihhl);
        if (!r.converged)
            throw numeric_error("sweep_angles: ihhl did not converge at gamma = " +
                                std::to_string(gamma));
        sweep.trajectories[0].points.push_back({gamma, r.energy, false});
        phi = r.phi;
        energy = r.energy;
    }
    return sweep;
}

}  // namespace

CsmSweep sweep_angles(const TwoBodySystem& sys, const GaussianBasis& basis,
                      const std::vector<double>& gammas, const SweepOptions& opts) {
    if (gammas.size() < 3) throw validation_error("sweep_angles: need at least three angles");
    for (std::size_t i = 1; i < gammas.size(); ++i)
        if ((gammas[i] - gammas[i - 1]) * (gammas[1] - gammas[0]) <= 0)
            throw validation_error("sweep_angles: angles must be strictly monotone");
    return opts.solver == SweepSolver::dense ? sweep_dense(sys, basis, gammas, opts)
                                             : sweep_ihhl(sys, basis, gammas, opts);
}

namespace {

std::vector<double> trajectory_rates(const Trajectory& traj) {
    const auto& pts = traj.points;
    const std::size_t n = pts.size();
    std::vector<double> rate(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t lo = i == 0 ? 0 : i - 1;
        const std::size_t hi = i + 1 == n ? i : i + 1;
        rate[i] = std::abs((pts[hi].energy - pts[lo].energy) / (pts[hi].gamma - pts[lo].gamma));
    }
    return rate;
}

}  // namespace

std::optional<ResonanceResult> find_stabilization(const CsmSweep& sweep, int trajectory_id,
                                                  const StabilizationOptions& opts) {
    const Trajectory* traj = nullptr;
    for (const auto& t : sweep.trajectories)
        if (t.id == trajectory_id) traj = &t;
    if (!traj) throw validation_error("find_stabilization: unknown trajectory id");
    const auto& pts = traj->points;
    if (pts.size() < 3) throw validation_error("find_stabilization: need at least three angles");

    const std::vector<double> rate = trajectory_rates(*traj);
    std::size_t best = 0;
    double best_rate = std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i + 1 < pts.size(); ++i)
        if (rate[i] < best_rate) {
            best_rate = rate[i];
            best = i;
        }
    // Interior local minimum required; monotone rate curves carry no signal.
    if (best == 0 || rate[best] > rate[best - 1] || rate[best] > rate[best + 1])
        return std::nullopt;

    ResonanceResult res;
    res.method = ResonanceResult::Method::stabilization;

    // Parabolic vertex of the rate through the minimizer and its neighbours.
    const double x0 = pts[best - 1].gamma, x1 = pts[best].gamma, x2 = pts[best + 1].gamma;
    const double y0 = rate[best - 1], y1 = rate[best], y2 = rate[best + 1];
    const double denom = (x0 - x1) * (x0 - x2) * (x1 - x2);
    if (denom != 0.0) {
        const double a = (x2 * (y1 - y0) + x1 * (y0 - y2) + x0 * (y2 - y1)) / denom;
        const double b =
            (x2 * x2 * (y0 - y1) + x1 * x1 * (y2 - y0) + x0 * x0 * (y1 - y2)) / denom;
        if (a > 0.0) res.gamma_interpolated = -b / (2.0 * a);
    }

    std::size_t chosen = best;
    if (opts.snap_to_integer_degrees && res.gamma_interpolated) {
        const double target_deg = std::round(*res.gamma_interpolated * 180.0 / kPi);
        double best_d = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < pts.size(); ++i) {
            const double d = std::abs(pts[i].gamma * 180.0 / kPi - target_deg);
            if (d < best_d) {
                best_d = d;
                chosen = i;
            }
        }
    }
    res.energy = pts[chosen].energy;
    res.gamma_opt = pts[chosen].gamma;
    res.rate = rate[chosen];
    return res;
}

void write_sweep_csv(const CsmSweep& sweep, std::ostream& out) {
    out << "gamma_deg,trajectory_id,re_E,im_E,rate\n";
    for (const auto& traj : sweep.trajectories) {
        const std::vector<double> rate = trajectory_rates(traj);
        for (std::size_t i = 0; i < traj.points.size(); ++i) {
            const auto& p = traj.points[i];
            out << p.gamma * 180.0 / kPi << ',' << traj.id << ',' << p.energy.real() << ','
                << p.energy.imag() << ',' << rate[i] << '\n';
        }
    }
}

}  // namespace qres
