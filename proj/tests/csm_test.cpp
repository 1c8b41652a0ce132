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

#include <doctest.h>

#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

#include "qres/errors.hpp"
#include "test_support.hpp"

using namespace qres;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kDeg = kPi / 180.0;

// ---- quadrature oracle (independent of the closed forms under test) ----
// Composite Simpson with panel doubling until the value settles; robust on
// smooth Gaussian integrands at any width ratio.

cdouble composite_simpson(const std::function<cdouble(double)>& f, double a, double b,
                          std::size_t panels) {
    const double h = (b - a) / static_cast<double>(panels);
    cdouble acc = f(a) + f(b);
    for (std::size_t i = 1; i < panels; ++i)
        acc += (i % 2 ? 4.0 : 2.0) * f(a + h * static_cast<double>(i));
    return acc * (h / 3.0);
}

cdouble integrate(const std::function<cdouble(double)>& f, double a, double b,
                  double rtol = 1e-12) {
    cdouble prev = composite_simpson(f, a, b, 64);
    for (std::size_t panels = 128; panels <= (std::size_t{1} << 21); panels *= 2) {
        const cdouble cur = composite_simpson(f, a, b, panels);
        if (std::abs(cur - prev) <= rtol * (1.0 + std::abs(cur))) return cur;
        prev = cur;
    }
    return prev;
}

double radial_u(double r, int l, double b) {
    return std::pow(r, l + 1) * std::exp(-r * r / (2.0 * b * b));
}

double radial_du(double r, int l, double b) {
    return ((l + 1) * std::pow(r, l) - std::pow(r, l + 2) / (b * b)) *
           std::exp(-r * r / (2.0 * b * b));
}

// upper cutoff where the pair's Gaussian weight is far below double precision
double pair_cutoff(double bi, double bj) {
    const double c = 0.5 / (bi * bi) + 0.5 / (bj * bj);
    return 12.0 / std::sqrt(c);
}

}  // namespace

TEST_CASE("overlap: single width, unit diagonal, closed form vs quadrature") {
    GaussianBasis one;
    one.l = 0;
    one.b1 = 0.8;
    one.n = 1;
    const RMatrix n1 = overlap_matrix(one);
    CHECK(n1.rows() == 1);
    CHECK(n1(0, 0) == doctest::Approx(1.0).epsilon(1e-15));

    GaussianBasis basis;
    basis.l = 0;
    basis.b1 = 1.0;
    basis.ratio = 2.0;
    basis.n = 2;
    const RMatrix n = overlap_matrix(basis);
    CHECK(n(0, 0) == doctest::Approx(1.0));
    CHECK(n(1, 1) == doctest::Approx(1.0));

    // quadrature oracle for the off-diagonal element
    const auto bs = basis.widths();
    auto uu = [&](int i, int j) {
        return integrate(
                   [&](double r) {
                       return cdouble(radial_u(r, 0, bs[i]) * radial_u(r, 0, bs[j]), 0.0);
                   },
                   0.0, pair_cutoff(bs[i], bs[j]))
            .real();
    };
    const double expected = uu(0, 1) / std::sqrt(uu(0, 0) * uu(1, 1));
    CHECK(std::abs(n(0, 1) - expected) <= 1e-10 * std::abs(expected));
    CHECK(n(0, 1) == doctest::Approx(n(1, 0)));
}

TEST_CASE("every closed-form element matches adaptive quadrature, l = 0..2, complex angle") {
    const TwoBodySystem sys = [&] {
        TwoBodySystem s;
        s.kinetic_scale = 1.0;
        s.potential = {{-8.0, 3.2}, {4.0, 5.6}};
        s.coulomb_strength = 1.44;  // exercise the Coulomb path too
        return s;
    }();

    for (const auto& [l, gamma] : std::vector<std::pair<int, double>>{
             {0, 0.06}, {1, 0.06}, {2, 0.06}, {0, 0.0}}) {
        GaussianBasis basis;
        basis.l = l;
        basis.b1 = 0.7;
        basis.ratio = 1.9;
        basis.n = 4;
        const auto bs = basis.widths();

        const GeneralizedEigenProblem prob = build_hamiltonian(sys, basis, gamma);
        const cdouble kin_phase = std::exp(cdouble(0, -2.0 * gamma));
        const cdouble coul_phase = std::exp(cdouble(0, -gamma));
        const cdouble range_phase = std::exp(cdouble(0, 2.0 * gamma));
        CMatrix h_oracle(basis.n, basis.n);

        for (int i = 0; i < basis.n; ++i)
            for (int j = i; j < basis.n; ++j) {
                const double rmax = pair_cutoff(bs[i], bs[j]);
                auto norm2 = [&](int k) {
                    return integrate(
                               [&](double r) {
                                   const double u = radial_u(r, l, bs[k]);
                                   return cdouble(u * u, 0.0);
                               },
                               0.0, pair_cutoff(bs[k], bs[k]))
                        .real();
                };
                const double inv_norm = 1.0 / std::sqrt(norm2(i) * norm2(j));

                // kinetic via the symmetric gradient form (independent of the
                // closed-form route): int u_i' u_j' + l(l+1)/r^2 u_i u_j
                const cdouble kin =
                    kin_phase * sys.kinetic_scale *
                    integrate(
                        [&](double r) {
                            const double der = radial_du(r, l, bs[i]) * radial_du(r, l, bs[j]);
                            const double cent =
                                r == 0.0 ? 0.0
                                         : l * (l + 1) / (r * r) * radial_u(r, l, bs[i]) *
                                               radial_u(r, l, bs[j]);
                            return cdouble(der + cent, 0.0);
                        },
                        0.0, rmax) *
                    inv_norm;

                cdouble pot{0.0, 0.0};
                for (const auto& term : sys.potential) {
                    const cdouble kappa = range_phase / (term.range * term.range);
                    pot += sys.coupling * term.depth *
                           integrate(
                               [&](double r) {
                                   return radial_u(r, l, bs[i]) * radial_u(r, l, bs[j]) *
                                          std::exp(-kappa * r * r);
                               },
                               0.0, rmax) *
                           inv_norm;
                }

                const cdouble coul =
                    coul_phase * sys.coulomb_strength *
                    integrate(
                        [&](double r) {
                            return cdouble(
                                r == 0.0 ? 0.0
                                         : radial_u(r, l, bs[i]) * radial_u(r, l, bs[j]) / r,
                                0.0);
                        },
                        0.0, rmax) *
                    inv_norm;

                const cdouble expected = kin + pot + coul;
                h_oracle(i, j) = h_oracle(j, i) = expected;
                CHECK(std::abs(prob.h(i, j) - expected) <= 1e-10 * std::abs(expected));
            }

        // at gamma = 0 the closed-form H is real symmetric and its bound
        // energy agrees with the quadrature-built operator
        if (gamma == 0.0) {
            CHECK(max_abs(CMatrix(prob.h.imag().cast<cdouble>())) == 0.0);
            Eigen::GeneralizedSelfAdjointEigenSolver<CMatrix> closed(prob.h, prob.n);
            Eigen::GeneralizedSelfAdjointEigenSolver<CMatrix> oracle_es(
                CMatrix(h_oracle.real().cast<cdouble>()), prob.n);
            CHECK(closed.eigenvalues()(0) < 0.0);  // bound ground state
            CHECK(std::abs(closed.eigenvalues()(0) - oracle_es.eigenvalues()(0)) <= 1e-8);
        }
    }
}

TEST_CASE("scaling laws: kinetic block e^{-2i gamma}, coulomb block e^{-i gamma}") {
    TwoBodySystem kinetic_only;
    kinetic_only.potential = {{0.0, 1.0}};  // zero-depth placeholder keeps the system valid
    GaussianBasis basis;
    basis.b1 = 0.6;
    basis.ratio = 1.7;
    basis.n = 5;

    const double gamma = 0.11;
    const CMatrix t0 = build_hamiltonian(kinetic_only, basis, 0.0).h;
    const CMatrix tg = build_hamiltonian(kinetic_only, basis, gamma).h;
    CHECK(test::max_abs_diff(tg, std::exp(cdouble(0, -2 * gamma)) * t0) < 1e-12);

    TwoBodySystem coulomb_only = kinetic_only;
    coulomb_only.kinetic_scale = 1e-30;  // suppress T against the Coulomb block
    coulomb_only.coulomb_strength = 2.5;
    const CMatrix c0 = build_hamiltonian(coulomb_only, basis, 0.0).h;
    const CMatrix cg = build_hamiltonian(coulomb_only, basis, gamma).h;
    CHECK(test::max_abs_diff(cg, std::exp(cdouble(0, -gamma)) * c0) < 1e-10);

    // gamma -> 0 continuity into the real symmetric H(0)
    const CMatrix h0 = build_hamiltonian(barrier_benchmark(), basis, 0.0).h;
    CHECK(max_abs(h0.imag().cast<cdouble>()) == 0.0);
    double prev = test::max_abs_diff(build_hamiltonian(barrier_benchmark(), basis, 0.02).h, h0);
    for (double g : {0.01, 0.005, 0.0025}) {
        const double d = test::max_abs_diff(build_hamiltonian(barrier_benchmark(), basis, g).h, h0);
        CHECK(d < prev);
        prev = d;
    }

    CHECK_THROWS_AS(build_hamiltonian(barrier_benchmark(), basis, 0.8), validation_error);
}

namespace {

GaussianBasis lab_basis(int n) {
    GaussianBasis b;
    b.l = 0;
    b.b1 = 0.55;
    b.ratio = 1.26;
    b.n = n;
    return b;
}

// quoted (negative) angles; the grid runs past the stabilization plateau
// near -11 degrees so the rate minimum is interior
std::vector<double> quoted_grid() {
    std::vector<double> g;
    for (int d = 1; d <= 14; ++d) g.push_back(-d * kDeg);
    return g;
}

const Trajectory& trajectory_near(const CsmSweep& sweep, cdouble target) {
    double best = std::numeric_limits<double>::infinity();
    const Trajectory* out = nullptr;
    for (const auto& t : sweep.trajectories) {
        const double d = std::abs(t.points.front().energy - target);
        if (d < best) {
            best = d;
            out = &t;
        }
    }
    REQUIRE(out != nullptr);
    return *out;
}

}  // namespace

TEST_CASE("sweep: bound state invariant, resonance rate has an interior minimum") {
    const CsmSweep sweep = sweep_angles(barrier_benchmark(), lab_basis(12), quoted_grid(), {});

    // invariance holds over the default angle range (out to -10 degrees);
    // the longer tail of the sweep only serves the stabilization scan
    const Trajectory& bound = trajectory_near(sweep, {-1.79, 0.0});
    double spread = 0.0;
    for (std::size_t i = 0; i < 10; ++i)
        spread = std::max(spread, std::abs(bound.points[i].energy - bound.points[0].energy));
    CHECK(spread <= 1e-6);

    const Trajectory& res = trajectory_near(sweep, {0.46, 0.0});
    const auto stab = find_stabilization(sweep, res.id);
    REQUIRE(stab.has_value());
    CHECK(stab->energy.real() == doctest::Approx(0.4612).epsilon(2e-3));
    CHECK(stab->energy.imag() < 0.0);
    CHECK(stab->gamma_opt < 0.0);

    // theta-independence at the plateau: adjacent angles agree to 1e-4
    for (std::size_t i = 0; i + 1 < res.points.size(); ++i) {
        if (res.points[i].gamma != stab->gamma_opt) continue;
        CHECK(std::abs(res.points[i].energy - res.points[i + 1].energy) <= 1e-4);
        CHECK(std::abs(res.points[i].energy - res.points[i - 1].energy) <= 1e-4);
    }
}

TEST_CASE("sweep: continuum rotates by 2 gamma into the lower half plane") {
    // wide-span basis resolves the low-lying rotated continuum
    GaussianBasis wide;
    wide.l = 0;
    wide.b1 = 0.5;
    wide.ratio = 1.6;
    wide.n = 16;
    std::vector<double> grid = {-2 * kDeg, -4 * kDeg, -6 * kDeg};
    const CsmSweep sweep = sweep_angles(barrier_benchmark(), wide, grid, {});

    // lowest continuum line = smallest |E| trajectory clear of bound state and resonance
    const Trajectory* lowest = nullptr;
    for (const auto& t : sweep.trajectories) {
        const cdouble e0 = t.points.front().energy;
        if (e0.real() < 1e-8 || std::abs(e0 - cdouble{0.4612, 0.0}) < 0.05) continue;
        if (!lowest || std::abs(e0) < std::abs(lowest->points.front().energy)) lowest = &t;
    }
    REQUIRE(lowest != nullptr);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double arg = std::arg(lowest->points[i].energy);
        CHECK(arg < 0.0);  // lower half plane
        CHECK(std::abs(arg - 2.0 * grid[i]) <= 0.05 * std::abs(2.0 * grid[i]));
    }
}

TEST_CASE("ihhl sweep mode follows one trajectory seeded across angles") {
    SweepOptions opts;
    opts.solver = SweepSolver::ihhl;
    opts.ihhl.tolerance = 1e-10;
    // small beta keeps the shift E - beta next to the tracked resonance,
    // clear of the rotated-continuum states below it
    opts.ihhl.beta = {0.05, 0.0};
    std::vector<double> grid = {-3 * kDeg, -4 * kDeg, -5 * kDeg};

    // seed from the dense solution at the first angle
    const GeneralizedEigenProblem p0 =
        build_hamiltonian(barrier_benchmark(), lab_basis(12), 3 * kDeg);
    Eigen::ComplexEigenSolver<CMatrix> es(reduce_generalized(p0).m);
    Eigen::Index pick = 0;
    double best = 1e300;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
        if (std::abs(es.eigenvalues()(i) - cdouble{0.4612, 0.0}) < best) {
            best = std::abs(es.eigenvalues()(i) - cdouble{0.4612, 0.0});
            pick = i;
        }
    opts.seed_phi = es.eigenvectors().col(pick);
    opts.seed_energy = es.eigenvalues()(pick);

    const CsmSweep sweep = sweep_angles(barrier_benchmark(), lab_basis(12), grid, opts);
    REQUIRE(sweep.trajectories.size() == 1);
    REQUIRE(sweep.trajectories[0].points.size() == 3);
    for (const auto& pt : sweep.trajectories[0].points) {
        CHECK(pt.energy.real() == doctest::Approx(0.4612).epsilon(5e-3));
        CHECK(pt.energy.imag() < 0.0);
    }
}

TEST_CASE("stabilization on a constructed parabolic trajectory") {
    CsmSweep sweep;
    Trajectory t;
    t.id = 0;
    const double g0 = -6 * kDeg;
    for (int d = 1; d <= 10; ++d) {
        const double g = -d * kDeg;
        const cdouble e = cdouble{0.5, -0.01} + 3.0 * (g - g0) * (g - g0);
        t.points.push_back({g, e, false});
        sweep.gammas.push_back(g);
    }
    sweep.trajectories.push_back(t);

    const auto res = find_stabilization(sweep, 0);
    REQUIRE(res.has_value());
    CHECK(res->gamma_opt == doctest::Approx(g0).epsilon(1e-12));
    CHECK(res->rate < 0.2);
    REQUIRE(res->gamma_interpolated.has_value());
    CHECK(*res->gamma_interpolated == doctest::Approx(g0).epsilon(1e-6));

    StabilizationOptions snap;
    snap.snap_to_integer_degrees = true;
    const auto snapped = find_stabilization(sweep, 0, snap);
    REQUIRE(snapped.has_value());
    CHECK(snapped->gamma_opt == doctest::Approx(g0));

    // strictly monotone rate: no interior minimum, no resonance signal
    CsmSweep mono;
    Trajectory m;
    m.id = 0;
    for (int d = 1; d <= 6; ++d) {
        const double g = -d * kDeg;
        m.points.push_back({g, cdouble(std::exp(5.0 * g), 0.0), false});
        mono.gammas.push_back(g);
    }
    mono.trajectories.push_back(m);
    CHECK_FALSE(find_stabilization(mono, 0).has_value());
    CHECK_THROWS_AS(find_stabilization(mono, 99), validation_error);
}

TEST_CASE("sweep csv schema") {
    CsmSweep sweep;
    Trajectory t;
    t.id = 0;
    t.points.push_back({-1 * kDeg, {0.5, -0.01}, false});
    t.points.push_back({-2 * kDeg, {0.5, -0.02}, false});
    sweep.trajectories.push_back(t);
    std::ostringstream os;
    write_sweep_csv(sweep, os);
    const std::string text = os.str();
    CHECK(text.rfind("gamma_deg,trajectory_id,re_E,im_E,rate\n", 0) == 0);
    CHECK(text.find("-1,0,0.5,-0.01,") != std::string::npos);
}

TEST_CASE("sweep input validation") {
    CHECK_THROWS_AS(
        sweep_angles(barrier_benchmark(), lab_basis(12), {-1 * kDeg, -2 * kDeg}, {}),
        validation_error);
    CHECK_THROWS_AS(
        sweep_angles(barrier_benchmark(), lab_basis(12), {-1 * kDeg, -3 * kDeg, -2 * kDeg}, {}),
        validation_error);
}
