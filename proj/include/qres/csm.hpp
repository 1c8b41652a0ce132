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
#include <vector>

#include "qres/ihhl.hpp"
#include "qres/linalg.hpp"

namespace qres {

/// Nodeless radial Gaussians u_i(r) = r^(l+1) exp(-r^2 / (2 b_i^2)) on a
/// geometric width grid b_1, b_1*ratio, ...
struct GaussianBasis {
    int l = 0;
    double b1 = 0.5;
    double ratio = 1.6;
    int n = 12;

    std::vector<double> widths() const;
    void validate() const;
};

struct GaussianPotentialTerm {
    double depth;  // MeV; negative attracts
    double range;  // fm
};

struct TwoBodySystem {
    double kinetic_scale = 1.0;  // hbar^2 / (2 mu), MeV fm^2
    std::vector<GaussianPotentialTerm> potential;
    double coulomb_strength = 0.0;  // Z1 Z2 e^2, MeV fm
    double coupling = 1.0;          // multiplier on the nuclear part

    void validate() const;
};

/// The synthetic benchmark: attractive core plus repulsive barrier, reduced
/// units. Holds one bound state near -1.79 and a narrow resonance near
/// 0.461 - 0.00067i (both established by dense diagonalization).
TwoBodySystem barrier_benchmark();

/// Overlap N_ij, normalized so N_ii = 1; symmetric positive definite.
RMatrix overlap_matrix(const GaussianBasis& basis);

/// Complex-scaled Hamiltonian over the Gaussian basis:
///   H(gamma) = e^{-2i gamma} T + lambda * sum_k V_k(r e^{i gamma})
///            + e^{-i gamma} V_C
/// A scaled Gaussian stays a Gaussian with complex range, so every element is
/// closed-form. H(0) is real symmetric. Requires |gamma| < pi/4.
/// Positive gamma rotates the continuum into the lower half plane; the
/// sweep layer maps quoted (negative) angles onto this convention.
GeneralizedEigenProblem build_hamiltonian(const TwoBodySystem& sys, const GaussianBasis& basis,
                                          double gamma);

enum class SweepSolver { dense, ihhl };

struct TrajectoryPoint {
    double gamma;  // quoted angle, radians
    cdouble energy;
    bool ambiguous = false;  // tracking tie within tolerance at this angle
};

struct Trajectory {
    int id = 0;
    std::vector<TrajectoryPoint> points;
};

struct CsmSweep {
    std::vector<double> gammas;  // quoted angles, radians
    std::vector<Trajectory> trajectories;
};

struct SweepOptions {
    SweepSolver solver = SweepSolver::dense;
    double tie_tolerance = 1e-6;  // MeV distance below which tracking is a tie
    IhhlConfig ihhl;              // ihhl solver mode
    std::optional<CVector> seed_phi;   // ihhl mode: start vector at the first angle
    std::optional<cdouble> seed_energy;
};

/// Eigenvalue trajectories over scaling angles. Angles follow the quoted
/// convention of the reference data: negative angles expose resonances in the
/// lower half plane (the builder receives -gamma). Dense mode tracks the full
/// spectrum across angles by nearest-eigenvalue matching with eigenvector
/// overlap as tie-break; ihhl mode follows one trajectory seeded by the
/// previous angle's eigenpair.
CsmSweep sweep_angles(const TwoBodySystem& sys, const GaussianBasis& basis,
                      const std::vector<double>& gammas, const SweepOptions& opts = {});

struct ResonanceResult {
    cdouble energy{0.0, 0.0};  // MeV
    double gamma_opt = 0.0;    // radians, quoted convention
    double rate = 0.0;         // |dE/dgamma| at the optimum
    enum class Method { stabilization, direct } method = Method::stabilization;
    std::optional<double> gamma_interpolated;  // parabolic vertex of the rate curve
};

struct StabilizationOptions {
    /// Pick the swept angle nearest the integer degree closest to the
    /// interpolated optimum instead of the raw grid minimizer.
    bool snap_to_integer_degrees = false;
};

/// Stabilization condition: |dE/dgamma| by central differences on the swept
/// grid, minimized over interior points. Returns nullopt when the rate is
/// monotone (no interior minimum - no resonance signal).
std::optional<ResonanceResult> find_stabilization(const CsmSweep& sweep, int trajectory_id,
                                                  const StabilizationOptions& opts = {});

/// CSV columns gamma_deg, trajectory_id, re_E, im_E, rate.
void write_sweep_csv(const CsmSweep& sweep, std::ostream& out);

}  // namespace qres
