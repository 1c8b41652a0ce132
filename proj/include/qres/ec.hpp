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

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qres/circuit.hpp"
#include "qres/csm.hpp"
#include "qres/ihhl.hpp"
#include "qres/vqe.hpp"

namespace qres {

/// Named couplings of one training (or target) Hamiltonian, e.g.
/// {"lambda": 1.4, "barrier": 0.9}.
struct EcParameterPoint {
    std::map<std::string, double> couplings;

    double at(const std::string& name) const;
    nlohmann::json to_json() const;
    static EcParameterPoint from_json(const nlohmann::json& j);
};

enum class TrainingSource { dense, qnn };

/// Ground-state vectors computed at bound parameter points, the raw material
/// of the continuation subspace. Vectors are normalized in the full-space
/// basis metric.
struct EcTrainingSet {
    std::vector<EcParameterPoint> points;
    std::vector<CVector> vectors;
    TrainingSource source = TrainingSource::dense;
    CMatrix basis_metric;  // empty means identity

    nlohmann::json to_json() const;
    static EcTrainingSet from_json(const nlohmann::json& j);
};

using ProblemFamily = std::function<GeneralizedEigenProblem(const EcParameterPoint&)>;

struct TrainVectorsOptions {
    /// A training point is bound when its ground energy is below this.
    double bound_threshold = 0.0;
    /// QNN-source training knobs. The relaxed flag is honored: an
    /// iteration-cap state is accepted without convergence.
    TrainingConfig qnn;
    int qnn_layers = 4;
};

/// Ground-state vector per parameter point. source = dense solves the
/// generalized problem exactly and rejects unbound points; source = qnn runs
/// the variational trainer in relaxed-precision mode on the same problem
/// (padded to a power of two).
EcTrainingSet train_vectors(const ProblemFamily& family,
                            const std::vector<EcParameterPoint>& points, TrainingSource source,
                            const TrainVectorsOptions& opts = {});

struct EcProjection {
    GeneralizedEigenProblem small;
    std::vector<int> dropped;  // training vectors trimmed for rank deficiency
    double metric_condition = 0.0;
};

/// c-product projection of the target onto the training span:
///   H^EC_ij = phi_i^T H_target phi_j,  N^EC_ij = phi_i^T N_target phi_j
/// (no conjugation anywhere). When cond(N^EC) exceeds the cap, the most
/// linearly dependent training vector is trimmed and the projection retried.
EcProjection project_ec(const EcTrainingSet& train, const GeneralizedEigenProblem& target,
                        double condition_cap = 1e10);

/// Run the iterative eigensolver on a single projected problem at a known
/// quoted angle.
ResonanceResult ec_resonance(const GeneralizedEigenProblem& small, double gamma,
                             const IhhlConfig& cfg, std::optional<CVector> phi0 = {},
                             std::optional<cdouble> e0 = {});

/// Sweep variant: one projected problem per quoted angle; the eigensolver is
/// re-seeded with the previous angle's eigenpair and the stabilization
/// condition picks the answer.
ResonanceResult ec_resonance(const std::vector<std::pair<double, GeneralizedEigenProblem>>& swept,
                             const IhhlConfig& cfg, std::optional<CVector> phi0 = {},
                             std::optional<cdouble> e0 = {});

}  // namespace qres
