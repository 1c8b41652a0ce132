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

#include "qres/ec.hpp"

#include <cmath>

#include "qres/errors.hpp"
#include "qres/jsonio.hpp"

namespace qres {

double EcParameterPoint::at(const std::string& name) const {
    const auto it = couplings.find(name);
    if (it == couplings.end())
        throw validation_error("EcParameterPoint: missing coupling \"" + name + "\"");
    return it->second;
}

nlohmann::json EcParameterPoint::to_json() const {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [k, v] : couplings) j[k] = v;
    return j;
}

EcParameterPoint EcParameterPoint::from_json(const nlohmann::json& j) {
    EcParameterPoint p;
    for (auto it = j.begin(); it != j.end(); ++it) p.couplings[it.key()] = it.value().get<double>();
    return p;
}

nlohmann::json EcTrainingSet::to_json() const {
    nlohmann::json pts = nlohmann::json::array();
    for (const auto& p : points) pts.push_back(p.to_json());
    nlohmann::json vecs = nlohmann::json::array();
    for (const auto& v : vectors) vecs.push_back(vector_to_json(v));
    nlohmann::json j{{"points", pts},
                     {"vectors", vecs},
                     {"source", source == TrainingSource::dense ? "dense" : "qnn"}};
    if (basis_metric.size() != 0) j["basis_metric"] = matrix_to_json(basis_metric);
    return j;
}

EcTrainingSet EcTrainingSet::from_json(const nlohmann::json& j) {
    EcTrainingSet out;
    for (const auto& p : j.at("points")) out.points.push_back(EcParameterPoint::from_json(p));
    for (const auto& v : j.at("vectors")) out.vectors.push_back(cvector_from_json(v));
    const std::string s = j.at("source").get<std::string>();
    if (s == "dense") out.source = TrainingSource::dense;
    else if (s == "qnn") out.source = TrainingSource::qnn;
    else throw validation_error("EcTrainingSet: unknown source \"" + s + "\"");
    if (j.contains("basis_metric")) out.basis_metric = cmatrix_from_json(j["basis_metric"]);
    return out;
}

namespace {

// Pad (H, N) to the next power of two. The padded H block sits well above the
// ground state so the minimizer has no incentive to leak into it.
void pad_problem(CMatrix& h, CMatrix& n) {
    const Eigen::Index dim = h.rows();
    Eigen::Index padded = 1;
    while (padded < dim) padded <<= 1;
    if (padded == dim) return;
    const double lift = 10.0 * std::max(1.0, max_abs(h));
    CMatrix h2 = CMatrix::Zero(padded, padded);
    CMatrix n2 = CMatrix::Identity(padded, padded);
    h2.topLeftCorner(dim, dim) = h;
    h2.bottomRightCorner(padded - dim, padded - dim) =
        lift * CMatrix::Identity(padded - dim, padded - dim);
    n2.topLeftCorner(dim, dim) = n;
    h = std::move(h2);
    n = std::move(n2);
}

CVector normalize_in_metric(CVector v, const CMatrix& metric) {
    const cdouble norm2 = metric.size() == 0 ? cdouble(v.squaredNorm(), 0.0)
                                             : cdouble((v.adjoint() * metric * v)(0, 0));
    return v / std::sqrt(norm2.real());
}

}  // namespace

EcTrainingSet train_vectors(const ProblemFamily& family,
                            const std::vector<EcParameterPoint>& points, TrainingSource source,
                            const TrainVectorsOptions& opts) {
    if (points.empty()) throw validation_error("train_vectors: no training points");

    EcTrainingSet out;
    out.points = points;
    out.source = source;

    for (std::size_t idx = 0; idx < points.size(); ++idx) {
        GeneralizedEigenProblem prob = family(points[idx]);
        prob.validate();
        if (idx == 0) out.basis_metric = prob.n;

        // Dense ground state doubles as the bound-ness oracle.
        Eigen::GeneralizedSelfAdjointEigenSolver<CMatrix> ges(prob.h, prob.n);
        const double ground = ges.eigenvalues()(0);

        if (source == TrainingSource::dense) {
            if (ground >= opts.bound_threshold)
                throw numeric_error("train_vectors: point " + std::to_string(idx) +
                                    " is unbound (E0 = " + std::to_string(ground) + ")");
            out.vectors.push_back(normalize_in_metric(ges.eigenvectors().col(0), prob.n));
            continue;
        }

        // qnn source: variational state on the padded problem, truncated back.
        CMatrix h = prob.h, n = prob.n;
        pad_problem(h, n);
        const int n_qubits = log2_exact(h.rows());
        TrainingConfig cfg = opts.qnn;
        cfg.relaxed = true;
        const TrainResult r = train(h, n, AnsatzLayout::standard(n_qubits, opts.qnn_layers), cfg);
        CVector v = r.state.to_eigen().head(prob.h.rows());
        out.vectors.push_back(normalize_in_metric(std::move(v), prob.n));
    }
    return out;
}

EcProjection project_ec(const EcTrainingSet& train, const GeneralizedEigenProblem& target,
                        double condition_cap) {
    target.validate();
    if (train.vectors.empty()) throw validation_error("project_ec: empty training set");
    const Eigen::Index dim = target.h.rows();
    for (const auto& v : train.vectors)
        if (v.size() != dim)
            throw validation_error("project_ec: training vector dimension mismatch");

    std::vector<int> alive(train.vectors.size());
    for (std::size_t i = 0; i < alive.size(); ++i) alive[i] = static_cast<int>(i);

    EcProjection out;
    for (;;) {
        const Eigen::Index k = static_cast<Eigen::Index>(alive.size());
        CMatrix hec(k, k), nec(k, k);
        for (Eigen::Index i = 0; i < k; ++i) {
            const CVector& vi = train.vectors[alive[i]];
            const CVector hv_target = target.h * vi;
            const CVector nv_target = target.n * vi;
            for (Eigen::Index j = 0; j < k; ++j) {
                const CVector& vj = train.vectors[alive[j]];
                hec(j, i) = vj.transpose() * hv_target;  // c-products, no conjugation
                nec(j, i) = vj.transpose() * nv_target;
            }
        }
        out.metric_condition = condition_number(nec);
        if (out.metric_condition <= condition_cap || k <= 1) {
            out.small.h = std::move(hec);
            out.small.n = std::move(nec);
            out.small.label = "ec projection";
            if (out.metric_condition > condition_cap)
                throw numeric_error("project_ec: metric condition " +
                                    std::to_string(out.metric_condition) +
                                    " still above cap after trimming");
            return out;
        }
        // Trim the vector dominating the smallest singular direction of N^EC.
        Eigen::JacobiSVD<CMatrix> svd(nec, Eigen::ComputeThinV);
        const CVector worst = svd.matrixV().col(k - 1);
        Eigen::Index drop;
        worst.cwiseAbs().maxCoeff(&drop);
        out.dropped.push_back(alive[drop]);
        alive.erase(alive.begin() + drop);
    }
}

ResonanceResult ec_resonance(const GeneralizedEigenProblem& small, double gamma,
                             const IhhlConfig& cfg, std::optional<CVector> phi0,
                             std::optional<cdouble> e0) {
    const CVector start = phi0 ? *phi0 : CVector(CVector::Ones(small.h.rows()));
    const IhhlResult r = ihhl_iterate(small, start, e0, cfg);
    if (!r.converged)
        throw numeric_error("ec_resonance: eigensolver did not converge at the target angle");
    ResonanceResult res;
    res.energy = r.energy;
    res.gamma_opt = gamma;
    res.rate = 0.0;
    res.method = ResonanceResult::Method::direct;
    return res;
}

ResonanceResult ec_resonance(const std::vector<std::pair<double, GeneralizedEigenProblem>>& swept,
                             const IhhlConfig& cfg, std::optional<CVector> phi0,
                             std::optional<cdouble> e0) {
    if (swept.size() < 3)
        throw validation_error("ec_resonance: sweep needs at least three angles");

    CsmSweep sweep;
    sweep.trajectories.resize(1);
    sweep.trajectories[0].id = 0;
    std::optional<CVector> phi = phi0;
    std::optional<cdouble> energy = e0;
    for (const auto& [gamma, small] : swept) {
        sweep.gammas.push_back(gamma);
        const CVector start = phi ? *phi : CVector(CVector::Ones(small.h.rows()));
        const IhhlResult r = ihhl_iterate(small, start, energy, cfg);
        if (!r.converged)
            throw numeric_error("ec_resonance: eigensolver did not converge at gamma = " +
                                std::to_string(gamma));
        sweep.trajectories[0].points.push_back({gamma, r.energy, false});
        phi = r.phi;
        energy = r.energy;
    }
    const auto res = find_stabilization(sweep, 0);
    if (!res)
        throw numeric_error("ec_resonance: no interior rate minimum across the swept angles");
    return *res;
}

}  // namespace qres
