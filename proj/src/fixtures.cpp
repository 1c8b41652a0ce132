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

#include "qres/fixtures.hpp"

#include <fstream>
#include <sstream>

#include "qres/errors.hpp"
#include "qres/jsonio.hpp"

namespace qres::detail {
const std::string& embedded_appendix_json();
const std::string& embedded_tables_json();
}  // namespace qres::detail

namespace qres {

namespace {

// Pinned over the byte content of the shipped fixture files.
constexpr std::uint64_t kAppendixChecksum = 0x1f4de7dfd5fc94c1ULL;
constexpr std::uint64_t kTablesChecksum = 0x144d0fe0e594ede7ULL;

double parse_decimal(const nlohmann::json& j) {
    // Stored as decimal strings so the published digits, not a re-serialized
    // double, are what ships.
    if (j.is_string()) return std::stod(j.get<std::string>());
    return j.get<double>();
}

CMatrix parse_decimal_cmatrix(const nlohmann::json& j, Eigen::Index dim) {
    CMatrix m(dim, dim);
    for (Eigen::Index r = 0; r < dim; ++r)
        for (Eigen::Index c = 0; c < dim; ++c)
            m(r, c) = cdouble(parse_decimal(j.at(r).at(c).at(0)),
                              parse_decimal(j.at(r).at(c).at(1)));
    return m;
}

AppendixFixture parse_appendix(const std::string& text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    AppendixFixture fx;
    fx.h_res = parse_decimal_cmatrix(j.at("h_res"), 4);
    fx.n_res = parse_decimal_cmatrix(j.at("n_res"), 4);
    fx.gamma_snap_deg = j.at("gamma_deg").get<double>();
    fx.beta = cdouble(j.at("beta").get<double>(), 0.0);
    const auto& phi = j.at("phi0");
    fx.phi0.resize(static_cast<Eigen::Index>(phi.size()));
    for (std::size_t i = 0; i < phi.size(); ++i)
        fx.phi0[static_cast<Eigen::Index>(i)] = cdouble(phi[i].get<double>(), 0.0);

    const auto& sets = j.at("parameter_sets");
    const auto& gp = j.at("gate_params");
    if (sets.size() != 4 || gp.size() != 4)
        throw numeric_error("appendix fixture: expected four parameter sets");
    for (int s = 0; s < 4; ++s) {
        fx.parameter_points[s] = EcParameterPoint::from_json(sets[s]);
        for (int l = 0; l < 3; ++l) {
            RMatrix m(6, 3);
            for (int q = 0; q < 6; ++q)
                for (int a = 0; a < 3; ++a) m(q, a) = parse_decimal(gp.at(s).at(l).at(q).at(a));
            fx.gate_params[s][l] = std::move(m);
        }
    }
    return fx;
}

}  // namespace

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string_view appendix_fixture_text() { return detail::embedded_appendix_json(); }
std::string_view tables_fixture_text() { return detail::embedded_tables_json(); }

std::pair<double, double> yng_depths(double v_even, double v_odd) {
    return {(v_even + v_odd) / 2.0, (v_even - v_odd) / 2.0};
}

const InteractionTables& interaction_tables() {
    static const InteractionTables tables = [] {
        const std::string_view text = tables_fixture_text();
        if (fnv1a64(text) != kTablesChecksum)
            throw numeric_error("interaction tables fixture is corrupted (checksum mismatch)");
        const nlohmann::json j = nlohmann::json::parse(text);
        InteractionTables t;
        t.fermi_momentum = j.at("yng").at("fermi_momentum").get<double>();
        for (const auto& row : j.at("yng").at("rows"))
            t.yng.push_back({row.at("beta").get<double>(), row.at("v_even").get<double>(),
                             row.at("v_odd").get<double>(), row.at("v_direct").get<double>(),
                             row.at("v_exchange").get<double>()});
        const auto& ll = j.at("lambda_lambda");
        for (int i = 0; i < 3; ++i) {
            t.lambda_lambda.ranges[i] = ll.at("ranges").at(i).get<double>();
            t.lambda_lambda.v0[i] = ll.at("v0").at(i).get<double>();
            t.lambda_lambda.v_sigma_sigma[i] = ll.at("v_sigma_sigma").at(i).get<double>();
        }
        t.volkov_label = j.at("volkov_label").get<std::string>();
        return t;
    }();
    return tables;
}

ParameterSet AppendixFixture::flattened_parameters(int set) const {
    if (set < 0 || set > 3) throw validation_error("appendix fixture: set index must be 0..3");
    ParameterSet p;
    p.values.reserve(54);
    for (int l = 0; l < 3; ++l)
        for (int q = 0; q < 6; ++q)
            for (int a = 0; a < 3; ++a) p.values.push_back(gate_params[set][l](q, a));
    return p;
}

AppendixFixture load_appendix() {
    const std::string_view text = appendix_fixture_text();
    if (fnv1a64(text) != kAppendixChecksum)
        throw numeric_error("appendix fixture is corrupted (checksum mismatch)");
    return parse_appendix(std::string(text));
}

AppendixFixture load_appendix_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw validation_error("cannot open fixture file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    if (fnv1a64(text) != kAppendixChecksum)
        throw numeric_error("appendix fixture file " + path +
                            " is corrupted (checksum mismatch)");
    return parse_appendix(text);
}

std::vector<ReferenceValue> reference_values() {
    const std::string note = "reported value; the 64-basis matrices behind it are unpublished";
    return {
        {"resonance_4plus", {4.08, -0.051}, "MeV", note},
        {"qnn_converged_energy", {-55.89, 0.0}, "MeV", note},
        {"dense_exact_energy", {-59.47, 0.0}, "MeV", note},
        {"binding_he5_lambda", {3.10, 0.0}, "MeV", note},
        {"binding_he6_lambda_lambda", {6.6, 0.0}, "MeV", note},
        {"binding_be9_lambda", {6.99, 0.0}, "MeV", note},
        {"b_N", {1.36, 0.0}, "fm", "size parameter of the alpha cluster"},
    };
}

}  // namespace qres
