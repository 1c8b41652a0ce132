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

#include "qres/jsonio.hpp"

#include <fstream>

#include "qres/errors.hpp"

namespace qres {

json complex_to_json(cdouble z) { return json::array({z.real(), z.imag()}); }

cdouble complex_from_json(const json& j) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw validation_error("expected complex scalar as [re, im]");
    return {j[0].get<double>(), j[1].get<double>()};
}

json vector_to_json(const CVector& v) {
    json out = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(complex_to_json(v[i]));
    return out;
}

CVector cvector_from_json(const json& j) {
    if (!j.is_array()) throw validation_error("expected array of [re, im] pairs");
    CVector v(static_cast<Eigen::Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i)
        v[static_cast<Eigen::Index>(i)] = complex_from_json(j[i]);
    return v;
}

json matrix_to_json(const CMatrix& m) {
    json out = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
        out.push_back(std::move(row));
    }
    return out;
}

CMatrix cmatrix_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw validation_error("expected nested array matrix");
    const Eigen::Index rows = static_cast<Eigen::Index>(j.size());
    const Eigen::Index cols = static_cast<Eigen::Index>(j[0].size());
    CMatrix m(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r) {
        if (static_cast<Eigen::Index>(j[r].size()) != cols)
            throw validation_error("ragged matrix rows");
        for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = complex_from_json(j[r][c]);
    }
    return m;
}

json statevector_to_json(const StateVector& s) {
    json out = json::array();
    for (const cdouble& a : s.amps) out.push_back(complex_to_json(a));
    return out;
}

StateVector statevector_from_json(const json& j) {
    return StateVector::from_eigen(cvector_from_json(j));
}

json pauli_sum_to_json(const PauliSum& s) {
    json terms = json::array();
    for (const auto& t : s.terms)
        terms.push_back({{"coeff", complex_to_json(t.coeff)}, {"string", t.string.label()}});
    return {{"n_qubits", s.n_qubits}, {"terms", std::move(terms)}};
}

PauliSum pauli_sum_from_json(const json& j) {
    PauliSum s;
    s.n_qubits = j.at("n_qubits").get<int>();
    for (const auto& t : j.at("terms")) {
        const std::string label = t.at("string").get<std::string>();
        s.terms.push_back(
            {complex_from_json(t.at("coeff")), PauliString::from_label(s.n_qubits, label)});
    }
    return normalized(std::move(s), 0.0);
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw validation_error("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw validation_error("malformed JSON in " + path + ": " + e.what());
    }
    return j;
}

void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw numeric_error("cannot write file: " + path);
    out << j.dump(2) << '\n';
}

}  // namespace qres
