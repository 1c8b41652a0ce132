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

#include <json.hpp>

#include "qres/circuit.hpp"
#include "qres/linalg.hpp"
#include "qres/pauli.hpp"

// Wire formats. Complex scalars are [re, im] pairs everywhere; matrices are
// nested row-major arrays of pairs; statevectors are arrays of pairs indexed
// ascending.

namespace qres {

using json = nlohmann::json;

json complex_to_json(cdouble z);
cdouble complex_from_json(const json& j);

json vector_to_json(const CVector& v);
CVector cvector_from_json(const json& j);

json matrix_to_json(const CMatrix& m);
CMatrix cmatrix_from_json(const json& j);

json statevector_to_json(const StateVector& s);
StateVector statevector_from_json(const json& j);

/// Terms as {"coeff": [re, im], "string": "XZIY"} with labels qubit-0-last.
json pauli_sum_to_json(const PauliSum& s);
PauliSum pauli_sum_from_json(const json& j);

json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

}  // namespace qres
