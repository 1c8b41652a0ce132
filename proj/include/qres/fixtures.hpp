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

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qres/circuit.hpp"
#include "qres/ec.hpp"
#include "qres/linalg.hpp"

namespace qres {

struct YngRow {
    double beta;  // fm
    double v_even, v_odd;
    double v_direct, v_exchange;  // MeV
};

struct LambdaLambdaTable {
    std::array<double, 3> ranges;         // fm
    std::array<double, 3> v0;             // MeV
    std::array<double, 3> v_sigma_sigma;  // MeV
};

struct InteractionTables {
    std::vector<YngRow> yng;
    double fermi_momentum = 0.9;  // fm^-1
    LambdaLambdaTable lambda_lambda;
    std::string volkov_label;
};

/// Direct/exchange combinations of even/odd channel depths:
///   v_D = (vE + vO) / 2,  v_EX = (vE - vO) / 2.
std::pair<double, double> yng_depths(double v_even, double v_odd);

const InteractionTables& interaction_tables();

/// The reference 4x4 problem, its four gate-parameter tensors (3 layers of
/// 6 qubits x 3 angles each), the start vector and the run settings.
struct AppendixFixture {
    CMatrix h_res;
    CMatrix n_res;
    std::array<EcParameterPoint, 4> parameter_points;
    std::array<std::array<RMatrix, 3>, 4> gate_params;  // [set][layer](qubit, angle)
    CVector phi0;
    double gamma_snap_deg = -2.0;
    cdouble beta{1.0, 0.0};

    /// Flatten one set into ansatz slot order (layer, qubit, position).
    ParameterSet flattened_parameters(int set) const;
};

/// Load from the embedded copy; the byte checksum is verified first and a
/// mismatch raises numeric_error ("corrupted fixture").
AppendixFixture load_appendix();

/// Load from a shipped data file. The bytes must match the embedded copy
/// exactly (same checksum).
AppendixFixture load_appendix_file(const std::string& path);

struct ReferenceValue {
    std::string key;
    cdouble value;
    std::string unit;
    std::string note;
};

/// Reported numbers that cannot be recomputed from shipped data (the
/// underlying 64-basis matrices were never published); metadata only.
std::vector<ReferenceValue> reference_values();

/// Raw fixture texts and the checksum primitive, exposed for the CLI manifest
/// and the data-file consistency tests.
std::string_view appendix_fixture_text();
std::string_view tables_fixture_text();
std::uint64_t fnv1a64(std::string_view bytes);

}  // namespace qres
