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

#include "qres/kernels.hpp"

namespace qres::kernels {

namespace {

void apply_1q_scalar(cdouble* psi, std::size_t n_amps, int target, const cdouble m[4]) {
    const std::size_t s = std::size_t{1} << target;
    for (std::size_t base = 0; base < n_amps; base += 2 * s) {
        for (std::size_t k = 0; k < s; ++k) {
            const std::size_t i = base + k;
            const cdouble lo = psi[i];
            const cdouble hi = psi[i + s];
            psi[i] = m[0] * lo + m[1] * hi;
            psi[i + s] = m[2] * lo + m[3] * hi;
        }
    }
}

void apply_cnot_scalar(cdouble* psi, std::size_t n_amps, int control, int target) {
    const std::size_t c = std::size_t{1} << control;
    const std::size_t t = std::size_t{1} << target;
    for (std::size_t i = 0; i < n_amps; ++i) {
        if ((i & c) && !(i & t)) {
            const std::size_t j = i | t;
            const cdouble tmp = psi[i];
            psi[i] = psi[j];
            psi[j] = tmp;
        }
    }
}

cdouble dot_conj_scalar(const cdouble* a, const cdouble* b, std::size_t n) {
    cdouble acc{0.0, 0.0};
    for (std::size_t i = 0; i < n; ++i) acc += std::conj(a[i]) * b[i];
    return acc;
}

cdouble dot_bilinear_scalar(const cdouble* a, const cdouble* b, std::size_t n) {
    cdouble acc{0.0, 0.0};
    for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
    return acc;
}

void scale_scalar(cdouble* a, std::size_t n, cdouble s) {
    for (std::size_t i = 0; i < n; ++i) a[i] *= s;
}

}  // namespace

const Ops& scalar_ops() {
    static const Ops table{
        apply_1q_scalar, apply_cnot_scalar, dot_conj_scalar, dot_bilinear_scalar,
        scale_scalar,    "scalar",
    };
    return table;
}

}  // namespace qres::kernels
