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

#include <complex>
#include <cstddef>
#include <string_view>

namespace qres::kernels {

using cdouble = std::complex<double>;

/// Data-parallel inner loops of the statevector simulator. Every entry has a
/// scalar reference implementation and (on x86-64 with AVX2+FMA) a vectorized
/// variant selected at runtime. The two are equivalence-tested against each
/// other; accumulation order differs between backends, so dot products agree
/// to rounding, not bitwise.
struct Ops {
    /// psi <- gate applied to qubit `target`; m is the 2x2 gate row-major
    /// {m00, m01, m10, m11}. n_amps must be a power of two > (1 << target).
    void (*apply_1q)(cdouble* psi, std::size_t n_amps, int target, const cdouble m[4]);

    /// psi <- CNOT(control, target) applied in place.
    void (*apply_cnot)(cdouble* psi, std::size_t n_amps, int control, int target);

    /// sum conj(a[i]) * b[i]  (Hermitian inner product)
    cdouble (*dot_conj)(const cdouble* a, const cdouble* b, std::size_t n);

    /// sum a[i] * b[i]  (bilinear pairing, no conjugation)
    cdouble (*dot_bilinear)(const cdouble* a, const cdouble* b, std::size_t n);

    /// a[i] *= s
    void (*scale)(cdouble* a, std::size_t n, cdouble s);

    const char* name;
};

/// The backend in use. Resolved once: QRES_KERNELS environment variable
/// ("scalar" or "avx2") if set, otherwise the best the CPU supports.
const Ops& active();

const Ops& scalar_ops();

/// AVX2+FMA table, or nullptr when the build or CPU lacks support.
const Ops* avx2_ops();

/// Force a backend ("scalar", "avx2", "auto"). Returns false (and leaves the
/// selection unchanged) when the request cannot be honored.
bool select_backend(std::string_view name);

}  // namespace qres::kernels
