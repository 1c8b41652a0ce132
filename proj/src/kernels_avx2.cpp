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

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

namespace qres::kernels {

namespace {

// One __m256d holds two complex<double> values (re0, im0, re1, im1).

// v * (cr + i*ci), with cr/ci pre-broadcast per lane pair:
//   cr = (c0, c0, c1, c1), ci = (d0, d0, d1, d1)
inline __m256d cmul_bcast(__m256d v, __m256d cr, __m256d ci) {
    __m256d t1 = _mm256_mul_pd(v, cr);
    __m256d vs = _mm256_permute_pd(v, 0x5);  // swap re/im within each complex
    __m256d t2 = _mm256_mul_pd(vs, ci);
    return _mm256_addsub_pd(t1, t2);
}

void apply_1q_avx2(cdouble* psi, std::size_t n_amps, int target, const cdouble m[4]) {
    double* p = reinterpret_cast<double*>(psi);
    const std::size_t s = std::size_t{1} << target;

    if (target == 0) {
        // Each 256-bit word is one (lo, hi) amplitude pair.
        const __m256d c0r = _mm256_setr_pd(m[0].real(), m[0].real(), m[2].real(), m[2].real());
        const __m256d c0i = _mm256_setr_pd(m[0].imag(), m[0].imag(), m[2].imag(), m[2].imag());
        const __m256d c1r = _mm256_setr_pd(m[1].real(), m[1].real(), m[3].real(), m[3].real());
        const __m256d c1i = _mm256_setr_pd(m[1].imag(), m[1].imag(), m[3].imag(), m[3].imag());
        for (std::size_t i = 0; i < n_amps; i += 2) {
            __m256d v = _mm256_loadu_pd(p + 2 * i);
            __m256d vlo = _mm256_permute2f128_pd(v, v, 0x00);
            __m256d vhi = _mm256_permute2f128_pd(v, v, 0x11);
            __m256d out = _mm256_add_pd(cmul_bcast(vlo, c0r, c0i), cmul_bcast(vhi, c1r, c1i));
            _mm256_storeu_pd(p + 2 * i, out);
        }
        return;
    }

    // target >= 1: lo and hi runs are contiguous, two amplitudes per step.
    const __m256d r00 = _mm256_set1_pd(m[0].real()), i00 = _mm256_set1_pd(m[0].imag());
    const __m256d r01 = _mm256_set1_pd(m[1].real()), i01 = _mm256_set1_pd(m[1].imag());
    const __m256d r10 = _mm256_set1_pd(m[2].real()), i10 = _mm256_set1_pd(m[2].imag());
    const __m256d r11 = _mm256_set1_pd(m[3].real()), i11 = _mm256_set1_pd(m[3].imag());
    for (std::size_t base = 0; base < n_amps; base += 2 * s) {
        for (std::size_t k = 0; k < s; k += 2) {
            const std::size_t i = base + k;
            __m256d vlo = _mm256_loadu_pd(p + 2 * i);
            __m256d vhi = _mm256_loadu_pd(p + 2 * (i + s));
            __m256d nlo = _mm256_add_pd(cmul_bcast(vlo, r00, i00), cmul_bcast(vhi, r01, i01));
            __m256d nhi = _mm256_add_pd(cmul_bcast(vlo, r10, i10), cmul_bcast(vhi, r11, i11));
            _mm256_storeu_pd(p + 2 * i, nlo);
            _mm256_storeu_pd(p + 2 * (i + s), nhi);
        }
    }
}

inline void swap_block2(double* a, double* b) {
    __m256d va = _mm256_loadu_pd(a);
    __m256d vb = _mm256_loadu_pd(b);
    _mm256_storeu_pd(a, vb);
    _mm256_storeu_pd(b, va);
}

void apply_cnot_avx2(cdouble* psi, std::size_t n_amps, int control, int target) {
    double* p = reinterpret_cast<double*>(psi);
    const std::size_t sc = std::size_t{1} << control;
    const std::size_t st = std::size_t{1} << target;

    if (target == 0) {
        // control >= 1; swap adjacent amplitudes inside one 256-bit word.
        for (std::size_t base = 0; base < n_amps; base += 2 * sc) {
            for (std::size_t i = base + sc; i < base + 2 * sc; i += 2) {
                __m256d v = _mm256_loadu_pd(p + 2 * i);
                _mm256_storeu_pd(p + 2 * i, _mm256_permute2f128_pd(v, v, 0x01));
            }
        }
        return;
    }
    if (control < target) {
        for (std::size_t base = 0; base < n_amps; base += 2 * st) {
            for (std::size_t k0 = sc; k0 < st; k0 += 2 * sc) {
                if (sc == 1) {
                    const std::size_t i = base + k0;
                    const cdouble tmp = psi[i];
                    psi[i] = psi[i + st];
                    psi[i + st] = tmp;
                } else {
                    for (std::size_t k = k0; k < k0 + sc; k += 2)
                        swap_block2(p + 2 * (base + k), p + 2 * (base + k + st));
                }
            }
        }
        return;
    }
    // control > target >= 1: control-set indices form runs of length sc.
    for (std::size_t base = sc; base < n_amps; base += 2 * sc) {
        for (std::size_t j0 = base; j0 < base + sc; j0 += 2 * st) {
            for (std::size_t k = 0; k < st; k += 2)
                swap_block2(p + 2 * (j0 + k), p + 2 * (j0 + k + st));
        }
    }
}

template <bool Conj>
cdouble dot_avx2(const cdouble* a, const cdouble* b, std::size_t n) {
    const double* pa = reinterpret_cast<const double*>(a);
    const double* pb = reinterpret_cast<const double*>(b);
    const __m256d signs = _mm256_setr_pd(0.0, -0.0, 0.0, -0.0);
    __m256d acc_a = _mm256_setzero_pd();
    __m256d acc_b = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d va = _mm256_loadu_pd(pa + 2 * i);
        __m256d vb = _mm256_loadu_pd(pb + 2 * i);
        if constexpr (Conj) va = _mm256_xor_pd(va, signs);
        __m256d re_dup = _mm256_movedup_pd(va);
        __m256d im_dup = _mm256_permute_pd(va, 0xF);
        __m256d vb_sw = _mm256_permute_pd(vb, 0x5);
        acc_a = _mm256_fmadd_pd(re_dup, vb, acc_a);
        acc_b = _mm256_fmadd_pd(im_dup, vb_sw, acc_b);
    }
    __m256d tot = _mm256_addsub_pd(acc_a, acc_b);
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, tot);
    cdouble acc{lanes[0] + lanes[2], lanes[1] + lanes[3]};
    for (; i < n; ++i) acc += (Conj ? std::conj(a[i]) : a[i]) * b[i];
    return acc;
}

void scale_avx2(cdouble* v, std::size_t n, cdouble s) {
    double* p = reinterpret_cast<double*>(v);
    const __m256d sr = _mm256_set1_pd(s.real());
    const __m256d si = _mm256_set1_pd(s.imag());
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2)
        _mm256_storeu_pd(p + 2 * i, cmul_bcast(_mm256_loadu_pd(p + 2 * i), sr, si));
    for (; i < n; ++i) v[i] *= s;
}

}  // namespace

const Ops* avx2_ops() {
    if (!__builtin_cpu_supports("avx2") || !__builtin_cpu_supports("fma")) return nullptr;
    static const Ops table{
        apply_1q_avx2, apply_cnot_avx2, dot_avx2<true>, dot_avx2<false>, scale_avx2, "avx2",
    };
    return &table;
}

}  // namespace qres::kernels

#else  // non-x86 builds: no vector variant

namespace qres::kernels {
const Ops* avx2_ops() { return nullptr; }
}  // namespace qres::kernels

#endif
