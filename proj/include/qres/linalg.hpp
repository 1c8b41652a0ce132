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

#include <Eigen/Dense>
#include <complex>

namespace qres {

using cdouble = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

inline bool is_power_of_two(Eigen::Index n) { return n > 0 && (n & (n - 1)) == 0; }

inline int log2_exact(Eigen::Index n) {
    int m = 0;
    while ((Eigen::Index{1} << m) < n) ++m;
    return m;
}

/// Largest |entry| of a matrix; zero for empty matrices.
inline double max_abs(const CMatrix& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

inline bool is_hermitian(const CMatrix& m, double tol) {
    if (m.rows() != m.cols()) return false;
    double scale = std::max(1.0, max_abs(m));
    return max_abs(m - m.adjoint()) <= tol * scale;
}

/// 2-norm condition number estimate via SVD. Returns +inf for singular input.
double condition_number(const CMatrix& m);

}  // namespace qres
