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

#include "qres/pauli.hpp"

#include <doctest.h>

#include <unsupported/Eigen/KroneckerProduct>

#include "qres/errors.hpp"
#include "qres/fixtures.hpp"
#include "qres/jsonio.hpp"
#include "test_support.hpp"

using namespace qres;

namespace {

// Independent dense oracle: build the Pauli-string matrix with explicit
// Kronecker products (qubit 0 is the rightmost factor).
CMatrix kron_oracle(const PauliString& s) {
    static const CMatrix I = CMatrix::Identity(2, 2);
    CMatrix X(2, 2), Y(2, 2), Z(2, 2);
    X << 0, 1, 1, 0;
    Y << cdouble(0, 0), cdouble(0, -1), cdouble(0, 1), cdouble(0, 0);
    Z << 1, 0, 0, -1;
    auto of = [&](PauliLetter p) -> const CMatrix& {
        switch (p) {
            case PauliLetter::X: return X;
            case PauliLetter::Y: return Y;
            case PauliLetter::Z: return Z;
            default: return I;
        }
    };
    CMatrix out = of(s.letters[s.n_qubits - 1]);
    for (int q = s.n_qubits - 2; q >= 0; --q)
        out = Eigen::kroneckerProduct(out, of(s.letters[q])).eval();
    return out;
}

CMatrix sum_oracle(const PauliSum& s) {
    const Eigen::Index dim = Eigen::Index{1} << s.n_qubits;
    CMatrix out = CMatrix::Zero(dim, dim);
    for (const auto& t : s.terms) out += t.coeff * kron_oracle(t.string);
    return out;
}

}  // namespace

TEST_CASE("jw_creation on one mode is the fermionic ladder matrix") {
    const PauliSum a_dag = jw_creation(0, 1);
    REQUIRE(a_dag.terms.size() == 2);

    CMatrix expected(2, 2);
    expected << 0, 0, 1, 0;
    CHECK(test::max_abs_diff(pauli_reconstruct(a_dag), expected) < 1e-15);
    CHECK(test::max_abs_diff(sum_oracle(a_dag), expected) < 1e-15);
}

TEST_CASE("jw_creation on mode 1 of 2 carries the Z chain on qubit 0") {
    const PauliSum a_dag = jw_creation(1, 2);
    REQUIRE(a_dag.terms.size() == 2);
    for (const auto& t : a_dag.terms) CHECK(t.string.letters[0] == PauliLetter::Z);
    CHECK_THROWS_AS(jw_creation(2, 2), validation_error);
    CHECK_THROWS_AS(jw_creation(-1, 2), validation_error);
}

TEST_CASE("jw anticommutation: a_i a_j^dag + a_j^dag a_i = delta_ij") {
    const int n = 4;
    const Eigen::Index dim = 16;
    for (int i = 0; i < n; ++i) {
        const CMatrix ai = pauli_reconstruct(jw_annihilation(i, n));
        for (int j = 0; j < n; ++j) {
            const CMatrix adj = pauli_reconstruct(jw_creation(j, n));
            const CMatrix anti = ai * adj + adj * ai;
            const CMatrix expected =
                i == j ? CMatrix(CMatrix::Identity(dim, dim)) : CMatrix(CMatrix::Zero(dim, dim));
            CHECK(test::max_abs_diff(anti, expected) < 1e-12);
        }
    }
}

TEST_CASE("decompose identity and Z are single terms") {
    const PauliSum id = pauli_decompose(CMatrix::Identity(2, 2));
    REQUIRE(id.terms.size() == 1);
    CHECK(id.terms[0].string.label() == "I");
    CHECK(std::abs(id.terms[0].coeff - cdouble{1, 0}) < 1e-15);

    CMatrix z(2, 2);
    z << 1, 0, 0, -1;
    const PauliSum zs = pauli_decompose(z);
    REQUIRE(zs.terms.size() == 1);
    CHECK(zs.terms[0].string.label() == "Z");
    CHECK(std::abs(zs.terms[0].coeff - cdouble{1, 0}) < 1e-15);
}

TEST_CASE("decompose rejects bad dimensions") {
    CHECK_THROWS_AS(pauli_decompose(CMatrix::Identity(3, 3)), validation_error);
    CHECK_THROWS_AS(pauli_decompose(CMatrix::Identity(2, 4)), validation_error);
}

TEST_CASE("round trip reconstruct(decompose(M)) = M, and coefficients match the trace oracle") {
    test::Rng rng(21);
    for (int nq = 1; nq <= 4; ++nq) {
        const Eigen::Index dim = Eigen::Index{1} << nq;
        const CMatrix m = rng.cmatrix(dim);
        const PauliSum s = pauli_decompose(m);
        CHECK(test::max_abs_diff(pauli_reconstruct(s), m) < 1e-12);
        CHECK(test::max_abs_diff(sum_oracle(s), m) < 1e-12);
        // spot check one coefficient against Tr(P M)/2^m via the Kronecker oracle
        const auto& t = s.terms[s.terms.size() / 2];
        const cdouble tr = (kron_oracle(t.string) * m).trace() / static_cast<double>(dim);
        CHECK(std::abs(t.coeff - tr) < 1e-12);
    }
}

TEST_CASE("hermitian matrices decompose with real coefficients, and linearly") {
    test::Rng rng(22);
    const CMatrix h = rng.hermitian(8);
    for (const auto& t : pauli_decompose(h).terms) CHECK(std::abs(t.coeff.imag()) < 1e-12);

    const CMatrix a = rng.cmatrix(4), b = rng.cmatrix(4);
    const cdouble alpha = rng.cnormal();
    const PauliSum lhs = pauli_decompose(alpha * a + b, 0.0);
    const PauliSum sa = pauli_decompose(a, 0.0);
    const PauliSum sb = pauli_decompose(b, 0.0);
    REQUIRE(lhs.terms.size() == sa.terms.size());
    for (std::size_t i = 0; i < lhs.terms.size(); ++i)
        CHECK(std::abs(lhs.terms[i].coeff - (alpha * sa.terms[i].coeff + sb.terms[i].coeff)) <
              1e-12);
}

TEST_CASE("zero-padded reference metric round-trips exactly") {
    const AppendixFixture fx = load_appendix();
    CMatrix padded = CMatrix::Zero(8, 8);
    padded.topLeftCorner(4, 4) = fx.n_res;
    const PauliSum s = pauli_decompose(padded);
    CHECK(test::max_abs_diff(pauli_reconstruct(s), padded) < 1e-12);
}

TEST_CASE("normalization merges duplicates and drops dust") {
    PauliSum s;
    s.n_qubits = 2;
    s.terms.push_back({{0.5, 0}, PauliString::from_label(2, "XZ")});
    s.terms.push_back({{0.5, 0}, PauliString::from_label(2, "XZ")});
    s.terms.push_back({{1e-16, 0}, PauliString::from_label(2, "YY")});
    const PauliSum n = normalized(s);
    REQUIRE(n.terms.size() == 1);
    CHECK(n.terms[0].string.label() == "XZ");
    CHECK(std::abs(n.terms[0].coeff - cdouble{1.0, 0}) < 1e-15);
}

TEST_CASE("serialization writes labels qubit-0-last and round-trips") {
    PauliSum s;
    s.n_qubits = 4;
    s.terms.push_back({{0.25, -1.0}, PauliString::from_label(4, "XZIY")});
    const auto j = pauli_sum_to_json(normalized(s));
    CHECK(j["terms"][0]["string"] == "XZIY");
    const PauliSum back = pauli_sum_from_json(j);
    REQUIRE(back.terms.size() == 1);
    CHECK(back.terms[0].string.letters[0] == PauliLetter::Y);  // qubit 0 = last character
    CHECK(back.terms[0].string.letters[3] == PauliLetter::X);
    CHECK(std::abs(back.terms[0].coeff - cdouble{0.25, -1.0}) < 1e-15);
}
