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

#include <algorithm>
#include <bit>
#include <map>

#include "qres/errors.hpp"

namespace qres {

namespace {

constexpr int kMaxQubitsDense = 12;  // 2^12 dense matrices are the desk-scale cap
constexpr int kMaxQubitsDecompose = 8;

void check_qubit_count(int n, int cap, const char* what) {
    if (n < 1) throw validation_error(std::string(what) + ": qubit count must be positive");
    if (n > cap)
        throw validation_error(std::string(what) + ": qubit count " + std::to_string(n) +
                               " exceeds cap " + std::to_string(cap));
}

}  // namespace

char to_char(PauliLetter p) {
    switch (p) {
        case PauliLetter::I: return 'I';
        case PauliLetter::X: return 'X';
        case PauliLetter::Y: return 'Y';
        case PauliLetter::Z: return 'Z';
    }
    return '?';
}

PauliLetter pauli_letter_from_char(char c) {
    switch (c) {
        case 'I': return PauliLetter::I;
        case 'X': return PauliLetter::X;
        case 'Y': return PauliLetter::Y;
        case 'Z': return PauliLetter::Z;
    }
    throw validation_error(std::string("invalid Pauli letter '") + c + "'");
}

PauliString::PauliString(int n, std::vector<PauliLetter> ls) : n_qubits(n), letters(std::move(ls)) {
    if (n_qubits < 1) throw validation_error("PauliString: qubit count must be positive");
    if (static_cast<int>(letters.size()) != n_qubits)
        throw validation_error("PauliString: letters length must equal qubit count");
}

PauliString PauliString::identity(int n) {
    return PauliString(n, std::vector<PauliLetter>(n, PauliLetter::I));
}

PauliString PauliString::from_label(int n, const std::string& label) {
    if (static_cast<int>(label.size()) != n)
        throw validation_error("PauliString label length mismatch");
    std::vector<PauliLetter> ls(n);
    for (int q = 0; q < n; ++q) ls[q] = pauli_letter_from_char(label[n - 1 - q]);
    return PauliString(n, std::move(ls));
}

std::string PauliString::label() const {
    std::string out(n_qubits, 'I');
    for (int q = 0; q < n_qubits; ++q) out[n_qubits - 1 - q] = to_char(letters[q]);
    return out;
}

std::uint64_t PauliString::code() const {
    std::uint64_t c = 0;
    for (int q = n_qubits - 1; q >= 0; --q) c = c * 4 + static_cast<std::uint64_t>(letters[q]);
    return c;
}

CompiledPauli compile_pauli(const PauliString& s) {
    CompiledPauli out;
    int n_y = 0;
    for (int q = 0; q < s.n_qubits; ++q) {
        switch (s.letters[q]) {
            case PauliLetter::I: break;
            case PauliLetter::X: out.x_mask |= std::uint64_t{1} << q; break;
            case PauliLetter::Y:
                out.x_mask |= std::uint64_t{1} << q;
                out.z_mask |= std::uint64_t{1} << q;
                ++n_y;
                break;
            case PauliLetter::Z: out.z_mask |= std::uint64_t{1} << q; break;
        }
    }
    static const cdouble i_pow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    out.base = i_pow[n_y % 4];
    return out;
}

PauliSum normalized(PauliSum s, double drop_threshold) {
    std::map<std::uint64_t, PauliTerm> merged;
    for (auto& t : s.terms) {
        if (t.string.n_qubits != s.n_qubits)
            throw validation_error("PauliSum: inconsistent qubit counts across terms");
        auto [it, fresh] = merged.try_emplace(t.string.code(), t);
        if (!fresh) it->second.coeff += t.coeff;
    }
    PauliSum out;
    out.n_qubits = s.n_qubits;
    for (auto& [code, term] : merged)
        if (std::abs(term.coeff) >= drop_threshold) out.terms.push_back(std::move(term));
    return out;
}

namespace {

PauliString jw_string(PauliLetter head, int j, int n) {
    std::vector<PauliLetter> ls(n, PauliLetter::I);
    for (int q = 0; q < j; ++q) ls[q] = PauliLetter::Z;
    ls[j] = head;
    return PauliString(n, std::move(ls));
}

}  // namespace

PauliSum jw_creation(int j, int n) {
    check_qubit_count(n, 63, "jw_creation");
    if (j < 0 || j >= n) throw validation_error("jw_creation: mode index out of range");
    PauliSum s;
    s.n_qubits = n;
    s.terms.push_back({cdouble{0.5, 0.0}, jw_string(PauliLetter::X, j, n)});
    s.terms.push_back({cdouble{0.0, -0.5}, jw_string(PauliLetter::Y, j, n)});
    return normalized(std::move(s));
}

PauliSum jw_annihilation(int j, int n) {
    check_qubit_count(n, 63, "jw_annihilation");
    if (j < 0 || j >= n) throw validation_error("jw_annihilation: mode index out of range");
    PauliSum s;
    s.n_qubits = n;
    s.terms.push_back({cdouble{0.5, 0.0}, jw_string(PauliLetter::X, j, n)});
    s.terms.push_back({cdouble{0.0, 0.5}, jw_string(PauliLetter::Y, j, n)});
    return normalized(std::move(s));
}

PauliSum pauli_decompose(const CMatrix& m, double drop_threshold) {
    if (m.rows() != m.cols()) throw validation_error("pauli_decompose: matrix must be square");
    if (!is_power_of_two(m.rows()))
        throw validation_error("pauli_decompose: dimension must be a power of two");
    const int nq = log2_exact(m.rows());
    check_qubit_count(nq, kMaxQubitsDecompose, "pauli_decompose");
    const std::uint64_t dim = std::uint64_t{1} << nq;
    const double inv_dim = 1.0 / static_cast<double>(dim);

    PauliSum out;
    out.n_qubits = nq;
    const std::uint64_t n_strings = std::uint64_t{1} << (2 * nq);
    for (std::uint64_t codeword = 0; codeword < n_strings; ++codeword) {
        std::vector<PauliLetter> ls(nq);
        std::uint64_t c = codeword;
        for (int q = 0; q < nq; ++q) {
            ls[q] = static_cast<PauliLetter>(c & 3);
            c >>= 2;
        }
        PauliString str(nq, std::move(ls));
        const CompiledPauli cp = compile_pauli(str);
        // Tr(P M) = sum_k phase(k) M(k, k ^ x_mask)
        cdouble tr{0.0, 0.0};
        for (std::uint64_t k = 0; k < dim; ++k) {
            const double sign = (std::popcount(k & cp.z_mask) & 1) ? -1.0 : 1.0;
            tr += sign * m(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k ^ cp.x_mask));
        }
        const cdouble coeff = cp.base * tr * inv_dim;
        if (std::abs(coeff) >= drop_threshold) out.terms.push_back({coeff, std::move(str)});
    }
    return out;  // construction order is already sorted and duplicate-free
}

CMatrix pauli_reconstruct(const PauliSum& s) {
    if (s.terms.empty()) throw validation_error("pauli_reconstruct: empty Pauli sum");
    check_qubit_count(s.n_qubits, kMaxQubitsDense, "pauli_reconstruct");
    const std::uint64_t dim = std::uint64_t{1} << s.n_qubits;
    CMatrix out = CMatrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (const auto& term : s.terms) {
        if (term.string.n_qubits != s.n_qubits)
            throw validation_error("pauli_reconstruct: inconsistent qubit counts");
        const CompiledPauli cp = compile_pauli(term.string);
        const cdouble scale = term.coeff * cp.base;
        for (std::uint64_t k = 0; k < dim; ++k) {
            const double sign = (std::popcount(k & cp.z_mask) & 1) ? -1.0 : 1.0;
            out(static_cast<Eigen::Index>(k ^ cp.x_mask), static_cast<Eigen::Index>(k)) +=
                scale * sign;
        }
    }
    return out;
}

}  // namespace qres
