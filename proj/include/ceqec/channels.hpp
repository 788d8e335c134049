// Copyright 2026 The ceqec authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "ceqec/matrix.hpp"
#include "ceqec/pauli.hpp"
#include "ceqec/rng.hpp"
#include "ceqec/statevector.hpp"

namespace ceqec {

/// A CPTP map as a finite list of Kraus operators on n qubits.
struct KrausChannel {
    int n = 0;
    std::vector<CMatrix> operators;

    std::size_t dim() const { return std::size_t{1} << n; }

    /// Max deviation of sum_a K_a^dag K_a from the identity.
    double completeness_defect() const {
        CMatrix acc(dim(), dim());
        for (const auto &k : operators) {
            acc = acc + k.adjoint() * k;
        }
        return acc.max_abs_diff(CMatrix::identity(dim()));
    }

    void validate(double tol = 1e-10) const {
        if (completeness_defect() > tol) {
            throw std::invalid_argument("KrausChannel: completeness violated");
        }
    }
};

inline CMatrix pauli_matrix_1q(int code) {
    CMatrix m(2, 2);
    switch (code) {
    case 0: // I
        m(0, 0) = 1.0;
        m(1, 1) = 1.0;
        break;
    case 1: // X
        m(0, 1) = 1.0;
        m(1, 0) = 1.0;
        break;
    case 2: // Y
        m(0, 1) = complex_t{0.0, -1.0};
        m(1, 0) = complex_t{0.0, 1.0};
        break;
    case 3: // Z
        m(0, 0) = 1.0;
        m(1, 1) = -1.0;
        break;
    default:
        throw std::invalid_argument("pauli_matrix_1q: bad code");
    }
    return m;
}

/// Element `index` of the n-qubit Pauli basis, indexed base-4 with qubit 1 in
/// the most significant digit (0=I, 1=X, 2=Y, 3=Z).
inline CMatrix pauli_basis_matrix(int n, std::size_t index) {
    CMatrix m = pauli_matrix_1q(static_cast<int>((index >> (2 * (n - 1))) & 3));
    for (int j = 2; j <= n; ++j) {
        m = m.kron(pauli_matrix_1q(static_cast<int>((index >> (2 * (n - j))) & 3)));
    }
    return m;
}

/// Amplitude damping: A_0 = |0><0| + sqrt(1-g)|1><1|, A_1 = sqrt(g)|0><1|.
inline KrausChannel amplitude_damping_channel(double gamma) {
    if (gamma < 0.0 || gamma > 1.0) {
        throw std::invalid_argument("amplitude_damping_channel: gamma outside [0,1]");
    }
    CMatrix a0(2, 2);
    a0(0, 0) = 1.0;
    a0(1, 1) = std::sqrt(1.0 - gamma);
    CMatrix a1(2, 2);
    a1(0, 1) = std::sqrt(gamma);
    return KrausChannel{1, {a0, a1}};
}

/// D_p(rho) = (1-p) rho + (p/3)(X rho X + Y rho Y + Z rho Z).
inline KrausChannel depolarizing_channel(double p) {
    if (p < 0.0 || p > 1.0) {
        throw std::invalid_argument("depolarizing_channel: p outside [0,1]");
    }
    KrausChannel ch{1, {}};
    ch.operators.push_back(pauli_matrix_1q(0) * std::sqrt(1.0 - p));
    for (int c = 1; c <= 3; ++c) {
        ch.operators.push_back(pauli_matrix_1q(c) * std::sqrt(p / 3.0));
    }
    return ch;
}

/// Dephasing with Kraus {|cos t| I, |sin t| Z} (flip probability sin^2 t).
inline KrausChannel dephasing_channel(double theta) {
    KrausChannel ch{1, {}};
    ch.operators.push_back(pauli_matrix_1q(0) * std::abs(std::cos(theta)));
    ch.operators.push_back(pauli_matrix_1q(3) * std::abs(std::sin(theta)));
    return ch;
}

/// The coherent phase rotation U_theta = exp(-i theta S^z) as a one-element
/// channel on n qubits.
inline KrausChannel collective_phase_channel(int n, double theta) {
    CMatrix u1(2, 2);
    u1(0, 0) = std::polar(1.0, -theta);
    u1(1, 1) = std::polar(1.0, theta);
    CMatrix u = u1;
    for (int j = 2; j <= n; ++j) {
        u = u.kron(u1);
    }
    return KrausChannel{n, {u}};
}

inline KrausChannel tensor_power(const KrausChannel &ch, int n) {
    if (n < 1) {
        throw std::invalid_argument("tensor_power: n must be positive");
    }
    KrausChannel out{ch.n, ch.operators};
    for (int j = 2; j <= n; ++j) {
        std::vector<CMatrix> next;
        next.reserve(out.operators.size() * ch.operators.size());
        for (const auto &a : out.operators) {
            for (const auto &b : ch.operators) {
                next.push_back(a.kron(b));
            }
        }
        out.operators = std::move(next);
        out.n += ch.n;
    }
    return out;
}

/// Statistical mixture of two channels on the same qubit count.
inline KrausChannel mix_channels(const KrausChannel &a, double wa, const KrausChannel &b,
                                 double wb) {
    if (a.n != b.n) {
        throw std::invalid_argument("mix_channels: size mismatch");
    }
    KrausChannel out{a.n, {}};
    for (const auto &k : a.operators) {
        out.operators.push_back(k * std::sqrt(wa));
    }
    for (const auto &k : b.operators) {
        out.operators.push_back(k * std::sqrt(wb));
    }
    return out;
}

/// M(rho) = (1-lambda) U_theta rho U_theta^dag + lambda D_p^(x n)(rho).
inline KrausChannel mixed_noise_channel(int n, double lambda, double p, double theta) {
    if (lambda < 0.0 || lambda > 1.0) {
        throw std::invalid_argument("mixed_noise_channel: lambda outside [0,1]");
    }
    return mix_channels(collective_phase_channel(n, theta), 1.0 - lambda,
                        tensor_power(depolarizing_channel(p), n), lambda);
}

inline StateVector apply_matrix_to_state(const CMatrix &m, const StateVector &sv) {
    if (m.cols() != sv.dim()) {
        throw std::invalid_argument("apply_matrix_to_state: dimension mismatch");
    }
    StateVector out(sv.num_qubits());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        complex_t acc{};
        for (std::size_t c = 0; c < m.cols(); ++c) {
            acc += m(r, c) * sv[c];
        }
        out[r] = acc;
    }
    return out;
}

/// Monte-Carlo unraveling: samples outcome a with probability ||K_a psi||^2
/// and returns the normalized post-state. Deterministic given the stream.
inline std::pair<StateVector, std::size_t>
apply_kraus_trajectory(const StateVector &sv, const KrausChannel &ch, RngStream &rng) {
    if (ch.n != sv.num_qubits()) {
        throw std::invalid_argument("apply_kraus_trajectory: size mismatch");
    }
    std::vector<StateVector> branches;
    std::vector<double> probs;
    branches.reserve(ch.operators.size());
    double total = 0.0;
    for (const auto &k : ch.operators) {
        branches.push_back(apply_matrix_to_state(k, sv));
        probs.push_back(branches.back().norm_sq());
        total += probs.back();
    }
    const double u = rng.uniform() * total;
    double cum = 0.0;
    std::size_t pick = 0;
    bool found = false;
    for (std::size_t a = 0; a < probs.size(); ++a) {
        if (probs[a] <= 0.0) {
            continue; // zero-probability branch is never sampled
        }
        cum += probs[a];
        pick = a;
        if (u < cum) {
            found = true;
            break;
        }
    }
    if (!found) {
        // u landed on the closing edge; keep the last positive branch.
    }
    StateVector post = branches[pick];
    post.normalize();
    return {post, pick};
}

/// Same unraveling for a single-qubit channel embedded on `qubit` of a
/// larger register.
inline std::pair<StateVector, std::size_t>
apply_kraus_trajectory_on_qubit(const StateVector &sv, const KrausChannel &ch, int qubit,
                                RngStream &rng) {
    if (ch.n != 1) {
        throw std::invalid_argument("apply_kraus_trajectory_on_qubit: channel must be 1q");
    }
    std::vector<StateVector> branches;
    std::vector<double> probs;
    double total = 0.0;
    for (const auto &k : ch.operators) {
        branches.push_back(sv.apply_single_qubit(k, qubit));
        probs.push_back(branches.back().norm_sq());
        total += probs.back();
    }
    const double u = rng.uniform() * total;
    double cum = 0.0;
    std::size_t pick = 0;
    for (std::size_t a = 0; a < probs.size(); ++a) {
        if (probs[a] <= 0.0) {
            continue;
        }
        cum += probs[a];
        pick = a;
        if (u < cum) {
            break;
        }
    }
    StateVector post = branches[pick];
    post.normalize();
    return {post, pick};
}

/// Pauli-transfer matrix S[i][j] = tr(P_i N(P_j)) / 2^n. Exact and real for
/// any channel given by Kraus operators. Guarded to n <= 3.
inline RMatrix channel_superoperator(const KrausChannel &ch) {
    if (ch.n > 3) {
        throw std::invalid_argument("channel_superoperator: limited to n <= 3");
    }
    const std::size_t nb = std::size_t{1} << (2 * ch.n);
    const double inv_dim = 1.0 / static_cast<double>(ch.dim());
    std::vector<CMatrix> basis;
    basis.reserve(nb);
    for (std::size_t i = 0; i < nb; ++i) {
        basis.push_back(pauli_basis_matrix(ch.n, i));
    }
    RMatrix s(nb);
    for (const auto &k : ch.operators) {
        const CMatrix kd = k.adjoint();
        for (std::size_t j = 0; j < nb; ++j) {
            const CMatrix mapped = k * basis[j] * kd;
            for (std::size_t i = 0; i < nb; ++i) {
                s(i, j) += (basis[i] * mapped).trace().real() * inv_dim;
            }
        }
    }
    return s;
}

/// PTM of unitary conjugation rho -> V rho V^dag.
inline RMatrix unitary_superoperator(int n, const CMatrix &v) {
    KrausChannel ch{n, {v}};
    return channel_superoperator(ch);
}

} // namespace ceqec
