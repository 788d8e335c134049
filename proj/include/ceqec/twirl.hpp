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

#include "ceqec/channels.hpp"
#include "ceqec/matrix.hpp"

namespace ceqec {

enum class TwirlGroup {
    kPauliGroup,                // {I,X,Y,Z}^(x n), 4^n elements
    kSingleQubitCliffordTensor, // C_1^(x n), 24^n elements
};

namespace detail {

/// Canonical phase: rotate so the first nonzero entry is real positive.
/// Lets us deduplicate unitaries that differ only by a global phase.
inline CMatrix phase_canonical(const CMatrix &m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const complex_t v = m(i, j);
            if (std::abs(v) > 1e-9) {
                return m * (std::conj(v) / std::abs(v));
            }
        }
    }
    return m;
}

inline bool matrices_close(const CMatrix &a, const CMatrix &b) {
    return a.max_abs_diff(b) < 1e-9;
}

} // namespace detail

/// The 24 single-qubit Clifford unitaries, generated by closing {H, S} and
/// identified up to a global phase.
inline const std::vector<CMatrix> &single_qubit_cliffords() {
    static const std::vector<CMatrix> kGroup = [] {
        const double s = 1.0 / std::sqrt(2.0);
        CMatrix h(2, 2);
        h(0, 0) = s;
        h(0, 1) = s;
        h(1, 0) = s;
        h(1, 1) = -s;
        CMatrix sg(2, 2);
        sg(0, 0) = 1.0;
        sg(1, 1) = complex_t{0.0, 1.0};

        std::vector<CMatrix> group{detail::phase_canonical(CMatrix::identity(2))};
        bool grew = true;
        while (grew) {
            grew = false;
            const std::size_t size_before = group.size();
            for (std::size_t i = 0; i < size_before; ++i) {
                for (const CMatrix *gen : {&h, &sg}) {
                    const CMatrix cand = detail::phase_canonical(*gen * group[i]);
                    bool known = false;
                    for (const auto &g : group) {
                        if (detail::matrices_close(cand, g)) {
                            known = true;
                            break;
                        }
                    }
                    if (!known) {
                        group.push_back(cand);
                        grew = true;
                    }
                }
            }
        }
        if (group.size() != 24) {
            throw std::logic_error("single_qubit_cliffords: closure is not 24 elements");
        }
        return group;
    }();
    return kGroup;
}

/// Exact group average Twirl(N, V)(rho) = (1/|V|) sum_V V^dag N(V rho V^dag) V,
/// returned as the Pauli-transfer matrix. Limited to n <= 2 to keep the group
/// enumeration exact and fast.
inline RMatrix twirl_channel(const KrausChannel &ch, TwirlGroup group) {
    if (ch.n > 2) {
        throw std::invalid_argument("twirl_channel: limited to n <= 2");
    }
    const RMatrix s = channel_superoperator(ch);
    const std::size_t nb = s.dim();

    // PTMs of the conjugating unitaries on one qubit.
    std::vector<RMatrix> reps1q;
    if (group == TwirlGroup::kPauliGroup) {
        for (int c = 0; c < 4; ++c) {
            reps1q.push_back(unitary_superoperator(1, pauli_matrix_1q(c)));
        }
    } else {
        for (const auto &v : single_qubit_cliffords()) {
            reps1q.push_back(unitary_superoperator(1, v));
        }
    }

    std::vector<RMatrix> reps;
    if (ch.n == 1) {
        reps = reps1q;
    } else {
        for (const auto &a : reps1q) {
            for (const auto &b : reps1q) {
                reps.push_back(a.kron(b));
            }
        }
    }

    RMatrix acc(nb);
    const double w = 1.0 / static_cast<double>(reps.size());
    for (const auto &r : reps) {
        // Ad_{V^dag} = (Ad_V)^{-1} = R_V^T in the Pauli basis.
        acc.add_scaled(r.transpose() * s * r, w);
    }
    return acc;
}

/// Probability that a Pauli channel (given as a PTM) acts as the identity.
/// Recovered from the Walsh sum of the PTM diagonal.
inline double pauli_channel_identity_probability(const RMatrix &ptm, int n) {
    const std::size_t nb = std::size_t{1} << (2 * n);
    if (ptm.dim() != nb) {
        throw std::invalid_argument("pauli_channel_identity_probability: size mismatch");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < nb; ++i) {
        sum += ptm(i, i);
    }
    return sum / static_cast<double>(nb);
}

} // namespace ceqec
