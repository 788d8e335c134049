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

#include <complex>
#include <utility>

#include "ceqec/pauli.hpp"
#include "ceqec/rng.hpp"
#include "ceqec/statevector.hpp"

namespace ceqec::testing {

inline PauliString random_pauli(int n, RngStream &rng, bool random_phase = true) {
    PauliString p(n);
    for (int j = 1; j <= n; ++j) {
        const auto r = rng.next_u64() & 3;
        p.set_x_bit(j, r & 1);
        p.set_z_bit(j, (r >> 1) & 1);
    }
    if (random_phase) {
        p.set_phase_exp(static_cast<int>(rng.next_u64() & 3));
    }
    return p;
}

inline StateVector random_state(int n, RngStream &rng) {
    StateVector sv(n);
    for (std::size_t i = 0; i < sv.dim(); ++i) {
        sv[i] = complex_t(rng.uniform() - 0.5, rng.uniform() - 0.5);
    }
    sv.normalize();
    return sv;
}

/// Haar-ish random point on the logical Bloch sphere.
inline std::pair<complex_t, complex_t> random_logical(RngStream &rng) {
    complex_t a(rng.uniform() - 0.5, rng.uniform() - 0.5);
    complex_t b(rng.uniform() - 0.5, rng.uniform() - 0.5);
    const double nrm = std::sqrt(std::norm(a) + std::norm(b));
    return {a / nrm, b / nrm};
}

} // namespace ceqec::testing
