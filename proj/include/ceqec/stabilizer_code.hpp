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

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ceqec/pauli.hpp"
#include "ceqec/statevector.hpp"

namespace ceqec {

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> failures;

    void fail(const std::string &what) {
        ok = false;
        failures.push_back(what);
    }
};

/// An [[n,k,d]] stabilizer code: n-k generators plus k logical X/Z pairs.
/// Immutable after validation; safe to share across threads.
struct StabilizerCode {
    std::string name;
    int n = 0;
    int k = 0;
    std::vector<PauliString> generators;
    std::vector<PauliString> logical_x;
    std::vector<PauliString> logical_z;
    std::optional<int> distance_hint; // metadata only, never computed

    /// Checks generator commutation, GF(2) independence, and the logical
    /// operator (anti)commutation pattern. Failures are reported with the
    /// offending pair, not thrown.
    ValidationReport validate() const {
        ValidationReport rep;
        if (static_cast<int>(generators.size()) != n - k) {
            rep.fail("expected " + std::to_string(n - k) + " generators, have " +
                     std::to_string(generators.size()));
        }
        for (const auto &g : generators) {
            if (g.num_qubits() != n) {
                rep.fail("generator " + g.to_string() + " has wrong length");
                return rep;
            }
        }
        for (std::size_t i = 0; i < generators.size(); ++i) {
            for (std::size_t j = i + 1; j < generators.size(); ++j) {
                if (symplectic_inner_product(generators[i], generators[j]) != 0) {
                    rep.fail("generators anticommute: " + generators[i].to_string() +
                             " vs " + generators[j].to_string());
                }
            }
        }
        if (!gf2_independent(generators, n)) {
            rep.fail("generators are linearly dependent over GF(2)");
        }
        if (static_cast<int>(logical_x.size()) != k ||
            static_cast<int>(logical_z.size()) != k) {
            rep.fail("expected " + std::to_string(k) + " logical X and Z operators");
            return rep;
        }
        for (int i = 0; i < k; ++i) {
            for (const auto &g : generators) {
                if (symplectic_inner_product(logical_x[i], g) != 0) {
                    rep.fail("logical X" + std::to_string(i + 1) +
                             " anticommutes with generator " + g.to_string());
                }
                if (symplectic_inner_product(logical_z[i], g) != 0) {
                    rep.fail("logical Z" + std::to_string(i + 1) +
                             " anticommutes with generator " + g.to_string());
                }
            }
            for (int j = 0; j < k; ++j) {
                const int want = (i == j) ? 1 : 0;
                if (symplectic_inner_product(logical_x[i], logical_z[j]) != want) {
                    rep.fail("logical X" + std::to_string(i + 1) + " / Z" +
                             std::to_string(j + 1) + " commutation is wrong");
                }
            }
        }
        return rep;
    }

    /// Orthonormal codespace basis ordered by the logical Z eigenvalue
    /// pattern: basis state b is the (-1)^{b_i} eigenvector of logical_z[i],
    /// and states are related by the logical X word operators. |0...0_L> has
    /// its first nonzero amplitude real positive.
    std::vector<StateVector> codespace_basis() const {
        if (n > 14) {
            throw std::invalid_argument("codespace_basis: limited to n <= 14");
        }
        StateVector zero_logical = project_to_joint_plus_one();
        std::vector<StateVector> basis;
        const std::size_t count = std::size_t{1} << k;
        basis.reserve(count);
        for (std::size_t b = 0; b < count; ++b) {
            StateVector v = zero_logical;
            for (int i = 0; i < k; ++i) {
                if ((b >> (k - 1 - i)) & 1) {
                    v = v.apply_pauli(logical_x[static_cast<std::size_t>(i)]);
                }
            }
            basis.push_back(std::move(v));
        }
        return basis;
    }

  private:
    static bool gf2_independent(const std::vector<PauliString> &ops, int n) {
        // Gaussian elimination on the (x|z) rows.
        std::vector<std::vector<int>> rows;
        for (const auto &p : ops) {
            std::vector<int> row(static_cast<std::size_t>(2 * n), 0);
            for (int j = 1; j <= n; ++j) {
                row[static_cast<std::size_t>(j - 1)] = p.x_bit(j) ? 1 : 0;
                row[static_cast<std::size_t>(n + j - 1)] = p.z_bit(j) ? 1 : 0;
            }
            rows.push_back(std::move(row));
        }
        std::size_t rank = 0;
        for (std::size_t col = 0; col < static_cast<std::size_t>(2 * n) && rank < rows.size();
             ++col) {
            std::size_t pivot = rank;
            while (pivot < rows.size() && rows[pivot][col] == 0) {
                ++pivot;
            }
            if (pivot == rows.size()) {
                continue;
            }
            std::swap(rows[rank], rows[pivot]);
            for (std::size_t r = 0; r < rows.size(); ++r) {
                if (r != rank && rows[r][col]) {
                    for (std::size_t c = col; c < rows[r].size(); ++c) {
                        rows[r][c] ^= rows[rank][c];
                    }
                }
            }
            ++rank;
        }
        return rank == rows.size();
    }

    StateVector project_to_joint_plus_one() const {
        const std::size_t dim = std::size_t{1} << n;
        for (std::size_t seed = 0; seed < dim; ++seed) {
            StateVector v = StateVector::basis_state(n, seed);
            for (const auto &g : generators) {
                StateVector gv = v.apply_pauli(g);
                for (std::size_t i = 0; i < v.dim(); ++i) {
                    v[i] = 0.5 * (v[i] + gv[i]);
                }
            }
            for (const auto &zl : logical_z) {
                StateVector zv = v.apply_pauli(zl);
                for (std::size_t i = 0; i < v.dim(); ++i) {
                    v[i] = 0.5 * (v[i] + zv[i]);
                }
            }
            if (v.norm_sq() > 1e-9) {
                v.normalize();
                // Fix the global phase: first nonzero amplitude real positive.
                for (std::size_t i = 0; i < v.dim(); ++i) {
                    const double a = std::abs(v[i]);
                    if (a > 1e-9) {
                        const complex_t rot = std::conj(v[i]) / a;
                        for (std::size_t j = 0; j < v.dim(); ++j) {
                            v[j] *= rot;
                        }
                        break;
                    }
                }
                return v;
            }
        }
        throw std::runtime_error("codespace_basis: projector annihilated every seed");
    }
};

/// Built-in codes: REP2, LNCY4 (the four-qubit amplitude damping code) and
/// STEANE7 (the [[7,1,3]] CSS code).
inline StabilizerCode builtin_code(const std::string &name) {
    if (name == "REP2") {
        StabilizerCode c;
        c.name = "REP2";
        c.n = 2;
        c.k = 1;
        c.generators = {PauliString::from_string("ZZ")};
        c.logical_x = {PauliString::from_string("XX")};
        c.logical_z = {PauliString::from_string("ZI")};
        c.distance_hint = 1;
        return c;
    }
    if (name == "LNCY4") {
        // Codewords (|0000>+|1111>)/sqrt2 and (|1100>+|0011>)/sqrt2.
        StabilizerCode c;
        c.name = "LNCY4";
        c.n = 4;
        c.k = 1;
        c.generators = {PauliString::from_string("XXXX"), PauliString::from_string("ZZII"),
                        PauliString::from_string("IIZZ")};
        c.logical_x = {PauliString::from_string("XXII")};
        c.logical_z = {PauliString::from_string("ZIZI")};
        c.distance_hint = 2;
        return c;
    }
    if (name == "STEANE7") {
        // Hamming-matrix rows for both the X and Z generator sets.
        StabilizerCode c;
        c.name = "STEANE7";
        c.n = 7;
        c.k = 1;
        c.generators = {
            PauliString::from_string("IIIXXXX"), PauliString::from_string("IXXIIXX"),
            PauliString::from_string("XIXIXIX"), PauliString::from_string("IIIZZZZ"),
            PauliString::from_string("IZZIIZZ"), PauliString::from_string("ZIZIZIZ")};
        c.logical_x = {PauliString::from_string("XXXXXXX")};
        c.logical_z = {PauliString::from_string("ZZZZZZZ")};
        c.distance_hint = 3;
        return c;
    }
    throw std::invalid_argument("builtin_code: unknown code '" + name + "'");
}

} // namespace ceqec
