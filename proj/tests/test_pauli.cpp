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

#include <catch2/catch_amalgamated.hpp>

#include "ceqec/pauli.hpp"
#include "helpers.hpp"

using namespace ceqec;
using ceqec::testing::random_pauli;

namespace {

/// Brute-force commutation oracle: [P,Q] = 0 as dense matrices.
bool matrices_commute(const PauliString &p, const PauliString &q) {
    const CMatrix pm = p.to_matrix();
    const CMatrix qm = q.to_matrix();
    return (pm * qm).max_abs_diff(qm * pm) < 1e-12;
}

} // namespace

TEST_CASE("symplectic inner product on the worked pairs", "[pauli]") {
    REQUIRE(symplectic_inner_product(PauliString::from_string("XI"),
                                     PauliString::from_string("ZI")) == 1);
    REQUIRE(symplectic_inner_product(PauliString::from_string("XX"),
                                     PauliString::from_string("XX")) == 0);
    // Y(x)Z vs Z(x)Y: each factor pair anticommutes, so the whole strings
    // commute. Confirmed against the dense commutator.
    const auto yz = PauliString::from_string("YZ");
    const auto zy = PauliString::from_string("ZY");
    REQUIRE(symplectic_inner_product(yz, zy) == 0);
    REQUIRE(matrices_commute(yz, zy));
}

TEST_CASE("symplectic inner product mismatched lengths throw", "[pauli]") {
    REQUIRE_THROWS_AS(symplectic_inner_product(PauliString::from_string("X"),
                                               PauliString::from_string("XX")),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(PauliString::from_string("X") * PauliString::from_string("XX"),
                      std::invalid_argument);
}

TEST_CASE("commutation matches the dense commutator", "[pauli]") {
    SECTION("exhaustive for n <= 2") {
        for (int n = 1; n <= 2; ++n) {
            const std::size_t count = std::size_t{1} << (2 * n);
            for (std::size_t a = 0; a < count; ++a) {
                for (std::size_t b = 0; b < count; ++b) {
                    PauliString p(n), q(n);
                    for (int j = 1; j <= n; ++j) {
                        p.set_x_bit(j, (a >> (2 * (j - 1))) & 1);
                        p.set_z_bit(j, (a >> (2 * (j - 1) + 1)) & 1);
                        q.set_x_bit(j, (b >> (2 * (j - 1))) & 1);
                        q.set_z_bit(j, (b >> (2 * (j - 1) + 1)) & 1);
                    }
                    const bool sy = symplectic_inner_product(p, q) == 0;
                    REQUIRE(sy == matrices_commute(p, q));
                    REQUIRE(symplectic_inner_product(p, q) ==
                            symplectic_inner_product(q, p));
                }
            }
        }
    }
    SECTION("randomized for n <= 5") {
        RngStream rng(42, 1);
        for (int trial = 0; trial < 50; ++trial) {
            const int n = 3 + static_cast<int>(rng.next_u64() % 3);
            const auto p = random_pauli(n, rng, false);
            const auto q = random_pauli(n, rng, false);
            REQUIRE((symplectic_inner_product(p, q) == 0) == matrices_commute(p, q));
        }
    }
}

TEST_CASE("symplectic bilinearity", "[pauli]") {
    RngStream rng(42, 2);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + static_cast<int>(rng.next_u64() % 6);
        const auto p = random_pauli(n, rng);
        const auto q = random_pauli(n, rng);
        const auto r = random_pauli(n, rng);
        REQUIRE(symplectic_inner_product(p * q, r) ==
                (symplectic_inner_product(p, r) ^ symplectic_inner_product(q, r)));
    }
}

TEST_CASE("products track exact phases", "[pauli]") {
    SECTION("X * Z is the -iY convention") {
        const auto xz = PauliString::from_string("X") * PauliString::from_string("Z");
        REQUIRE(xz.x_bit(1));
        REQUIRE(xz.z_bit(1));
        REQUIRE(xz.phase_exp() == 0); // stored body XZ, printed as -iY
        REQUIRE(xz.to_string() == "-iY");
    }
    SECTION("P * P^-1 is the identity with phase 0") {
        RngStream rng(42, 3);
        for (int trial = 0; trial < 50; ++trial) {
            const auto p = random_pauli(1 + static_cast<int>(rng.next_u64() % 5), rng);
            const auto prod = p * p.inverse();
            REQUIRE(prod.is_identity_body());
            REQUIRE(prod.phase_exp() == 0);
        }
    }
    SECTION("identity is neutral") {
        const auto p = PauliString::from_string("-iXYZI");
        REQUIRE(PauliString::identity(4) * p == p);
        REQUIRE(p * PauliString::identity(4) == p);
    }
}

TEST_CASE("to_matrix is an exact homomorphism", "[pauli]") {
    RngStream rng(42, 4);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + static_cast<int>(rng.next_u64() % 3);
        const auto p = random_pauli(n, rng);
        const auto q = random_pauli(n, rng);
        REQUIRE((p * q).to_matrix().max_abs_diff(p.to_matrix() * q.to_matrix()) == 0.0);
    }
}

TEST_CASE("multiplication is associative", "[pauli]") {
    RngStream rng(42, 5);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + static_cast<int>(rng.next_u64() % 6);
        const auto p = random_pauli(n, rng);
        const auto q = random_pauli(n, rng);
        const auto r = random_pauli(n, rng);
        REQUIRE((p * q) * r == p * (q * r));
    }
}

TEST_CASE("weight", "[pauli]") {
    REQUIRE(PauliString::identity(8).weight() == 0);
    REQUIRE(PauliString::from_string("XZI").weight() == 2);
    REQUIRE(PauliString::single(8, 3, 'Y').weight() == 1);

    RngStream rng(42, 6);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + static_cast<int>(rng.next_u64() % 8);
        const auto p = random_pauli(n, rng);
        const auto q = random_pauli(n, rng);
        REQUIRE((p * q).weight() <= p.weight() + q.weight());
    }
}

TEST_CASE("to_matrix on the worked single-qubit cases", "[pauli]") {
    SECTION("Z") {
        const auto m = PauliString::from_string("Z").to_matrix();
        REQUIRE(m(0, 0) == complex_t{1, 0});
        REQUIRE(m(1, 1) == complex_t{-1, 0});
        REQUIRE(m(0, 1) == complex_t{0, 0});
    }
    SECTION("X") {
        const auto m = PauliString::from_string("X").to_matrix();
        REQUIRE(m(0, 1) == complex_t{1, 0});
        REQUIRE(m(1, 0) == complex_t{1, 0});
        REQUIRE(m(0, 0) == complex_t{0, 0});
    }
    SECTION("iY = [[0,1],[-1,0]]") {
        const auto m = PauliString::from_string("+iY").to_matrix();
        REQUIRE(m(0, 0) == complex_t{0, 0});
        REQUIRE(m(0, 1) == complex_t{1, 0});
        REQUIRE(m(1, 0) == complex_t{-1, 0});
        REQUIRE(m(1, 1) == complex_t{0, 0});
    }
}

TEST_CASE("textual round trip", "[pauli]") {
    for (const char *text : {"XIZY", "-iY", "+iXX", "-ZZZ", "IIII", "Y"}) {
        const auto p = PauliString::from_string(text);
        REQUIRE(PauliString::from_string(p.to_string()) == p);
    }
    RngStream rng(42, 7);
    for (int trial = 0; trial < 100; ++trial) {
        const auto p = random_pauli(1 + static_cast<int>(rng.next_u64() % 9), rng);
        REQUIRE(PauliString::from_string(p.to_string()) == p);
    }
    REQUIRE_THROWS_AS(PauliString::from_string("XQ"), std::invalid_argument);
    REQUIRE_THROWS_AS(PauliString::from_string(""), std::invalid_argument);
}

TEST_CASE("hermiticity follows the phase/Y-count rule", "[pauli]") {
    REQUIRE(PauliString::from_string("Y").is_hermitian());
    REQUIRE(PauliString::from_string("ZZ").is_hermitian());
    REQUIRE_FALSE(PauliString::from_string("-iY").is_hermitian()); // the bare XZ body
    REQUIRE_FALSE(PauliString::from_string("+iX").is_hermitian());

    RngStream rng(42, 8);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 1 + static_cast<int>(rng.next_u64() % 3);
        const auto p = random_pauli(n, rng);
        const auto m = p.to_matrix();
        REQUIRE(p.is_hermitian() == (m.max_abs_diff(m.adjoint()) < 1e-12));
    }
}

TEST_CASE("to_matrix size guard", "[pauli]") {
    REQUIRE_THROWS_AS(PauliString::identity(15).to_matrix(), std::invalid_argument);
}
