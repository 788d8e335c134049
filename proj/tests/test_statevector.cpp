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

#include <cmath>

#include "ceqec/statevector.hpp"
#include "helpers.hpp"

using namespace ceqec;
using ceqec::testing::random_pauli;
using ceqec::testing::random_state;

TEST_CASE("basis indexing puts qubit 1 in the most significant bit", "[statevector]") {
    const auto sv = StateVector::from_bitstrings(8, {{"11110000", 1.0}});
    REQUIRE(sv[0xF0] == complex_t{1.0, 0.0});
    REQUIRE(sv.bitstring(0xF0) == "11110000");
}

TEST_CASE("apply_pauli acts as permutation with phases", "[statevector]") {
    SECTION("X on |0> gives |1>") {
        const auto out = StateVector::basis_state(1, 0).apply_pauli(
            PauliString::from_string("X"));
        REQUIRE(std::abs(out[1] - complex_t{1, 0}) < 1e-15);
    }
    SECTION("Z on |+> gives |->") {
        StateVector plus(1);
        plus[0] = plus[1] = 1.0 / std::sqrt(2.0);
        const auto out = plus.apply_pauli(PauliString::from_string("Z"));
        REQUIRE(std::abs(out[0] - plus[0]) < 1e-15);
        REQUIRE(std::abs(out[1] + plus[1]) < 1e-15);
    }
    SECTION("X^8 swaps the eight-qubit codeword support") {
        const double inv = 1.0 / std::sqrt(2.0);
        const auto zero_l = StateVector::from_bitstrings(
            8, {{"11110000", inv}, {"00001111", inv}});
        const auto out = zero_l.apply_pauli(PauliString::from_string("XXXXXXXX"));
        REQUIRE(distance_up_to_phase(out, zero_l) < 1e-15);
        REQUIRE(std::abs(out[0x0F] - complex_t{inv, 0}) < 1e-15);
    }
    SECTION("matches the dense matrix on random inputs") {
        RngStream rng(7, 0);
        for (int trial = 0; trial < 30; ++trial) {
            const int n = 1 + static_cast<int>(rng.next_u64() % 4);
            const auto p = random_pauli(n, rng);
            const auto sv = random_state(n, rng);
            const auto fast = sv.apply_pauli(p);
            const auto m = p.to_matrix();
            for (std::size_t r = 0; r < sv.dim(); ++r) {
                complex_t acc{};
                for (std::size_t c = 0; c < sv.dim(); ++c) {
                    acc += m(r, c) * sv[c];
                }
                REQUIRE(std::abs(acc - fast[r]) < 1e-13);
            }
            REQUIRE(std::abs(fast.norm() - 1.0) < 1e-12);
        }
    }
}

TEST_CASE("collective phase", "[statevector]") {
    RngStream rng(7, 1);
    SECTION("theta = 0 is the identity") {
        const auto sv = random_state(3, rng);
        REQUIRE(distance_up_to_phase(sv.apply_collective_phase(0.0), sv) < 1e-15);
    }
    SECTION("single excited qubit gains e^{+i theta}") {
        const double theta = 0.37;
        const auto out = StateVector::basis_state(1, 1).apply_collective_phase(theta);
        REQUIRE(std::abs(out[1] - std::polar(1.0, theta)) < 1e-15);
    }
    SECTION("weight-4 strings of 8 qubits are left exactly unchanged") {
        const double inv = 1.0 / std::sqrt(2.0);
        const auto cw = StateVector::from_bitstrings(
            8, {{"00111100", inv}, {"11000011", inv}});
        const auto out = cw.apply_collective_phase(1.234);
        for (std::size_t i = 0; i < cw.dim(); ++i) {
            REQUIRE(std::abs(out[i] - cw[i]) < 1e-15);
        }
    }
    SECTION("commutes exactly with every Z_j") {
        const auto sv = random_state(4, rng);
        const double theta = 0.81;
        for (int j = 1; j <= 4; ++j) {
            const auto zj = PauliString::single(4, j, 'Z');
            const auto a = sv.apply_collective_phase(theta).apply_pauli(zj);
            const auto b = sv.apply_pauli(zj).apply_collective_phase(theta);
            for (std::size_t i = 0; i < sv.dim(); ++i) {
                REQUIRE(a[i] == b[i]);
            }
        }
    }
}

TEST_CASE("pauli eigenvalue measurement", "[statevector]") {
    RngStream rng(7, 2);
    SECTION("deterministic on eigenstates") {
        const double inv = 1.0 / std::sqrt(2.0);
        const auto bell = StateVector::from_bitstrings(2, {{"00", inv}, {"11", inv}});
        auto [eig, post] = bell.measure_pauli(PauliString::from_string("ZZ"), rng);
        REQUIRE(eig == 1);
        REQUIRE(distance_up_to_phase(post, bell) < 1e-12);
    }
    SECTION("Z on |+> is a fair coin") {
        StateVector plus(1);
        plus[0] = plus[1] = 1.0 / std::sqrt(2.0);
        int ones = 0;
        const int shots = 20000;
        for (int s = 0; s < shots; ++s) {
            auto [eig, post] = plus.measure_pauli(PauliString::from_string("Z"), rng);
            ones += (eig == 1);
            REQUIRE(std::abs(post.norm() - 1.0) < 1e-12);
        }
        // 5 sigma of a fair binomial at 20k shots
        REQUIRE(std::abs(ones - shots / 2) < 5 * std::sqrt(shots * 0.25));
    }
    SECTION("non-Hermitian Paulis are rejected") {
        const auto sv = StateVector::basis_state(1, 0);
        REQUIRE_THROWS_AS(sv.measure_pauli(PauliString::from_string("-iY"), rng),
                          std::invalid_argument);
    }
}

TEST_CASE("tensor products and qubit permutations", "[statevector]") {
    RngStream rng(7, 3);
    const auto a = random_state(2, rng);
    const auto b = random_state(3, rng);
    const auto joint = a.kron(b);
    REQUIRE(joint.num_qubits() == 5);
    REQUIRE(std::abs(joint[0b01011] - a[0b01] * b[0b011]) < 1e-15);

    // swap qubits 1 and 2 of a 3-qubit register
    const auto sv = StateVector::from_bitstrings(3, {{"100", 1.0}});
    const auto swapped = sv.permute_qubits({2, 1, 3});
    REQUIRE(std::abs(swapped[StateVector::parse_bits(3, "010")] - complex_t{1, 0}) <
            1e-15);
}

TEST_CASE("single-qubit operator application matches dense embedding", "[statevector]") {
    RngStream rng(7, 4);
    CMatrix op(2, 2); // a non-unitary operator
    op(0, 0) = complex_t{0.3, 0.1};
    op(0, 1) = complex_t{0.0, 0.9};
    op(1, 0) = complex_t{0.2, 0.0};
    op(1, 1) = complex_t{-0.5, 0.4};
    const auto sv = random_state(3, rng);
    for (int q = 1; q <= 3; ++q) {
        CMatrix full = CMatrix::identity(1);
        for (int j = 1; j <= 3; ++j) {
            full = full.kron(j == q ? op : CMatrix::identity(2));
        }
        const auto fast = sv.apply_single_qubit(op, q);
        for (std::size_t r = 0; r < sv.dim(); ++r) {
            complex_t acc{};
            for (std::size_t c = 0; c < sv.dim(); ++c) {
                acc += full(r, c) * sv[c];
            }
            REQUIRE(std::abs(acc - fast[r]) < 1e-13);
        }
    }
}

TEST_CASE("cnot and h gates", "[statevector]") {
    const auto b00 = StateVector::basis_state(2, 0);
    const auto bell = b00.apply_h(1).apply_cnot(1, 2);
    const double inv = 1.0 / std::sqrt(2.0);
    REQUIRE(std::abs(bell[0b00] - complex_t{inv, 0}) < 1e-15);
    REQUIRE(std::abs(bell[0b11] - complex_t{inv, 0}) < 1e-15);
    REQUIRE(std::abs(bell[0b01]) < 1e-15);

    // CZ is symmetric and diagonal
    RngStream rng(7, 5);
    const auto sv = random_state(2, rng);
    const auto a = sv.apply_cz(1, 2);
    const auto b = sv.apply_cz(2, 1);
    for (std::size_t i = 0; i < sv.dim(); ++i) {
        REQUIRE(a[i] == b[i]);
    }
}
