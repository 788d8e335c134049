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

#include "ceqec/analytics.hpp"
#include "ceqec/channels.hpp"
#include "ceqec/twirl.hpp"
#include "helpers.hpp"

using namespace ceqec;
using ceqec::testing::random_state;

namespace {

RMatrix depolarizing_ptm(double p, int n) {
    RMatrix one(4);
    one(0, 0) = 1.0;
    for (int i = 1; i < 4; ++i) {
        one(static_cast<std::size_t>(i), static_cast<std::size_t>(i)) = 1.0 - 4.0 * p / 3.0;
    }
    RMatrix out = one;
    for (int j = 2; j <= n; ++j) {
        out = out.kron(one);
    }
    return out;
}

} // namespace

TEST_CASE("channel completeness", "[channels]") {
    REQUIRE(amplitude_damping_channel(0.3).completeness_defect() < 1e-12);
    REQUIRE(depolarizing_channel(0.2).completeness_defect() < 1e-12);
    REQUIRE(dephasing_channel(0.7).completeness_defect() < 1e-12);
    REQUIRE(mixed_noise_channel(2, 0.4, 0.01, 0.3).completeness_defect() < 1e-10);
    REQUIRE_THROWS_AS(amplitude_damping_channel(1.5), std::invalid_argument);
}

TEST_CASE("kraus trajectory sampling", "[channels]") {
    RngStream rng(11, 0);
    const auto ad = [](double g) { return amplitude_damping_channel(g); };
    SECTION("A_1 never fires on |0>") {
        const auto sv = StateVector::basis_state(1, 0);
        for (int s = 0; s < 200; ++s) {
            auto [post, outcome] = apply_kraus_trajectory(sv, ad(0.37), rng);
            REQUIRE(outcome == 0);
            REQUIRE(std::abs(post[0] - complex_t{1, 0}) < 1e-15);
        }
    }
    SECTION("gamma = 1 decays |1> with certainty") {
        const auto sv = StateVector::basis_state(1, 1);
        for (int s = 0; s < 50; ++s) {
            auto [post, outcome] = apply_kraus_trajectory(sv, ad(1.0), rng);
            REQUIRE(outcome == 1);
            REQUIRE(std::abs(post[0] - complex_t{1, 0}) < 1e-15);
        }
    }
    SECTION("gamma = 0.25 decay frequency on |1> within 3 sigma of binomial") {
        const auto sv = StateVector::basis_state(1, 1);
        const int shots = 100000;
        int decays = 0;
        for (int s = 0; s < shots; ++s) {
            RngStream stream(11, static_cast<std::uint64_t>(s) + 1);
            auto [post, outcome] = apply_kraus_trajectory(sv, ad(0.25), stream);
            decays += (outcome == 1);
        }
        const double freq = static_cast<double>(decays) / shots;
        const double sigma = std::sqrt(0.25 * 0.75 / shots);
        REQUIRE(std::abs(freq - 0.25) < 3 * sigma);
    }
    SECTION("embedded single-qubit channel matches the full-register one") {
        RngStream r1(11, 100), r2(11, 100);
        const auto sv = random_state(3, r1);
        const KrausChannel ch = ad(0.2);
        KrausChannel embedded{3, {}};
        for (const auto &k : ch.operators) {
            embedded.operators.push_back(
                CMatrix::identity(2).kron(k).kron(CMatrix::identity(2)));
        }
        RngStream s1(12, 0), s2(12, 0);
        auto [p1, o1] = apply_kraus_trajectory(sv, embedded, s1);
        auto [p2, o2] = apply_kraus_trajectory_on_qubit(sv, ch, 2, s2);
        REQUIRE(o1 == o2);
        REQUIRE(distance_up_to_phase(p1, p2) < 1e-12);
    }
}

TEST_CASE("channel superoperator", "[channels]") {
    SECTION("identity channel gives the identity matrix") {
        KrausChannel id{1, {CMatrix::identity(2)}};
        REQUIRE(channel_superoperator(id).max_abs_diff(RMatrix::identity(4)) < 1e-14);
    }
    SECTION("depolarizing gives diag(1, 1-4p/3, ...)") {
        const double p = 0.12;
        REQUIRE(channel_superoperator(depolarizing_channel(p))
                    .max_abs_diff(depolarizing_ptm(p, 1)) < 1e-14);
    }
    SECTION("dephasing matches its dense construction") {
        const double theta = 0.4;
        const auto s = channel_superoperator(dephasing_channel(theta));
        RMatrix want(4);
        want(0, 0) = 1.0;
        want(1, 1) = std::cos(2 * theta);
        want(2, 2) = std::cos(2 * theta);
        want(3, 3) = 1.0;
        REQUIRE(s.max_abs_diff(want) < 1e-14);
    }
    SECTION("trace preservation: first row is (1, 0, ..., 0)") {
        for (const auto &ch :
             {amplitude_damping_channel(0.3), depolarizing_channel(0.2),
              mixed_noise_channel(1, 0.5, 0.05, 0.2)}) {
            const auto s = channel_superoperator(ch);
            REQUIRE(std::abs(s(0, 0) - 1.0) < 1e-12);
            for (std::size_t j = 1; j < s.dim(); ++j) {
                REQUIRE(std::abs(s(0, j)) < 1e-12);
            }
        }
        const auto s2 = channel_superoperator(mixed_noise_channel(2, 0.5, 0.05, 0.2));
        REQUIRE(std::abs(s2(0, 0) - 1.0) < 1e-12);
        for (std::size_t j = 1; j < s2.dim(); ++j) {
            REQUIRE(std::abs(s2(0, j)) < 1e-12);
        }
    }
    SECTION("size guard") {
        KrausChannel big{4, {CMatrix::identity(16)}};
        REQUIRE_THROWS_AS(channel_superoperator(big), std::invalid_argument);
    }
}

TEST_CASE("trajectory frequencies reproduce superoperator predictions", "[channels]") {
    // Empirical Pauli expectation values over many trajectories against the
    // PTM-evolved expectation, five-sigma gate.
    for (int n = 1; n <= 2; ++n) {
        for (int which = 0; which < 2; ++which) {
            const KrausChannel base = which == 0 ? amplitude_damping_channel(0.18)
                                                 : depolarizing_channel(0.11);
            const KrausChannel ch = (n == 1) ? base : tensor_power(base, 2);
            RngStream init(21, static_cast<std::uint64_t>(n * 10 + which));
            const auto sv = random_state(n, init);
            const auto ptm = channel_superoperator(ch);

            const auto probe =
                (n == 1) ? PauliString::from_string("Z") : PauliString::from_string("ZX");
            const std::size_t probe_index = (n == 1) ? 3 : 3 * 4 + 1;

            // predicted <probe> = sum_j PTM[probe][j] tr(P_j rho)
            std::vector<double> in_vec(ptm.dim());
            for (std::size_t j = 0; j < ptm.dim(); ++j) {
                CMatrix pj = pauli_basis_matrix(n, j);
                complex_t acc{};
                for (std::size_t r = 0; r < sv.dim(); ++r) {
                    for (std::size_t c = 0; c < sv.dim(); ++c) {
                        acc += std::conj(sv[r]) * pj(r, c) * sv[c];
                    }
                }
                in_vec[j] = acc.real();
            }
            double predicted = 0.0;
            for (std::size_t j = 0; j < ptm.dim(); ++j) {
                predicted += ptm(probe_index, j) * in_vec[j];
            }

            const int shots = 100000;
            double sum = 0.0;
            double sum_sq = 0.0;
            for (int s = 0; s < shots; ++s) {
                RngStream stream(33, static_cast<std::uint64_t>(s));
                auto [post, outcome] = apply_kraus_trajectory(sv, ch, stream);
                const auto pv = post.apply_pauli(probe);
                const double val = post.inner_product(pv).real();
                sum += val;
                sum_sq += val * val;
            }
            const double mean = sum / shots;
            const double var = std::max(0.0, sum_sq / shots - mean * mean);
            const double sigma = std::sqrt(var / shots) + 1e-12;
            REQUIRE(std::abs(mean - predicted) < 5 * sigma + 1e-9);
        }
    }
}

TEST_CASE("single-qubit clifford group has 24 elements", "[twirl]") {
    REQUIRE(single_qubit_cliffords().size() == 24);
}

TEST_CASE("pauli twirl of the coherent rotation is the dephasing channel", "[twirl]") {
    for (double theta : {0.15, 0.6, 1.1}) {
        const auto twirled =
            twirl_channel(collective_phase_channel(1, theta), TwirlGroup::kPauliGroup);
        const auto target = channel_superoperator(dephasing_channel(theta));
        REQUIRE(twirled.max_abs_diff(target) < 1e-12);
    }
}

TEST_CASE("clifford twirl of the mixed channel at n=1 is depolarizing D_q", "[twirl]") {
    RngStream rng(17, 0);
    for (int trial = 0; trial < 5; ++trial) {
        const double lambda = rng.uniform();
        const double p = 0.4 * rng.uniform();
        const double theta = rng.uniform();
        const auto twirled =
            twirl_channel(mixed_noise_channel(1, lambda, p, theta), TwirlGroup::kSingleQubitCliffordTensor);
        const double q = analytics::twirled_q(lambda, p, theta, 1).q;
        REQUIRE(twirled.max_abs_diff(channel_superoperator(depolarizing_channel(q))) <
                1e-12);
    }
}

TEST_CASE("twirl fixes its fixed points", "[twirl]") {
    SECTION("identity channel is unchanged") {
        KrausChannel id{1, {CMatrix::identity(2)}};
        for (auto group : {TwirlGroup::kPauliGroup, TwirlGroup::kSingleQubitCliffordTensor}) {
            REQUIRE(twirl_channel(id, group).max_abs_diff(RMatrix::identity(4)) < 1e-12);
        }
    }
    SECTION("a Pauli channel is already twirled") {
        const auto dp = depolarizing_channel(0.23);
        const auto want = channel_superoperator(dp);
        for (auto group : {TwirlGroup::kPauliGroup, TwirlGroup::kSingleQubitCliffordTensor}) {
            REQUIRE(twirl_channel(dp, group).max_abs_diff(want) < 1e-12);
        }
        const auto deph = dephasing_channel(0.5);
        REQUIRE(twirl_channel(deph, TwirlGroup::kPauliGroup)
                    .max_abs_diff(channel_superoperator(deph)) < 1e-12);
    }
    SECTION("size guard") {
        KrausChannel big{3, {CMatrix::identity(8)}};
        REQUIRE_THROWS_AS(twirl_channel(big, TwirlGroup::kPauliGroup),
                          std::invalid_argument);
    }
}
