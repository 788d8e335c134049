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

#include <array>
#include <atomic>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <thread>
#include <vector>

#include "ceqec/channels.hpp"
#include "ceqec/concatenation.hpp"
#include "ceqec/pauli.hpp"
#include "ceqec/rng.hpp"
#include "ceqec/statevector.hpp"

namespace ceqec {

struct KlReport {
    double gamma = 0.0;
    bool ok = false;
    // Standard Knill-Laflamme form <i|K_a^dag K_b|j> = delta delta g_a.
    std::array<double, 9> g{};
    double max_offdiag = 0.0;
    double max_g_asymmetry = 0.0; // |g_a from |0_L> - g_a from |1_L>|
    // The product form <i|K_a K_b|j> kept for reference; its diagonal
    // vanishes for a >= 1 because A_1 A_1 = 0.
    std::array<double, 9> g_product_form{};
    double max_offdiag_product_form = 0.0;
};

enum class MemoryOutcome { kSuccess, kCorrectedWrong, kUncorrectable };

struct MemoryStats {
    std::uint64_t trajectories = 0;
    std::uint64_t success = 0;
    std::uint64_t corrected_wrong = 0;
    std::uint64_t uncorrectable = 0;

    std::uint64_t failures() const { return corrected_wrong + uncorrectable; }
    double failure_rate() const {
        return trajectories ? static_cast<double>(failures()) /
                                  static_cast<double>(trajectories)
                            : 0.0;
    }
    /// 95% normal-approximation interval on the failure rate.
    std::pair<double, double> ci95() const {
        const double p = failure_rate();
        const double half =
            1.959963985 * std::sqrt(p * (1.0 - p) / static_cast<double>(trajectories));
        return {std::max(0.0, p - half), std::min(1.0, p + half)};
    }
};

struct RecoveredLogical {
    complex_t alpha{};
    complex_t beta{};

    double norm_sq() const { return std::norm(alpha) + std::norm(beta); }
};

/// The eight-qubit constant-excitation amplitude-damping code
///
///   |0_L> = (|11110000> + |00001111>)/sqrt2
///   |1_L> = (|00111100> + |11000011>)/sqrt2
///
/// in its block qubit ordering. The logical Pauli patterns are derived from
/// the rotated concatenated construction (LNCY4 outer, dual-rail inner,
/// followed by the de-interleaving permutation) rather than assumed.
class EightQubitCode {
  public:
    static constexpr int kQubits = 8;
    static constexpr double kSuccessFidelity = 1.0 - 1e-9;

    EightQubitCode()
        : concatenated_(concatenate(builtin_code("LNCY4"), InnerKind::kKlm)),
          interleave_(InterleavePermutation::make(1, 4)) {
        codeword_strings_[0] = {bits("11110000"), bits("00001111")};
        codeword_strings_[1] = {bits("00111100"), bits("11000011")};
        codewords_[0] = make_codeword(codeword_strings_[0]);
        codewords_[1] = make_codeword(codeword_strings_[1]);

        logical_x_ = interleave_.apply_inverse(
            concatenated_.logical_operator(concatenated_.outer.logical_x[0]));
        logical_z_ = interleave_.apply_inverse(
            concatenated_.logical_operator(concatenated_.outer.logical_z[0]));

        for (int a = 1; a <= 4; ++a) {
            PauliString zz(kQubits);
            zz.set_z_bit(2 * a - 1, true);
            zz.set_z_bit(2 * a, true);
            syndrome_observables_[static_cast<std::size_t>(a - 1)] = zz;
        }

        // Corrupted codeword strings per damped qubit, off the listing that a
        // single A_1 on qubit a clears that bit of the unique surviving
        // support string of each codeword.
        for (int a = 1; a <= 8; ++a) {
            for (int word = 0; word < 2; ++word) {
                const std::uint64_t m = qubit_bit(a);
                std::optional<std::uint64_t> survivor;
                for (std::uint64_t s : codeword_strings_[static_cast<std::size_t>(word)]) {
                    if (s & m) {
                        survivor = s & ~m;
                    }
                }
                if (!survivor) {
                    throw std::logic_error("EightQubitCode: no surviving string");
                }
                corrupted_strings_[static_cast<std::size_t>(a - 1)]
                                  [static_cast<std::size_t>(word)] = *survivor;
            }
        }
    }

    static const EightQubitCode &instance() {
        static const EightQubitCode kCode;
        return kCode;
    }

    const ConcatenatedCode &concatenated() const { return concatenated_; }
    const InterleavePermutation &interleave() const { return interleave_; }
    const StateVector &codeword(int i) const {
        return codewords_[static_cast<std::size_t>(i)];
    }
    const PauliString &logical_x() const { return logical_x_; }
    const PauliString &logical_z() const { return logical_z_; }
    const std::array<PauliString, 4> &syndrome_observables() const {
        return syndrome_observables_;
    }
    std::uint64_t corrupted_string(int damped_qubit, int word) const {
        return corrupted_strings_[static_cast<std::size_t>(damped_qubit - 1)]
                                 [static_cast<std::size_t>(word)];
    }

    /// Exact encoding isometry alpha|0_L> + beta|1_L>.
    StateVector encode(complex_t alpha, complex_t beta) const {
        if (std::abs(std::norm(alpha) + std::norm(beta) - 1.0) > 1e-9) {
            throw std::invalid_argument("encode: logical amplitudes must be normalized");
        }
        StateVector out(kQubits);
        for (std::size_t i = 0; i < out.dim(); ++i) {
            out[i] = alpha * codewords_[0][i] + beta * codewords_[1][i];
        }
        return out;
    }

    /// Gate-level encoder: a CNOT/H network building the inner repetition
    /// copies and the block rotation from |psi>|0^7>. Input logical qubit is
    /// qubit 1. Equivalence with encode() is a tested property.
    StateVector encode_circuit(complex_t alpha, complex_t beta) const {
        StateVector sv(kQubits);
        sv[0] = alpha;
        sv[bits("10000000")] = beta;
        sv = sv.apply_cnot(1, 2);
        sv = sv.apply_h(3);
        sv = sv.apply_cnot(3, 4);
        sv = sv.apply_cnot(3, 1);
        sv = sv.apply_cnot(3, 2);
        for (int j = 1; j <= 4; ++j) {
            sv = sv.apply_cnot(j, j + 4);
        }
        for (int j = 1; j <= 4; ++j) {
            sv = sv.apply_x(j);
        }
        return sv;
    }

    /// Knill-Laflamme check for {K_0 = A_0^x8, K_1..K_8} at damping gamma.
    KlReport kl_check(double gamma) const {
        if (gamma < 0.0 || gamma > 1.0) {
            throw std::invalid_argument("kl_check: gamma outside [0,1]");
        }
        KlReport rep;
        rep.gamma = gamma;

        const KrausChannel ad = amplitude_damping_channel(gamma);
        std::array<std::array<StateVector, 9>, 2> damped; // damped[i][a] = K_a |i_L>
        for (int i = 0; i < 2; ++i) {
            for (int a = 0; a <= 8; ++a) {
                damped[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)] =
                    apply_kraus_word(codewords_[static_cast<std::size_t>(i)], ad, a);
            }
        }

        double max_off = 0.0;
        double asym = 0.0;
        for (int a = 0; a <= 8; ++a) {
            const double g0 = damped[0][static_cast<std::size_t>(a)].norm_sq();
            const double g1 = damped[1][static_cast<std::size_t>(a)].norm_sq();
            rep.g[static_cast<std::size_t>(a)] = 0.5 * (g0 + g1);
            asym = std::max(asym, std::abs(g0 - g1));
        }
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) {
                for (int a = 0; a <= 8; ++a) {
                    for (int b = 0; b <= 8; ++b) {
                        if (i == j && a == b) {
                            continue;
                        }
                        const complex_t entry =
                            damped[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)]
                                .inner_product(damped[static_cast<std::size_t>(j)]
                                                     [static_cast<std::size_t>(b)]);
                        max_off = std::max(max_off, std::abs(entry));
                    }
                }
            }
        }
        rep.max_offdiag = max_off;
        rep.max_g_asymmetry = asym;
        rep.ok = max_off < 1e-12 && asym < 1e-12;

        // Reference numbers for the literal operator-product form K_a K_b.
        double max_off_prod = 0.0;
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) {
                for (int a = 0; a <= 8; ++a) {
                    for (int b = 0; b <= 8; ++b) {
                        StateVector w = apply_kraus_word(
                            damped_word_raw(codewords_[static_cast<std::size_t>(j)], ad, b),
                            ad, a);
                        const complex_t entry =
                            codewords_[static_cast<std::size_t>(i)].inner_product(w);
                        if (i == j && a == b) {
                            rep.g_product_form[static_cast<std::size_t>(a)] = entry.real();
                        } else {
                            max_off_prod = std::max(max_off_prod, std::abs(entry));
                        }
                    }
                }
            }
        }
        rep.max_offdiag_product_form = max_off_prod;
        return rep;
    }

    /// Measures Z_1Z_2, Z_3Z_4, Z_5Z_6, Z_7Z_8 in sequence; b_a = (1-m_a)/2.
    std::pair<std::array<int, 4>, StateVector> extract_syndrome(const StateVector &state,
                                                                RngStream &rng) const {
        if (state.num_qubits() != kQubits) {
            throw std::invalid_argument("extract_syndrome: need an 8-qubit state");
        }
        std::array<int, 4> b{};
        StateVector post = state;
        for (int a = 1; a <= 4; ++a) {
            auto [eig, next] =
                post.measure_pauli(syndrome_observables_[static_cast<std::size_t>(a - 1)],
                                   rng);
            b[static_cast<std::size_t>(a - 1)] = (1 - eig) / 2;
            post = std::move(next);
        }
        return {b, post};
    }

    /// Logical readout for a post-syndrome state. Weight-0 syndromes decode
    /// off the intact codespace; weight-1 syndromes read the retained qubits
    /// of the damped-pair product structure (identical for either damped
    /// qubit of the pair, which is the degeneracy); weight >= 2 syndromes are
    /// uncorrectable.
    std::optional<RecoveredLogical> recover(const StateVector &state,
                                            const std::array<int, 4> &b) const {
        const int wt = b[0] + b[1] + b[2] + b[3];
        if (wt >= 2) {
            return std::nullopt;
        }
        RecoveredLogical out;
        if (wt == 0) {
            out.alpha = codewords_[0].inner_product(state);
            out.beta = codewords_[1].inner_product(state);
            return out;
        }
        int pair = 0;
        for (int a = 1; a <= 4; ++a) {
            if (b[static_cast<std::size_t>(a - 1)]) {
                pair = a;
            }
        }
        // Either qubit 2*pair-1 or 2*pair was damped; the readout sums the
        // two branch overlaps (at most one is populated for damping events).
        const int odd = 2 * pair - 1;
        const int even = 2 * pair;
        out.alpha = state[corrupted_string(odd, 0)] + state[corrupted_string(even, 0)];
        out.beta = state[corrupted_string(odd, 1)] + state[corrupted_string(even, 1)];
        return out;
    }

    PauliString logical_rz_generator() const { return logical_z_; }

    /// Logical X: transversal Pauli pattern derived from the construction.
    StateVector apply_logical_x(const StateVector &state) const {
        return state.apply_pauli(logical_x_);
    }

    StateVector apply_logical_z(const StateVector &state) const {
        return state.apply_pauli(logical_z_);
    }

    /// Logical R^z(theta) = exp(i theta Z_L): diagonal physical phase pattern
    /// from the derived logical Z.
    StateVector apply_logical_rz(const StateVector &state, double theta) const {
        const std::uint64_t zm = logical_z_.index_mask_z();
        StateVector out = state;
        for (std::size_t i = 0; i < out.dim(); ++i) {
            if (out[i] == complex_t{}) {
                continue;
            }
            const bool minus = std::popcount(i & zm) & 1;
            out[i] *= std::polar(1.0, minus ? -theta : theta);
        }
        return out;
    }

    /// The block rotation X^(x4) x I^(x4) relating this code to its
    /// repetition-concatenated partner.
    PauliString block_rotation() const {
        PauliString r(kQubits);
        for (int j = 1; j <= 4; ++j) {
            r.set_x_bit(j, true);
        }
        return r;
    }

    /// Logical CNOT between two code blocks of a 16-qubit register
    /// (control block = qubits 1..8): the rotation-conjugated transversal
    /// CNOT (R x R) CNOT^(x8) (R x R).
    StateVector apply_logical_cnot(const StateVector &joint) const {
        if (joint.num_qubits() != 2 * kQubits) {
            throw std::invalid_argument("apply_logical_cnot: need a 16-qubit state");
        }
        StateVector out = apply_block_rotations(joint);
        for (int j = 1; j <= kQubits; ++j) {
            out = out.apply_cnot(j, j + kQubits);
        }
        return apply_block_rotations(out);
    }

    /// Logical Hadamard by gate teleportation with an ideal |+_L> ancilla:
    /// logical CZ, then a logical X measurement on the data block, then a
    /// Pauli fix-up on the ancilla block, which ends holding H|psi_L>.
    /// Returns the 16-qubit post state (data block in an X_L eigenstate) and
    /// the measurement outcome.
    std::pair<StateVector, int> teleported_hadamard(const StateVector &data,
                                                    RngStream &rng) const {
        if (data.num_qubits() != kQubits) {
            throw std::invalid_argument("teleported_hadamard: need an 8-qubit state");
        }
        const double inv = 1.0 / std::sqrt(2.0);
        StateVector joint = data.kron(encode(inv, inv));
        joint = apply_logical_cz(joint);

        PauliString xl1(2 * kQubits);
        for (int j = 1; j <= kQubits; ++j) {
            if (logical_x_.x_bit(j)) {
                xl1.set_x_bit(j, true);
            }
        }
        auto [eig, post] = joint.measure_pauli(xl1, rng);
        if (eig == -1) {
            PauliString xl2(2 * kQubits);
            for (int j = 1; j <= kQubits; ++j) {
                if (logical_x_.x_bit(j)) {
                    xl2.set_x_bit(j + kQubits, true);
                }
            }
            post = post.apply_pauli(xl2);
        }
        return {post, eig};
    }

    /// Memory experiment: T rounds of per-qubit amplitude damping at rate
    /// delta, then one syndrome extraction and recovery. Damping locations
    /// are sampled per step as independent events (the error model the
    /// analytic failure curve counts), and the conditional quantum evolution
    /// for the sampled locations runs through the real syndrome/recovery
    /// pipeline.
    MemoryOutcome memory_trajectory(complex_t alpha, complex_t beta, double delta,
                                    int steps, RngStream &rng) const {
        if (delta < 0.0 || delta > 1.0) {
            throw std::invalid_argument("memory_trajectory: delta outside [0,1]");
        }
        std::uint64_t damped_mask = 0; // statevector index bits
        constexpr std::uint64_t all8 = 0xFF;
        for (int t = 0; t < steps && damped_mask != all8; ++t) {
            for (int q = 1; q <= kQubits; ++q) {
                if (rng.uniform() < delta) {
                    damped_mask |= qubit_bit(q);
                }
            }
        }
        return classify_after_damping(alpha, beta, damped_mask, rng);
    }

    /// Applies the damping pattern and runs syndrome extraction + recovery.
    MemoryOutcome classify_after_damping(complex_t alpha, complex_t beta,
                                         std::uint64_t damped_mask, RngStream &rng) const {
        // A_1 annihilates unexcited qubits: support strings survive only if
        // they are excited on every damped position.
        StateVector state(kQubits);
        double norm_sq = 0.0;
        const complex_t inv_sqrt2{1.0 / std::sqrt(2.0), 0.0};
        const complex_t coeff[2] = {alpha * inv_sqrt2, beta * inv_sqrt2};
        for (int word = 0; word < 2; ++word) {
            for (std::uint64_t s : codeword_strings_[static_cast<std::size_t>(word)]) {
                if ((s & damped_mask) == damped_mask) {
                    state[s & ~damped_mask] += coeff[word];
                    norm_sq += std::norm(coeff[word]);
                }
            }
        }
        if (norm_sq <= 0.0) {
            return MemoryOutcome::kUncorrectable;
        }
        const double inv = 1.0 / std::sqrt(norm_sq);
        for (std::size_t i = 0; i < state.dim(); ++i) {
            state[i] *= inv;
        }

        auto [b, post] = extract_syndrome(state, rng);
        const auto rec = recover(post, b);
        if (!rec) {
            return MemoryOutcome::kUncorrectable;
        }
        const double fid = std::norm(std::conj(alpha) * rec->alpha +
                                     std::conj(beta) * rec->beta);
        return fid >= kSuccessFidelity ? MemoryOutcome::kSuccess
                                       : MemoryOutcome::kCorrectedWrong;
    }

    /// Runs `trajectories` memory experiments with per-trajectory random
    /// streams (master_seed, t); results are independent of worker count and
    /// scheduling.
    MemoryStats memory_run(complex_t alpha, complex_t beta, double delta, int steps,
                           std::uint64_t trajectories, std::uint64_t master_seed,
                           int threads = 0) const {
        const int workers = resolve_workers(threads);
        std::vector<MemoryStats> partial(static_cast<std::size_t>(workers));
        std::vector<std::thread> pool;
        const std::uint64_t chunk = (trajectories + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                MemoryStats &stats = partial[static_cast<std::size_t>(w)];
                const std::uint64_t begin = chunk * static_cast<std::uint64_t>(w);
                const std::uint64_t end = std::min(trajectories, begin + chunk);
                for (std::uint64_t t = begin; t < end; ++t) {
                    RngStream stream(master_seed, t);
                    switch (memory_trajectory(alpha, beta, delta, steps, stream)) {
                    case MemoryOutcome::kSuccess:
                        ++stats.success;
                        break;
                    case MemoryOutcome::kCorrectedWrong:
                        ++stats.corrected_wrong;
                        break;
                    case MemoryOutcome::kUncorrectable:
                        ++stats.uncorrectable;
                        break;
                    }
                    ++stats.trajectories;
                }
            });
        }
        for (auto &th : pool) {
            th.join();
        }
        MemoryStats total;
        for (const auto &p : partial) {
            total.trajectories += p.trajectories;
            total.success += p.success;
            total.corrected_wrong += p.corrected_wrong;
            total.uncorrectable += p.uncorrectable;
        }
        return total;
    }

    static int resolve_workers(int requested) {
        if (requested > 0) {
            return requested;
        }
        if (const char *env = std::getenv("CE_QEC_THREADS")) {
            const int v = std::atoi(env);
            if (v > 0) {
                return v;
            }
        }
        const unsigned hw = std::thread::hardware_concurrency();
        return hw ? static_cast<int>(hw) : 1;
    }

    static std::uint64_t bits(const char *s) { return StateVector::parse_bits(8, s); }

    /// Statevector index bit of qubit q (1-indexed, qubit 1 most significant).
    static std::uint64_t qubit_bit(int q) { return std::uint64_t{1} << (kQubits - q); }

  private:
    StateVector make_codeword(const std::array<std::uint64_t, 2> &strings) const {
        StateVector v(kQubits);
        const double inv = 1.0 / std::sqrt(2.0);
        v[strings[0]] = inv;
        v[strings[1]] = inv;
        return v;
    }

    /// K_a |v>: A_1 on qubit a (a = 0 means none), A_0 elsewhere.
    StateVector apply_kraus_word(const StateVector &v, const KrausChannel &ad,
                                 int a) const {
        return damped_word_raw(v, ad, a);
    }

    static StateVector damped_word_raw(const StateVector &v, const KrausChannel &ad,
                                       int a) {
        StateVector out = v;
        for (int q = 1; q <= kQubits; ++q) {
            out = out.apply_single_qubit(ad.operators[q == a ? 1 : 0], q);
        }
        return out;
    }

    StateVector apply_block_rotations(const StateVector &joint) const {
        StateVector out = joint;
        for (int j = 1; j <= 4; ++j) {
            out = out.apply_x(j);
            out = out.apply_x(j + kQubits);
        }
        return out;
    }

    /// Logical CZ between the two blocks of a 16-qubit register: the diagonal
    /// phase pattern -1 on the (Z_L = -1) x (Z_L = -1) sector.
    StateVector apply_logical_cz(const StateVector &joint) const {
        const std::uint64_t zm = logical_z_.index_mask_z();
        const std::uint64_t zm1 = zm << kQubits;
        StateVector out = joint;
        for (std::size_t i = 0; i < out.dim(); ++i) {
            if (out[i] == complex_t{}) {
                continue;
            }
            const bool m1 = std::popcount(i & zm1) & 1;
            const bool m2 = std::popcount(i & zm) & 1;
            if (m1 && m2) {
                out[i] = -out[i];
            }
        }
        return out;
    }

    ConcatenatedCode concatenated_;
    InterleavePermutation interleave_;
    std::array<std::array<std::uint64_t, 2>, 2> codeword_strings_{};
    std::array<StateVector, 2> codewords_;
    PauliString logical_x_;
    PauliString logical_z_;
    std::array<PauliString, 4> syndrome_observables_;
    // corrupted_strings_[a-1][word]: the surviving support string of
    // codeword `word` after damping qubit a.
    std::array<std::array<std::uint64_t, 2>, 8> corrupted_strings_{};
};

} // namespace ceqec
