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

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "ceqec/pauli.hpp"
#include "ceqec/stabilizer_code.hpp"
#include "ceqec/statevector.hpp"

namespace ceqec {

enum class InnerKind { kRep2, kKlm };

inline std::string inner_kind_name(InnerKind k) {
    return k == InnerKind::kRep2 ? "REP2" : "KLM";
}

inline InnerKind inner_kind_from_name(const std::string &s) {
    if (s == "REP2") {
        return InnerKind::kRep2;
    }
    if (s == "KLM") {
        return InnerKind::kKlm;
    }
    throw std::invalid_argument("inner_kind_from_name: expected REP2 or KLM");
}

/// pi_m sends qubit j of the first block of mn qubits to position 2j-1 and
/// qubit j of the second block to position 2j (pi = pi_1).
struct InterleavePermutation {
    int m = 1;
    int n = 0;
    std::vector<int> mapping; // 1-indexed: block-layout qubit j sits at mapping[j-1]

    static InterleavePermutation make(int m, int n) {
        if (m < 1 || n < 1) {
            throw std::invalid_argument("InterleavePermutation: bad parameters");
        }
        InterleavePermutation p;
        p.m = m;
        p.n = n;
        const int half = m * n;
        p.mapping.resize(static_cast<std::size_t>(2 * half));
        for (int j = 1; j <= half; ++j) {
            p.mapping[static_cast<std::size_t>(j - 1)] = 2 * j - 1;
            p.mapping[static_cast<std::size_t>(half + j - 1)] = 2 * j;
        }
        p.check_bijection();
        return p;
    }

    void check_bijection() const {
        std::vector<bool> seen(mapping.size(), false);
        for (int v : mapping) {
            if (v < 1 || v > static_cast<int>(mapping.size()) ||
                seen[static_cast<std::size_t>(v - 1)]) {
                throw std::invalid_argument("InterleavePermutation: not a bijection");
            }
            seen[static_cast<std::size_t>(v - 1)] = true;
        }
    }

    /// Block layout -> interleaved layout.
    StateVector apply(const StateVector &sv) const { return sv.permute_qubits(mapping); }

    /// Interleaved layout -> block layout.
    StateVector apply_inverse(const StateVector &sv) const {
        std::vector<int> inv(mapping.size());
        for (std::size_t j = 0; j < mapping.size(); ++j) {
            inv[static_cast<std::size_t>(mapping[j] - 1)] = static_cast<int>(j + 1);
        }
        return sv.permute_qubits(inv);
    }

    PauliString apply(const PauliString &p) const {
        if (p.num_qubits() != static_cast<int>(mapping.size())) {
            throw std::invalid_argument("InterleavePermutation: Pauli size mismatch");
        }
        PauliString out(p.num_qubits());
        out.set_phase_exp(p.phase_exp());
        for (int j = 1; j <= p.num_qubits(); ++j) {
            const int tgt = mapping[static_cast<std::size_t>(j - 1)];
            out.set_x_bit(tgt, p.x_bit(j));
            out.set_z_bit(tgt, p.z_bit(j));
        }
        return out;
    }

    PauliString apply_inverse(const PauliString &p) const {
        if (p.num_qubits() != static_cast<int>(mapping.size())) {
            throw std::invalid_argument("InterleavePermutation: Pauli size mismatch");
        }
        PauliString out(p.num_qubits());
        out.set_phase_exp(p.phase_exp());
        for (int j = 1; j <= p.num_qubits(); ++j) {
            const int tgt = mapping[static_cast<std::size_t>(j - 1)];
            out.set_x_bit(j, p.x_bit(tgt));
            out.set_z_bit(j, p.z_bit(tgt));
        }
        return out;
    }
};

/// pi_m (U x I^(x mn)) pi_m^dag: places u's tensor factors on the odd
/// interleaved positions and identity on the even ones. This is pure
/// permutation bookkeeping; it equals the concatenated logical operator only
/// for operators that are diagonal-compatible with the inner repetition code
/// (Z-type factors). See rep2_logical_lift for the general Pauli lift.
inline PauliString lift_operator(const PauliString &u, int m = 1) {
    const int half = u.num_qubits();
    (void)m; // block multiplicity only affects how callers slice `u`
    PauliString out(2 * half);
    out.set_phase_exp(u.phase_exp());
    for (int j = 1; j <= half; ++j) {
        out.set_x_bit(2 * j - 1, u.x_bit(j));
        out.set_z_bit(2 * j - 1, u.z_bit(j));
    }
    return out;
}

/// The logical lift of an outer Pauli through the inner repetition code:
/// X factors act on both qubits of the pair (X_bar = XX), Z factors on the
/// first (Z_bar = ZI). Exact phases carry through unchanged.
inline PauliString rep2_logical_lift(const PauliString &p) {
    const int half = p.num_qubits();
    PauliString out(2 * half);
    out.set_phase_exp(p.phase_exp());
    for (int j = 1; j <= half; ++j) {
        const bool a = p.x_bit(j);
        const bool b = p.z_bit(j);
        out.set_x_bit(2 * j - 1, a);
        out.set_x_bit(2 * j, a);
        out.set_z_bit(2 * j - 1, b);
    }
    return out;
}

/// The rotation R = (I x X)^(x n) in the interleaved layout: X on every even
/// position of 2*half qubits.
inline PauliString rotation_operator(int half) {
    PauliString r(2 * half);
    for (int j = 1; j <= half; ++j) {
        r.set_x_bit(2 * j, true);
    }
    return r;
}

/// Lookup decoder: minimum-weight correction per achievable syndrome, ties
/// broken by (weight, textual form). Misses are reported as uncorrectable.
struct DecoderTable {
    int syndrome_bits = 0;
    int max_weight = 0;
    std::vector<int> r_vector;
    std::unordered_map<std::uint64_t, PauliString> entries;

    static std::uint64_t key_of(const std::vector<int> &s) {
        std::uint64_t k = 0;
        for (std::size_t j = 0; j < s.size(); ++j) {
            if (s[j]) {
                k |= std::uint64_t{1} << j;
            }
        }
        return k;
    }

    /// The repetition-concatenated decoder Dec_{Stab,REP2}.
    std::optional<PauliString> decode_rep2(const std::vector<int> &s) const {
        if (static_cast<int>(s.size()) != syndrome_bits) {
            throw std::invalid_argument("DecoderTable: syndrome length mismatch");
        }
        const auto it = entries.find(key_of(s));
        if (it == entries.end()) {
            return std::nullopt;
        }
        return it->second;
    }

    /// Dec_{Stab,KLM}(s) = Dec_{Stab,REP2}(r xor s).
    std::optional<PauliString> decode_klm(const std::vector<int> &s) const {
        if (s.size() != r_vector.size()) {
            throw std::invalid_argument("DecoderTable: syndrome length mismatch");
        }
        std::vector<int> shifted(s.size());
        for (std::size_t j = 0; j < s.size(); ++j) {
            shifted[j] = s[j] ^ r_vector[j];
        }
        return decode_rep2(shifted);
    }
};

struct CeCheck {
    bool is_ce = false;
    int weight = -1; // shared excitation number when is_ce
    std::set<int> weights_seen;
};

/// C_{Stab,REP2} / C_{Stab,KLM}: an outer stabilizer code concatenated with
/// the two-qubit repetition code, optionally rotated by R into the dual-rail
/// (constant-excitation) form. Immutable after construction.
struct ConcatenatedCode {
    StabilizerCode outer;
    InnerKind inner = InnerKind::kRep2;
    StabilizerCode lifted; // the C_{Stab,REP2} stabilizer structure on 2n qubits
    PauliString rotation;
    std::vector<int> r_vector;
    std::vector<PauliString> word_stabilizer_generators;
    std::vector<PauliString> word_operators;

    int physical_qubits() const { return lifted.n; }

    /// Syndrome of a Pauli error: s_j = <bin(G_j), bin(E) + bin(R)>_sy for the
    /// KLM form (the R term is what the rotated codespace actually reports),
    /// and plain <bin(G_j), bin(E)>_sy for REP2.
    std::vector<int> syndrome_of(const PauliString &error) const {
        if (error.num_qubits() != lifted.n) {
            throw std::invalid_argument("syndrome_of: error size mismatch");
        }
        std::vector<int> s(lifted.generators.size());
        for (std::size_t j = 0; j < lifted.generators.size(); ++j) {
            int bit = symplectic_inner_product(lifted.generators[j], error);
            if (inner == InnerKind::kKlm) {
                bit ^= r_vector[j];
            }
            s[j] = bit;
        }
        return s;
    }

    /// Codespace basis in the concatenated code's own layout (interleaved).
    std::vector<StateVector> codespace_basis() const {
        auto basis = lifted.codespace_basis();
        if (inner == InnerKind::kKlm) {
            for (auto &v : basis) {
                v = v.apply_pauli(rotation);
            }
        }
        return basis;
    }

    /// True iff every computational basis state supporting the codespace has
    /// one shared Hamming weight; that weight is returned with the check.
    CeCheck constant_excitation_check() const {
        if (lifted.n > 14) {
            throw std::invalid_argument("constant_excitation_check: limited to n <= 14");
        }
        CeCheck out;
        for (const auto &v : codespace_basis()) {
            for (std::size_t i = 0; i < v.dim(); ++i) {
                if (std::abs(v[i]) > 1e-9) {
                    out.weights_seen.insert(std::popcount(i));
                }
            }
        }
        out.is_ce = out.weights_seen.size() == 1;
        out.weight = out.is_ce ? *out.weights_seen.begin() : -1;
        return out;
    }

    /// Transports an outer logical Pauli (on m code blocks) to this code:
    /// R^(x m) L_REP2(u) R^(x m) for KLM, L_REP2(u) for REP2. The conjugation
    /// only flips the phase and is computed exactly.
    PauliString logical_operator(const PauliString &u, int m = 1) const {
        if (u.num_qubits() != m * outer.n) {
            throw std::invalid_argument("logical_operator: operator size mismatch");
        }
        PauliString lifted_u = rep2_logical_lift(u);
        if (inner == InnerKind::kRep2) {
            return lifted_u;
        }
        const PauliString rm = rotation_operator(m * outer.n);
        return rm * lifted_u * rm;
    }

    DecoderTable build_lookup_decoder(int max_weight) const {
        if (lifted.n > 14) {
            throw std::invalid_argument("build_lookup_decoder: limited to 2n <= 14");
        }
        if (max_weight < 0 || max_weight > 3) {
            throw std::invalid_argument("build_lookup_decoder: max_weight out of range");
        }
        DecoderTable table;
        table.syndrome_bits = static_cast<int>(lifted.generators.size());
        table.max_weight = max_weight;
        table.r_vector = r_vector;

        std::vector<PauliString> candidates{PauliString::identity(lifted.n)};
        enumerate_paulis(lifted.n, max_weight, candidates);
        std::sort(candidates.begin(), candidates.end(),
                  [](const PauliString &a, const PauliString &b) {
                      const int wa = a.weight();
                      const int wb = b.weight();
                      if (wa != wb) {
                          return wa < wb;
                      }
                      return a.to_string() < b.to_string();
                  });
        for (const auto &p : candidates) {
            std::vector<int> s(lifted.generators.size());
            for (std::size_t j = 0; j < lifted.generators.size(); ++j) {
                s[j] = symplectic_inner_product(lifted.generators[j], p);
            }
            table.entries.emplace(DecoderTable::key_of(s), p);
        }
        return table;
    }

  private:
    static void enumerate_paulis(int n, int max_weight, std::vector<PauliString> &out) {
        std::vector<int> support;
        enumerate_support(n, 1, max_weight, support, out);
    }

    static void enumerate_support(int n, int first, int remaining,
                                  std::vector<int> &support,
                                  std::vector<PauliString> &out) {
        if (remaining == 0) {
            return;
        }
        for (int q = first; q <= n; ++q) {
            support.push_back(q);
            emit_letters(n, support, 0, PauliString::identity(n), out);
            enumerate_support(n, q + 1, remaining - 1, support, out);
            support.pop_back();
        }
    }

    static void emit_letters(int n, const std::vector<int> &support, std::size_t pos,
                             PauliString current, std::vector<PauliString> &out) {
        if (pos == support.size()) {
            out.push_back(current);
            return;
        }
        for (char letter : {'X', 'Y', 'Z'}) {
            PauliString next = current * PauliString::single(n, support[pos], letter);
            emit_letters(n, support, pos + 1, next, out);
        }
    }
};

/// Builds C_{Stab,REP2} or C_{Stab,KLM} from a validated outer code:
/// lifted generators {L(G_i)} plus the pair parities Z_{2j-1}Z_{2j}, the
/// rotation R, its r-vector, and the CWS word stabilizer / word operators.
inline ConcatenatedCode concatenate(const StabilizerCode &outer, InnerKind inner) {
    const auto report = outer.validate();
    if (!report.ok) {
        throw std::invalid_argument("concatenate: outer code invalid: " +
                                    report.failures.front());
    }
    ConcatenatedCode code;
    code.outer = outer;
    code.inner = inner;

    const int n2 = 2 * outer.n;
    code.lifted.name = outer.name + "x" + inner_kind_name(inner);
    code.lifted.n = n2;
    code.lifted.k = outer.k;
    for (const auto &g : outer.generators) {
        code.lifted.generators.push_back(rep2_logical_lift(g));
    }
    for (int j = 1; j <= outer.n; ++j) {
        PauliString zz(n2);
        zz.set_z_bit(2 * j - 1, true);
        zz.set_z_bit(2 * j, true);
        code.lifted.generators.push_back(zz);
    }
    for (const auto &lx : outer.logical_x) {
        code.lifted.logical_x.push_back(rep2_logical_lift(lx));
    }
    for (const auto &lz : outer.logical_z) {
        code.lifted.logical_z.push_back(rep2_logical_lift(lz));
    }
    code.lifted.distance_hint = outer.distance_hint;

    code.rotation = rotation_operator(outer.n);
    code.r_vector.resize(code.lifted.generators.size());
    for (std::size_t j = 0; j < code.lifted.generators.size(); ++j) {
        code.r_vector[j] =
            symplectic_inner_product(code.lifted.generators[j], code.rotation);
    }

    code.word_stabilizer_generators = code.lifted.generators;
    for (const auto &lz : code.lifted.logical_z) {
        code.word_stabilizer_generators.push_back(lz);
    }
    const std::size_t words = std::size_t{1} << outer.k;
    for (std::size_t x = 0; x < words; ++x) {
        PauliString w = (inner == InnerKind::kKlm) ? code.rotation
                                                   : PauliString::identity(n2);
        for (int j = 0; j < outer.k; ++j) {
            if ((x >> (outer.k - 1 - j)) & 1) {
                w = w * code.lifted.logical_x[static_cast<std::size_t>(j)];
            }
        }
        code.word_operators.push_back(w);
    }

    const auto lifted_report = code.lifted.validate();
    if (!lifted_report.ok) {
        throw std::logic_error("concatenate: lifted code failed validation: " +
                               lifted_report.failures.front());
    }
    return code;
}

/// The unique joint +1 eigenstate of the word stabilizer (a maximal abelian
/// group on 2n qubits). Word operators applied to it enumerate the codespace.
inline StateVector word_stabilized_state(const ConcatenatedCode &code) {
    const int n = code.physical_qubits();
    if (n > 14) {
        throw std::invalid_argument("word_stabilized_state: limited to n <= 14");
    }
    const std::size_t dim = std::size_t{1} << n;
    for (std::size_t seed = 0; seed < dim; ++seed) {
        StateVector v = StateVector::basis_state(n, seed);
        for (const auto &g : code.word_stabilizer_generators) {
            StateVector gv = v.apply_pauli(g);
            for (std::size_t i = 0; i < v.dim(); ++i) {
                v[i] = 0.5 * (v[i] + gv[i]);
            }
        }
        if (v.norm_sq() > 1e-9) {
            v.normalize();
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
    throw std::runtime_error("word_stabilized_state: projector annihilated every seed");
}

} // namespace ceqec
