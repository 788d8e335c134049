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

#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ceqec/pauli.hpp"
#include "ceqec/rng.hpp"

namespace ceqec {

/// Dense complex statevector over 2^n basis states.
///
/// Basis index convention: the bit of qubit 1 is the most significant bit,
/// so |x_1 ... x_n> sits at index sum_j x_j 2^(n-j). This matches
/// left-to-right codeword strings like |11110000>.
class StateVector {
  public:
    // Two code blocks of the eight-qubit code fit; anything bigger is a bug.
    static constexpr int kMaxQubits = 16;

    StateVector() = default;

    explicit StateVector(int n) : n_(check_n(n)), amps_(std::size_t{1} << n, complex_t{}) {}

    static StateVector basis_state(int n, std::uint64_t index) {
        StateVector sv(n);
        if (index >= sv.amps_.size()) {
            throw std::out_of_range("StateVector: basis index out of range");
        }
        sv.amps_[index] = 1.0;
        return sv;
    }

    /// Builds the state from "bitstring, amplitude" pairs, e.g.
    /// {{"11110000", a}, {"00001111", b}}.
    static StateVector from_bitstrings(
        int n, const std::vector<std::pair<std::string, complex_t>> &terms) {
        StateVector sv(n);
        for (const auto &[bits, amp] : terms) {
            sv.amps_[parse_bits(n, bits)] += amp;
        }
        return sv;
    }

    int num_qubits() const { return n_; }
    std::size_t dim() const { return amps_.size(); }

    complex_t &operator[](std::size_t i) { return amps_[i]; }
    const complex_t &operator[](std::size_t i) const { return amps_[i]; }

    const std::vector<complex_t> &amplitudes() const { return amps_; }

    static std::uint64_t parse_bits(int n, const std::string &bits) {
        if (static_cast<int>(bits.size()) != n) {
            throw std::invalid_argument("StateVector: bitstring length mismatch");
        }
        std::uint64_t idx = 0;
        for (char c : bits) {
            if (c != '0' && c != '1') {
                throw std::invalid_argument("StateVector: bad bitstring");
            }
            idx = (idx << 1) | static_cast<std::uint64_t>(c - '0');
        }
        return idx;
    }

    double norm_sq() const {
        double s = 0.0;
        for (const auto &a : amps_) {
            s += std::norm(a);
        }
        return s;
    }

    double norm() const { return std::sqrt(norm_sq()); }

    void normalize() {
        const double nrm = norm();
        if (nrm <= 0.0) {
            throw std::runtime_error("StateVector: cannot normalize zero vector");
        }
        const double inv = 1.0 / nrm;
        for (auto &a : amps_) {
            a *= inv;
        }
    }

    complex_t inner_product(const StateVector &other) const {
        check_same(other);
        complex_t s{};
        for (std::size_t i = 0; i < amps_.size(); ++i) {
            s += std::conj(amps_[i]) * other.amps_[i];
        }
        return s;
    }

    /// |<this|other>|^2.
    double fidelity(const StateVector &other) const {
        return std::norm(inner_product(other));
    }

    /// Exact permutation-with-phases Pauli application; norm preserved.
    StateVector apply_pauli(const PauliString &p) const {
        if (p.num_qubits() != n_) {
            throw std::invalid_argument("StateVector: Pauli size mismatch");
        }
        const std::uint64_t xm = p.index_mask_x();
        const std::uint64_t zm = p.index_mask_z();
        static const complex_t kPhase[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
        const complex_t base = kPhase[p.phase_exp()];
        StateVector out(n_);
        for (std::size_t i = 0; i < amps_.size(); ++i) {
            const complex_t v = amps_[i];
            if (v == complex_t{}) {
                continue;
            }
            const int sign = std::popcount(i & zm) & 1;
            out.amps_[i ^ xm] = sign ? -base * v : base * v;
        }
        return out;
    }

    /// U_theta = exp(-i theta S^z): each basis amplitude gains
    /// exp(-i theta (n - 2 wt(x))).
    StateVector apply_collective_phase(double theta) const {
        StateVector out = *this;
        for (std::size_t i = 0; i < amps_.size(); ++i) {
            if (out.amps_[i] == complex_t{}) {
                continue;
            }
            const int wt = std::popcount(i);
            const double angle = -theta * static_cast<double>(n_ - 2 * wt);
            out.amps_[i] *= std::polar(1.0, angle);
        }
        return out;
    }

    /// Applies an arbitrary (possibly non-unitary) 2x2 operator on `qubit`.
    /// The result is not renormalized.
    StateVector apply_single_qubit(const CMatrix &op, int qubit) const {
        check_qubit(qubit);
        if (op.rows() != 2 || op.cols() != 2) {
            throw std::invalid_argument("StateVector: operator must be 2x2");
        }
        const std::uint64_t mask = qubit_mask(qubit);
        StateVector out(n_);
        for (std::size_t i0 = 0; i0 < amps_.size(); ++i0) {
            if (i0 & mask) {
                continue;
            }
            const std::size_t i1 = i0 | mask;
            const complex_t a0 = amps_[i0];
            const complex_t a1 = amps_[i1];
            out.amps_[i0] = op(0, 0) * a0 + op(0, 1) * a1;
            out.amps_[i1] = op(1, 0) * a0 + op(1, 1) * a1;
        }
        return out;
    }

    StateVector apply_x(int qubit) const {
        const std::uint64_t mask = qubit_mask(qubit);
        StateVector out(n_);
        for (std::size_t i = 0; i < amps_.size(); ++i) {
            out.amps_[i ^ mask] = amps_[i];
        }
        return out;
    }

    StateVector apply_h(int qubit) const {
        const double s = 1.0 / std::sqrt(2.0);
        CMatrix h(2, 2);
        h(0, 0) = s;
        h(0, 1) = s;
        h(1, 0) = s;
        h(1, 1) = -s;
        return apply_single_qubit(h, qubit);
    }

    StateVector apply_cnot(int control, int target) const {
        check_qubit(control);
        check_qubit(target);
        if (control == target) {
            throw std::invalid_argument("StateVector: CNOT needs distinct qubits");
        }
        const std::uint64_t cm = qubit_mask(control);
        const std::uint64_t tm = qubit_mask(target);
        StateVector out(n_);
        for (std::size_t i = 0; i < amps_.size(); ++i) {
            out.amps_[(i & cm) ? (i ^ tm) : i] = amps_[i];
        }
        return out;
    }

    StateVector apply_cz(int control, int target) const {
        check_qubit(control);
        check_qubit(target);
        const std::uint64_t cm = qubit_mask(control);
        const std::uint64_t tm = qubit_mask(target);
        StateVector out = *this;
        for (std::size_t i = 0; i < amps_.size(); ++i) {
            if ((i & cm) && (i & tm)) {
                out.amps_[i] = -out.amps_[i];
            }
        }
        return out;
    }

    /// Projective measurement of a Hermitian Pauli; returns the sampled
    /// eigenvalue (+1/-1) and leaves the renormalized post-state in place.
    std::pair<int, StateVector> measure_pauli(const PauliString &p, RngStream &rng) const {
        if (!p.is_hermitian()) {
            throw std::invalid_argument("StateVector: cannot measure non-Hermitian Pauli");
        }
        StateVector pv = apply_pauli(p);
        StateVector plus(n_);
        StateVector minus(n_);
        double p_plus = 0.0;
        double p_minus = 0.0;
        for (std::size_t i = 0; i < amps_.size(); ++i) {
            plus.amps_[i] = 0.5 * (amps_[i] + pv.amps_[i]);
            minus.amps_[i] = 0.5 * (amps_[i] - pv.amps_[i]);
            p_plus += std::norm(plus.amps_[i]);
            p_minus += std::norm(minus.amps_[i]);
        }
        const double total = p_plus + p_minus;
        if (total <= 0.0) {
            throw std::runtime_error("StateVector: measuring zero state");
        }
        int outcome;
        if (p_plus <= 0.0) {
            outcome = -1;
        } else if (p_minus <= 0.0) {
            outcome = +1;
        } else {
            outcome = (rng.uniform() < p_plus / total) ? +1 : -1;
        }
        StateVector &post = (outcome == +1) ? plus : minus;
        post.normalize();
        return {outcome, post};
    }

    /// Tensor product: |this> x |other>, this block first (most significant).
    StateVector kron(const StateVector &other) const {
        if (n_ + other.n_ > kMaxQubits) {
            throw std::invalid_argument("StateVector: tensor product too large");
        }
        StateVector out(n_ + other.n_);
        for (std::size_t i = 0; i < amps_.size(); ++i) {
            if (amps_[i] == complex_t{}) {
                continue;
            }
            const std::size_t base = i << other.n_;
            for (std::size_t j = 0; j < other.amps_.size(); ++j) {
                out.amps_[base | j] = amps_[i] * other.amps_[j];
            }
        }
        return out;
    }

    /// Reorders qubits: new qubit position `to[j-1]` holds old qubit j.
    StateVector permute_qubits(const std::vector<int> &to) const {
        if (static_cast<int>(to.size()) != n_) {
            throw std::invalid_argument("StateVector: permutation size mismatch");
        }
        StateVector out(n_);
        for (std::size_t i = 0; i < amps_.size(); ++i) {
            if (amps_[i] == complex_t{}) {
                continue;
            }
            std::size_t j = 0;
            for (int q = 1; q <= n_; ++q) {
                if (i & qubit_mask(q)) {
                    j |= std::uint64_t{1} << (n_ - to[static_cast<std::size_t>(q - 1)]);
                }
            }
            out.amps_[j] = amps_[i];
        }
        return out;
    }

    /// Debug listing "amplitude |bitstring>" of the non-negligible support.
    std::string to_string(double cutoff = 1e-12) const {
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = 0; i < amps_.size(); ++i) {
            if (std::abs(amps_[i]) <= cutoff) {
                continue;
            }
            if (!first) {
                os << " + ";
            }
            first = false;
            os << "(" << amps_[i].real() << (amps_[i].imag() < 0 ? "-" : "+")
               << std::abs(amps_[i].imag()) << "i)|" << bitstring(i) << ">";
        }
        return first ? "0" : os.str();
    }

    std::string bitstring(std::size_t index) const {
        std::string s(static_cast<std::size_t>(n_), '0');
        for (int j = 1; j <= n_; ++j) {
            if (index & qubit_mask(j)) {
                s[static_cast<std::size_t>(j - 1)] = '1';
            }
        }
        return s;
    }

    std::uint64_t qubit_mask(int qubit) const {
        return std::uint64_t{1} << (n_ - qubit);
    }

  private:
    static int check_n(int n) {
        if (n < 1 || n > kMaxQubits) {
            throw std::invalid_argument("StateVector: qubit count out of range");
        }
        return n;
    }

    void check_qubit(int qubit) const {
        if (qubit < 1 || qubit > n_) {
            throw std::out_of_range("StateVector: qubit index out of range");
        }
    }

    void check_same(const StateVector &other) const {
        if (n_ != other.n_) {
            throw std::invalid_argument("StateVector: size mismatch");
        }
    }

    int n_ = 0;
    std::vector<complex_t> amps_;
};

/// Global-phase-insensitive comparison: max_i |a_i - e^{i phi} b_i| for the
/// best aligning phase phi.
inline double distance_up_to_phase(const StateVector &a, const StateVector &b) {
    const complex_t ov = a.inner_product(b);
    const complex_t phase =
        (std::abs(ov) > 1e-15) ? ov / std::abs(ov) : complex_t{1.0, 0.0};
    double m = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        m = std::max(m, std::abs(a[i] * phase - b[i]));
    }
    return m;
}

} // namespace ceqec
