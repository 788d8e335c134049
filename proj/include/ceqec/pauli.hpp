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
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ceqec/matrix.hpp"

namespace ceqec {

/// Phase-tracked n-qubit Pauli operator in binary symplectic form.
///
/// The represented operator is
///     i^phase_exp * (X^{a_1} Z^{b_1}) x ... x (X^{a_n} Z^{b_n}),
/// with qubits 1-indexed and qubit j stored at bit j-1 of the packed words.
/// Y is the phased product i*X*Z, so the textual letter Y carries one factor
/// of i relative to the stored exponent.
///
/// Values are immutable in spirit: every operation returns a new string, so
/// instances can be shared freely across threads.
class PauliString {
  public:
    PauliString() = default;

    explicit PauliString(int n)
        : n_(check_n(n)), x_(words_for(n), 0), z_(words_for(n), 0), phase_(0) {}

    static PauliString identity(int n) { return PauliString(n); }

    /// Single-qubit letter ('I', 'X', 'Y', 'Z') placed on `qubit` (1-indexed).
    static PauliString single(int n, int qubit, char letter) {
        PauliString p(n);
        p.set_letter(qubit, letter);
        return p;
    }

    /// Parses "XIZY" style strings (qubit 1 leftmost) with an optional
    /// "+", "-", "+i", "-i" or "i" phase prefix.
    static PauliString from_string(const std::string &text) {
        std::size_t pos = 0;
        int prefix = 0;
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
            if (text[pos] == '-') {
                prefix = 2;
            }
            ++pos;
        }
        if (pos < text.size() && text[pos] == 'i') {
            prefix += 1;
            ++pos;
        }
        const std::string body = text.substr(pos);
        if (body.empty()) {
            throw std::invalid_argument("PauliString: empty Pauli body in '" + text + "'");
        }
        PauliString p(static_cast<int>(body.size()));
        for (int j = 1; j <= p.n_; ++j) {
            p.set_letter(j, body[static_cast<std::size_t>(j - 1)]);
        }
        // Stored exponent counts each textual Y as one i.
        p.phase_ = (prefix + p.count_y()) & 3;
        return p;
    }

    int num_qubits() const { return n_; }
    int phase_exp() const { return phase_; }

    bool x_bit(int qubit) const { return get_bit(x_, qubit); }
    bool z_bit(int qubit) const { return get_bit(z_, qubit); }

    void set_x_bit(int qubit, bool v) { set_bit(x_, qubit, v); }
    void set_z_bit(int qubit, bool v) { set_bit(z_, qubit, v); }
    void set_phase_exp(int e) { phase_ = ((e % 4) + 4) & 3; }

    bool is_identity_body() const {
        for (std::size_t w = 0; w < x_.size(); ++w) {
            if (x_[w] != 0 || z_[w] != 0) {
                return false;
            }
        }
        return true;
    }

    bool operator==(const PauliString &other) const {
        return n_ == other.n_ && phase_ == other.phase_ && x_ == other.x_ && z_ == other.z_;
    }
    bool operator!=(const PauliString &other) const { return !(*this == other); }

    /// Same tensor factors regardless of the global phase.
    bool same_body(const PauliString &other) const {
        return n_ == other.n_ && x_ == other.x_ && z_ == other.z_;
    }

    /// Number of qubits acted on non-trivially.
    int weight() const {
        int w = 0;
        for (std::size_t k = 0; k < x_.size(); ++k) {
            w += std::popcount(x_[k] | z_[k]);
        }
        return w;
    }

    /// Qubits (1-indexed) where the string applies X or Y.
    std::vector<int> xy_support() const {
        std::vector<int> out;
        for (int j = 1; j <= n_; ++j) {
            if (x_bit(j)) {
                out.push_back(j);
            }
        }
        return out;
    }

    std::vector<int> support() const {
        std::vector<int> out;
        for (int j = 1; j <= n_; ++j) {
            if (x_bit(j) || z_bit(j)) {
                out.push_back(j);
            }
        }
        return out;
    }

    /// Exact operator product, phase included.
    PauliString operator*(const PauliString &other) const {
        if (n_ != other.n_) {
            throw std::invalid_argument("PauliString: length mismatch in product");
        }
        PauliString out(n_);
        // Reordering Z^b X^a' costs (-1)^(b . a').
        int cross = 0;
        for (std::size_t w = 0; w < x_.size(); ++w) {
            out.x_[w] = x_[w] ^ other.x_[w];
            out.z_[w] = z_[w] ^ other.z_[w];
            cross ^= std::popcount(z_[w] & other.x_[w]) & 1;
        }
        out.phase_ = (phase_ + other.phase_ + 2 * cross) & 3;
        return out;
    }

    PauliString inverse() const {
        // (i^s X^a Z^b)^-1 = i^{-s} Z^b X^a = i^{-s} (-1)^{a.b} X^a Z^b.
        PauliString out = *this;
        int ab = 0;
        for (std::size_t w = 0; w < x_.size(); ++w) {
            ab ^= std::popcount(x_[w] & z_[w]) & 1;
        }
        out.phase_ = ((4 - phase_) + 2 * ab) & 3;
        return out;
    }

    /// i^s X^a Z^b is Hermitian exactly when s = a.b (mod 2).
    bool is_hermitian() const {
        int ab = 0;
        for (std::size_t w = 0; w < x_.size(); ++w) {
            ab ^= std::popcount(x_[w] & z_[w]) & 1;
        }
        return (phase_ & 1) == ab;
    }

    std::string to_string() const {
        std::string body;
        body.reserve(static_cast<std::size_t>(n_));
        for (int j = 1; j <= n_; ++j) {
            body.push_back(letter_at(j));
        }
        static const char *kPrefix[4] = {"", "+i", "-", "-i"};
        return std::string(kPrefix[display_phase_exp()]) + body;
    }

    /// Phase exponent of the printed form, i.e. i^k times the Y-lettered body.
    int display_phase_exp() const { return (phase_ - count_y() + 8) & 3; }

    char letter_at(int qubit) const {
        const bool a = x_bit(qubit);
        const bool b = z_bit(qubit);
        if (a && b) {
            return 'Y';
        }
        if (a) {
            return 'X';
        }
        if (b) {
            return 'Z';
        }
        return 'I';
    }

    /// Dense matrix of the operator, i^phase_exp factor included. The basis
    /// index of |x_1 ... x_n> is sum_j x_j 2^(n-j), qubit 1 most significant.
    CMatrix to_matrix() const {
        if (n_ > 14) {
            throw std::invalid_argument("PauliString: to_matrix limited to n <= 14");
        }
        const std::size_t dim = std::size_t{1} << n_;
        CMatrix m(dim, dim);
        const std::uint64_t xm = index_mask_x();
        const std::uint64_t zm = index_mask_z();
        static const complex_t kPhase[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
        const complex_t base = kPhase[phase_];
        for (std::size_t col = 0; col < dim; ++col) {
            const int sign = std::popcount(col & zm) & 1;
            m(col ^ xm, col) = sign ? -base : base;
        }
        return m;
    }

    /// X mask in statevector index bit positions (qubit j -> bit n-j).
    std::uint64_t index_mask_x() const { return to_index_mask(x_); }
    std::uint64_t index_mask_z() const { return to_index_mask(z_); }

    friend int symplectic_inner_product(const PauliString &p, const PauliString &q);

  private:
    static int check_n(int n) {
        if (n <= 0) {
            throw std::invalid_argument("PauliString: qubit count must be positive");
        }
        return n;
    }

    static std::size_t words_for(int n) { return static_cast<std::size_t>((n + 63) / 64); }

    void check_qubit(int qubit) const {
        if (qubit < 1 || qubit > n_) {
            throw std::out_of_range("PauliString: qubit index out of range");
        }
    }

    bool get_bit(const std::vector<std::uint64_t> &bits, int qubit) const {
        check_qubit(qubit);
        return (bits[static_cast<std::size_t>(qubit - 1) >> 6] >> ((qubit - 1) & 63)) & 1;
    }

    void set_bit(std::vector<std::uint64_t> &bits, int qubit, bool v) {
        check_qubit(qubit);
        const std::uint64_t mask = std::uint64_t{1} << ((qubit - 1) & 63);
        auto &word = bits[static_cast<std::size_t>(qubit - 1) >> 6];
        word = v ? (word | mask) : (word & ~mask);
    }

    void set_letter(int qubit, char letter) {
        switch (letter) {
        case 'I':
            set_x_bit(qubit, false);
            set_z_bit(qubit, false);
            break;
        case 'X':
            set_x_bit(qubit, true);
            set_z_bit(qubit, false);
            break;
        case 'Y':
            set_x_bit(qubit, true);
            set_z_bit(qubit, true);
            break;
        case 'Z':
            set_x_bit(qubit, false);
            set_z_bit(qubit, true);
            break;
        default:
            throw std::invalid_argument(std::string("PauliString: bad letter '") + letter +
                                        "'");
        }
    }

    int count_y() const {
        int c = 0;
        for (std::size_t w = 0; w < x_.size(); ++w) {
            c += std::popcount(x_[w] & z_[w]);
        }
        return c;
    }

    std::uint64_t to_index_mask(const std::vector<std::uint64_t> &bits) const {
        std::uint64_t mask = 0;
        for (int j = 1; j <= n_; ++j) {
            if ((bits[static_cast<std::size_t>(j - 1) >> 6] >> ((j - 1) & 63)) & 1) {
                mask |= std::uint64_t{1} << (n_ - j);
            }
        }
        return mask;
    }

    int n_ = 0;
    std::vector<std::uint64_t> x_;
    std::vector<std::uint64_t> z_;
    int phase_ = 0;
};

/// <bin(p), bin(q)>_sy = p.x . q.z + q.x . p.z over GF(2).
/// Zero exactly when p and q commute.
inline int symplectic_inner_product(const PauliString &p, const PauliString &q) {
    if (p.n_ != q.n_) {
        throw std::invalid_argument("symplectic_inner_product: length mismatch");
    }
    int acc = 0;
    for (std::size_t w = 0; w < p.x_.size(); ++w) {
        acc ^= std::popcount(p.x_[w] & q.z_[w]) & 1;
        acc ^= std::popcount(q.x_[w] & p.z_[w]) & 1;
    }
    return acc;
}

inline bool commutes(const PauliString &p, const PauliString &q) {
    return symplectic_inner_product(p, q) == 0;
}

} // namespace ceqec
