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
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace ceqec {

using complex_t = std::complex<double>;

/// Small dense complex matrix, row-major. Sized for desk-scale operators
/// (Kraus factors, Pauli matrices up to a handful of qubits); not a general
/// linear-algebra type.
class CMatrix {
  public:
    CMatrix() = default;
    CMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, complex_t{0.0, 0.0}) {}

    static CMatrix identity(std::size_t dim) {
        CMatrix m(dim, dim);
        for (std::size_t i = 0; i < dim; ++i) {
            m(i, i) = 1.0;
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    complex_t &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const complex_t &operator()(std::size_t r, std::size_t c) const {
        return data_[r * cols_ + c];
    }

    CMatrix operator*(const CMatrix &other) const {
        if (cols_ != other.rows_) {
            throw std::invalid_argument("CMatrix: dimension mismatch in product");
        }
        CMatrix out(rows_, other.cols_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t k = 0; k < cols_; ++k) {
                const complex_t a = (*this)(i, k);
                if (a == complex_t{0.0, 0.0}) {
                    continue;
                }
                for (std::size_t j = 0; j < other.cols_; ++j) {
                    out(i, j) += a * other(k, j);
                }
            }
        }
        return out;
    }

    CMatrix operator+(const CMatrix &other) const {
        if (rows_ != other.rows_ || cols_ != other.cols_) {
            throw std::invalid_argument("CMatrix: dimension mismatch in sum");
        }
        CMatrix out = *this;
        for (std::size_t i = 0; i < data_.size(); ++i) {
            out.data_[i] += other.data_[i];
        }
        return out;
    }

    CMatrix operator-(const CMatrix &other) const {
        if (rows_ != other.rows_ || cols_ != other.cols_) {
            throw std::invalid_argument("CMatrix: dimension mismatch in difference");
        }
        CMatrix out = *this;
        for (std::size_t i = 0; i < data_.size(); ++i) {
            out.data_[i] -= other.data_[i];
        }
        return out;
    }

    CMatrix operator*(complex_t s) const {
        CMatrix out = *this;
        for (auto &v : out.data_) {
            v *= s;
        }
        return out;
    }

    CMatrix adjoint() const {
        CMatrix out(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) {
                out(j, i) = std::conj((*this)(i, j));
            }
        }
        return out;
    }

    complex_t trace() const {
        complex_t t{0.0, 0.0};
        for (std::size_t i = 0; i < rows_ && i < cols_; ++i) {
            t += (*this)(i, i);
        }
        return t;
    }

    CMatrix kron(const CMatrix &other) const {
        CMatrix out(rows_ * other.rows_, cols_ * other.cols_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) {
                const complex_t a = (*this)(i, j);
                if (a == complex_t{0.0, 0.0}) {
                    continue;
                }
                for (std::size_t r = 0; r < other.rows_; ++r) {
                    for (std::size_t c = 0; c < other.cols_; ++c) {
                        out(i * other.rows_ + r, j * other.cols_ + c) = a * other(r, c);
                    }
                }
            }
        }
        return out;
    }

    double max_abs_diff(const CMatrix &other) const {
        if (rows_ != other.rows_ || cols_ != other.cols_) {
            throw std::invalid_argument("CMatrix: dimension mismatch in comparison");
        }
        double m = 0.0;
        for (std::size_t i = 0; i < data_.size(); ++i) {
            m = std::max(m, std::abs(data_[i] - other.data_[i]));
        }
        return m;
    }

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<complex_t> data_;
};

/// Real square matrix used for Pauli-transfer (superoperator) matrices.
class RMatrix {
  public:
    RMatrix() = default;
    explicit RMatrix(std::size_t dim) : dim_(dim), data_(dim * dim, 0.0) {}

    static RMatrix identity(std::size_t dim) {
        RMatrix m(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            m(i, i) = 1.0;
        }
        return m;
    }

    std::size_t dim() const { return dim_; }

    double &operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }

    RMatrix operator*(const RMatrix &other) const {
        if (dim_ != other.dim_) {
            throw std::invalid_argument("RMatrix: dimension mismatch in product");
        }
        RMatrix out(dim_);
        for (std::size_t i = 0; i < dim_; ++i) {
            for (std::size_t k = 0; k < dim_; ++k) {
                const double a = (*this)(i, k);
                if (a == 0.0) {
                    continue;
                }
                for (std::size_t j = 0; j < dim_; ++j) {
                    out(i, j) += a * other(k, j);
                }
            }
        }
        return out;
    }

    RMatrix transpose() const {
        RMatrix out(dim_);
        for (std::size_t i = 0; i < dim_; ++i) {
            for (std::size_t j = 0; j < dim_; ++j) {
                out(j, i) = (*this)(i, j);
            }
        }
        return out;
    }

    RMatrix kron(const RMatrix &other) const {
        RMatrix out(dim_ * other.dim_);
        for (std::size_t i = 0; i < dim_; ++i) {
            for (std::size_t j = 0; j < dim_; ++j) {
                const double a = (*this)(i, j);
                if (a == 0.0) {
                    continue;
                }
                for (std::size_t r = 0; r < other.dim_; ++r) {
                    for (std::size_t c = 0; c < other.dim_; ++c) {
                        out(i * other.dim_ + r, j * other.dim_ + c) = a * other(r, c);
                    }
                }
            }
        }
        return out;
    }

    void add_scaled(const RMatrix &other, double s) {
        if (dim_ != other.dim_) {
            throw std::invalid_argument("RMatrix: dimension mismatch in add");
        }
        for (std::size_t i = 0; i < data_.size(); ++i) {
            data_[i] += s * other.data_[i];
        }
    }

    double max_abs_diff(const RMatrix &other) const {
        if (dim_ != other.dim_) {
            throw std::invalid_argument("RMatrix: dimension mismatch in comparison");
        }
        double m = 0.0;
        for (std::size_t i = 0; i < data_.size(); ++i) {
            m = std::max(m, std::abs(data_[i] - other.data_[i]));
        }
        return m;
    }

  private:
    std::size_t dim_ = 0;
    std::vector<double> data_;
};

} // namespace ceqec
