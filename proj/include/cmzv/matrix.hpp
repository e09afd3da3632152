// Copyright 2026 The cmzv Authors
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

#ifndef CMZV_MATRIX_HPP
#define CMZV_MATRIX_HPP

#include <cmzv/error.hpp>

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace cmzv
{

/// Square or rectangular dense matrix over a ring with the zero_like /
/// one_like / is_zero protocol. Row-major storage.
template <class R>
class Matrix
{
public:
    Matrix(std::size_t rows, std::size_t cols, const R &zero)
        : rows_(rows), cols_(cols), zero_(zero_like(zero)), e_(rows * cols, zero_like(zero))
    {
    }

    static Matrix identity(std::size_t n, const R &like)
    {
        Matrix m(n, n, like);
        for (std::size_t i = 0; i < n; ++i) {
            m(i, i) = one_like(like);
        }
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    const R &zero() const noexcept { return zero_; }

    R &operator()(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
    const R &operator()(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

    friend Matrix operator*(const Matrix &a, const Matrix &b)
    {
        if (a.cols_ != b.rows_) {
            throw std::invalid_argument("matrix dimensions do not match for multiplication");
        }
        Matrix r(a.rows_, b.cols_, a.zero_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const R &aik = a(i, k);
                if (is_zero(aik)) {
                    continue;
                }
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    if (!is_zero(b(k, j))) {
                        r(i, j) = r(i, j) + aik * b(k, j);
                    }
                }
            }
        }
        return r;
    }

    friend Matrix operator-(const Matrix &a, const Matrix &b)
    {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
            throw std::invalid_argument("matrix dimensions do not match for subtraction");
        }
        Matrix r(a);
        for (std::size_t i = 0; i < r.e_.size(); ++i) {
            r.e_[i] = a.e_[i] - b.e_[i];
        }
        return r;
    }

    friend bool operator==(const Matrix &a, const Matrix &b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }

    bool is_lower_triangular() const
    {
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = i + 1; j < cols_; ++j) {
                if (!is_zero((*this)(i, j))) {
                    return false;
                }
            }
        }
        return true;
    }

    template <class F>
    auto map(F &&f) const
    {
        using S = decltype(f(zero_));
        Matrix<S> r(rows_, cols_, f(zero_));
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) {
                r(i, j) = f((*this)(i, j));
            }
        }
        return r;
    }

private:
    std::size_t rows_;
    std::size_t cols_;
    R zero_;
    std::vector<R> e_;
};

/// Block-diagonal matrix with a in the upper-left and b in the lower-right.
template <class R>
Matrix<R> block_diagonal(const Matrix<R> &a, const Matrix<R> &b)
{
    Matrix<R> r(a.rows() + b.rows(), a.cols() + b.cols(), a.zero());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            r(i, j) = a(i, j);
        }
    }
    for (std::size_t i = 0; i < b.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            r(a.rows() + i, a.cols() + j) = b(i, j);
        }
    }
    return r;
}

/// Inverse of a lower-triangular matrix whose diagonal entries are units,
/// given a function computing the inverse of a diagonal entry.
template <class R, class Inv>
Matrix<R> lower_triangular_inverse(const Matrix<R> &m, Inv &&inv)
{
    const std::size_t n = m.rows();
    if (m.cols() != n || !m.is_lower_triangular()) {
        throw std::invalid_argument("lower_triangular_inverse needs a square lower-triangular matrix");
    }
    Matrix<R> r(n, n, m.zero());
    for (std::size_t j = 0; j < n; ++j) {
        r(j, j) = inv(m(j, j));
        for (std::size_t i = j + 1; i < n; ++i) {
            R acc = m.zero();
            for (std::size_t k = j; k < i; ++k) {
                acc = acc + m(i, k) * r(k, j);
            }
            r(i, j) = -(inv(m(i, i)) * acc);
        }
    }
    return r;
}

} // namespace cmzv

#endif
