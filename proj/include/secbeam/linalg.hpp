// SPDX-License-Identifier: Apache-2.0
//
// secbeam: secrecy-rate hybrid beamforming simulator
// Copyright (C) 2026 The secbeam authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef SECBEAM_LINALG_HPP
#define SECBEAM_LINALG_HPP

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace secbeam
{
    using Complex = std::complex<double>;

    // Operand shapes do not agree.
    class DimensionError : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    // Gaussian elimination met a pivot below the relative threshold.
    class SingularMatrixError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    // Dense column vector of complex amplitudes. Length is at least 1.
    class ComplexVector
    {
    public:
        explicit ComplexVector(std::size_t n, Complex fill = Complex(0.0, 0.0));
        ComplexVector(std::initializer_list<Complex> values);
        explicit ComplexVector(std::vector<Complex> values);

        std::size_t size() const noexcept { return data_.size(); }

        Complex &operator[](std::size_t k) noexcept { return data_[k]; }
        const Complex &operator[](std::size_t k) const noexcept { return data_[k]; }

        std::span<Complex> values() noexcept { return data_; }
        std::span<const Complex> values() const noexcept { return data_; }

        auto begin() noexcept { return data_.begin(); }
        auto end() noexcept { return data_.end(); }
        auto begin() const noexcept { return data_.begin(); }
        auto end() const noexcept { return data_.end(); }

        bool all_finite() const noexcept;

        ComplexVector &operator+=(const ComplexVector &rhs);
        ComplexVector &operator-=(const ComplexVector &rhs);
        ComplexVector &operator*=(Complex s) noexcept;

        bool operator==(const ComplexVector &) const = default;

    private:
        std::vector<Complex> data_;
    };

    ComplexVector operator+(ComplexVector a, const ComplexVector &b);
    ComplexVector operator-(ComplexVector a, const ComplexVector &b);
    ComplexVector operator*(Complex s, ComplexVector v);

    // Row-major dense complex matrix.
    class ComplexMatrix
    {
    public:
        ComplexMatrix(std::size_t rows, std::size_t cols, Complex fill = Complex(0.0, 0.0));

        // Row-major initializer; the entry count must equal rows * cols.
        ComplexMatrix(std::size_t rows, std::size_t cols, std::initializer_list<Complex> row_major);
        ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> row_major);

        static ComplexMatrix identity(std::size_t n);
        static ComplexMatrix diagonal(std::span<const Complex> diag);

        // Matrix whose columns are the given vectors (all the same length).
        static ComplexMatrix from_columns(std::span<const ComplexVector> columns);

        std::size_t rows() const noexcept { return rows_; }
        std::size_t cols() const noexcept { return cols_; }

        Complex &operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }
        const Complex &operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }

        std::span<const Complex> row_major() const noexcept { return data_; }

        ComplexVector column(std::size_t j) const;
        ComplexVector row(std::size_t i) const;
        void set_column(std::size_t j, const ComplexVector &v);

        bool all_finite() const noexcept;

        bool operator==(const ComplexMatrix &) const = default;

    private:
        std::size_t rows_;
        std::size_t cols_;
        std::vector<Complex> data_;
    };

    ComplexMatrix hermitian(const ComplexMatrix &m);
    ComplexMatrix matmul(const ComplexMatrix &a, const ComplexMatrix &b);
    ComplexMatrix operator+(const ComplexMatrix &a, const ComplexMatrix &b);
    ComplexMatrix operator-(const ComplexMatrix &a, const ComplexMatrix &b);

    // m * v
    ComplexVector matvec(const ComplexMatrix &m, const ComplexVector &v);

    // m^H * v, without materializing the Hermitian transpose
    ComplexVector matvec_hermitian(const ComplexMatrix &m, const ComplexVector &v);

    // a^H b (conjugate-linear in the first argument)
    Complex inner(const ComplexVector &a, const ComplexVector &b);

    // Rank-one product u v^H.
    ComplexMatrix outer(const ComplexVector &u, const ComplexVector &v);

    // Inverse by Gaussian elimination with partial pivoting. Throws
    // SingularMatrixError when a pivot falls below 1e-12 times the largest
    // magnitude entry of the input.
    ComplexMatrix inverse(const ComplexMatrix &m);

    double two_norm(const ComplexVector &v);
    double squared_norm(const ComplexVector &v);
    double frobenius_norm(const ComplexMatrix &m);
    std::vector<double> abs_entrywise(const ComplexVector &v);

    // max_ij |a_ij - b_ij|
    double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);

    std::string shape_string(const ComplexMatrix &m);

} // namespace secbeam

#endif
