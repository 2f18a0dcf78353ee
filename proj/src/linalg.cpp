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

#include "secbeam/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace secbeam
{
    namespace
    {
        bool finite(const Complex &z)
        {
            return std::isfinite(z.real()) && std::isfinite(z.imag());
        }

        void require_same_length(const ComplexVector &a, const ComplexVector &b, const char *what)
        {
            if (a.size() != b.size())
                throw DimensionError(std::string(what) + ": vector lengths " + std::to_string(a.size()) +
                                     " and " + std::to_string(b.size()) + " differ");
        }
    } // namespace

    // ---------- ComplexVector ----------

    ComplexVector::ComplexVector(std::size_t n, Complex fill) : data_(n, fill)
    {
        if (n == 0)
            throw DimensionError("ComplexVector: length must be at least 1");
    }

    ComplexVector::ComplexVector(std::initializer_list<Complex> values) : data_(values)
    {
        if (data_.empty())
            throw DimensionError("ComplexVector: length must be at least 1");
    }

    ComplexVector::ComplexVector(std::vector<Complex> values) : data_(std::move(values))
    {
        if (data_.empty())
            throw DimensionError("ComplexVector: length must be at least 1");
    }

    bool ComplexVector::all_finite() const noexcept
    {
        return std::all_of(data_.begin(), data_.end(), finite);
    }

    ComplexVector &ComplexVector::operator+=(const ComplexVector &rhs)
    {
        require_same_length(*this, rhs, "operator+=");
        for (std::size_t k = 0; k < data_.size(); ++k)
            data_[k] += rhs.data_[k];
        return *this;
    }

    ComplexVector &ComplexVector::operator-=(const ComplexVector &rhs)
    {
        require_same_length(*this, rhs, "operator-=");
        for (std::size_t k = 0; k < data_.size(); ++k)
            data_[k] -= rhs.data_[k];
        return *this;
    }

    ComplexVector &ComplexVector::operator*=(Complex s) noexcept
    {
        for (auto &z : data_)
            z *= s;
        return *this;
    }

    ComplexVector operator+(ComplexVector a, const ComplexVector &b) { return a += b; }
    ComplexVector operator-(ComplexVector a, const ComplexVector &b) { return a -= b; }
    ComplexVector operator*(Complex s, ComplexVector v) { return v *= s; }

    // ---------- ComplexMatrix ----------

    ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, Complex fill)
        : rows_(rows), cols_(cols), data_(rows * cols, fill)
    {
        if (rows == 0 || cols == 0)
            throw DimensionError("ComplexMatrix: rows and cols must be positive");
    }

    ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::initializer_list<Complex> row_major)
        : ComplexMatrix(rows, cols, std::vector<Complex>(row_major))
    {
    }

    ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> row_major)
        : rows_(rows), cols_(cols), data_(std::move(row_major))
    {
        if (rows == 0 || cols == 0)
            throw DimensionError("ComplexMatrix: rows and cols must be positive");
        if (data_.size() != rows * cols)
            throw DimensionError("ComplexMatrix: " + std::to_string(data_.size()) + " entries given for a " +
                                 std::to_string(rows) + "x" + std::to_string(cols) + " matrix");
    }

    ComplexMatrix ComplexMatrix::identity(std::size_t n)
    {
        ComplexMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = 1.0;
        return m;
    }

    ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> diag)
    {
        ComplexMatrix m(diag.size(), diag.size());
        for (std::size_t i = 0; i < diag.size(); ++i)
            m(i, i) = diag[i];
        return m;
    }

    ComplexMatrix ComplexMatrix::from_columns(std::span<const ComplexVector> columns)
    {
        if (columns.empty())
            throw DimensionError("from_columns: no columns given");
        ComplexMatrix m(columns.front().size(), columns.size());
        for (std::size_t j = 0; j < columns.size(); ++j)
            m.set_column(j, columns[j]);
        return m;
    }

    ComplexVector ComplexMatrix::column(std::size_t j) const
    {
        ComplexVector v(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            v[i] = (*this)(i, j);
        return v;
    }

    ComplexVector ComplexMatrix::row(std::size_t i) const
    {
        return ComplexVector(std::vector<Complex>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                                                  data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)));
    }

    void ComplexMatrix::set_column(std::size_t j, const ComplexVector &v)
    {
        if (v.size() != rows_)
            throw DimensionError("set_column: vector of length " + std::to_string(v.size()) +
                                 " into matrix " + shape_string(*this));
        for (std::size_t i = 0; i < rows_; ++i)
            (*this)(i, j) = v[i];
    }

    bool ComplexMatrix::all_finite() const noexcept
    {
        return std::all_of(data_.begin(), data_.end(), finite);
    }

    // ---------- Free functions ----------

    std::string shape_string(const ComplexMatrix &m)
    {
        return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
    }

    ComplexMatrix hermitian(const ComplexMatrix &m)
    {
        ComplexMatrix h(m.cols(), m.rows());
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                h(j, i) = std::conj(m(i, j));
        return h;
    }

    ComplexMatrix matmul(const ComplexMatrix &a, const ComplexMatrix &b)
    {
        if (a.cols() != b.rows())
            throw DimensionError("matmul: " + shape_string(a) + " times " + shape_string(b));
        ComplexMatrix c(a.rows(), b.cols());
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t k = 0; k < a.cols(); ++k)
            {
                const Complex aik = a(i, k);
                for (std::size_t j = 0; j < b.cols(); ++j)
                    c(i, j) += aik * b(k, j);
            }
        return c;
    }

    ComplexMatrix operator+(const ComplexMatrix &a, const ComplexMatrix &b)
    {
        if (a.rows() != b.rows() || a.cols() != b.cols())
            throw DimensionError("matrix sum: " + shape_string(a) + " and " + shape_string(b));
        ComplexMatrix c = a;
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < a.cols(); ++j)
                c(i, j) += b(i, j);
        return c;
    }

    ComplexMatrix operator-(const ComplexMatrix &a, const ComplexMatrix &b)
    {
        if (a.rows() != b.rows() || a.cols() != b.cols())
            throw DimensionError("matrix difference: " + shape_string(a) + " and " + shape_string(b));
        ComplexMatrix c = a;
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < a.cols(); ++j)
                c(i, j) -= b(i, j);
        return c;
    }

    ComplexVector matvec(const ComplexMatrix &m, const ComplexVector &v)
    {
        if (m.cols() != v.size())
            throw DimensionError("matvec: " + shape_string(m) + " times vector of length " + std::to_string(v.size()));
        ComplexVector out(m.rows());
        for (std::size_t i = 0; i < m.rows(); ++i)
        {
            Complex acc = 0.0;
            for (std::size_t j = 0; j < m.cols(); ++j)
                acc += m(i, j) * v[j];
            out[i] = acc;
        }
        return out;
    }

    ComplexVector matvec_hermitian(const ComplexMatrix &m, const ComplexVector &v)
    {
        if (m.rows() != v.size())
            throw DimensionError("matvec_hermitian: (" + shape_string(m) + ")^H times vector of length " +
                                 std::to_string(v.size()));
        ComplexVector out(m.cols());
        for (std::size_t i = 0; i < m.rows(); ++i)
        {
            const Complex vi = v[i];
            for (std::size_t j = 0; j < m.cols(); ++j)
                out[j] += std::conj(m(i, j)) * vi;
        }
        return out;
    }

    Complex inner(const ComplexVector &a, const ComplexVector &b)
    {
        require_same_length(a, b, "inner");
        Complex acc = 0.0;
        for (std::size_t k = 0; k < a.size(); ++k)
            acc += std::conj(a[k]) * b[k];
        return acc;
    }

    ComplexMatrix outer(const ComplexVector &u, const ComplexVector &v)
    {
        ComplexMatrix m(u.size(), v.size());
        for (std::size_t i = 0; i < u.size(); ++i)
            for (std::size_t j = 0; j < v.size(); ++j)
                m(i, j) = u[i] * std::conj(v[j]);
        return m;
    }

    ComplexMatrix inverse(const ComplexMatrix &m)
    {
        if (m.rows() != m.cols())
            throw DimensionError("inverse: matrix " + shape_string(m) + " is not square");
        const std::size_t n = m.rows();

        double scale = 0.0;
        for (const auto &z : m.row_major())
            scale = std::max(scale, std::abs(z));
        if (scale == 0.0)
            throw SingularMatrixError("inverse: zero matrix");
        const double threshold = 1e-12 * scale;

        ComplexMatrix a = m;
        ComplexMatrix inv = ComplexMatrix::identity(n);

        for (std::size_t col = 0; col < n; ++col)
        {
            std::size_t pivot = col;
            double best = std::abs(a(col, col));
            for (std::size_t r = col + 1; r < n; ++r)
            {
                const double mag = std::abs(a(r, col));
                if (mag > best)
                {
                    best = mag;
                    pivot = r;
                }
            }
            if (best < threshold)
                throw SingularMatrixError("inverse: pivot " + std::to_string(best) + " in column " +
                                          std::to_string(col) + " below threshold " + std::to_string(threshold));
            if (pivot != col)
                for (std::size_t j = 0; j < n; ++j)
                {
                    std::swap(a(col, j), a(pivot, j));
                    std::swap(inv(col, j), inv(pivot, j));
                }

            const Complex d = 1.0 / a(col, col);
            for (std::size_t j = 0; j < n; ++j)
            {
                a(col, j) *= d;
                inv(col, j) *= d;
            }
            for (std::size_t r = 0; r < n; ++r)
            {
                if (r == col)
                    continue;
                const Complex factor = a(r, col);
                if (factor == Complex(0.0, 0.0))
                    continue;
                for (std::size_t j = 0; j < n; ++j)
                {
                    a(r, j) -= factor * a(col, j);
                    inv(r, j) -= factor * inv(col, j);
                }
            }
        }
        return inv;
    }

    double squared_norm(const ComplexVector &v)
    {
        double acc = 0.0;
        for (const auto &z : v)
            acc += std::norm(z);
        return acc;
    }

    double two_norm(const ComplexVector &v)
    {
        return std::sqrt(squared_norm(v));
    }

    double frobenius_norm(const ComplexMatrix &m)
    {
        double acc = 0.0;
        for (const auto &z : m.row_major())
            acc += std::norm(z);
        return std::sqrt(acc);
    }

    std::vector<double> abs_entrywise(const ComplexVector &v)
    {
        std::vector<double> out;
        out.reserve(v.size());
        for (const auto &z : v)
            out.push_back(std::abs(z));
        return out;
    }

    double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b)
    {
        if (a.rows() != b.rows() || a.cols() != b.cols())
            throw DimensionError("max_abs_diff: " + shape_string(a) + " and " + shape_string(b));
        double worst = 0.0;
        for (std::size_t k = 0; k < a.row_major().size(); ++k)
            worst = std::max(worst, std::abs(a.row_major()[k] - b.row_major()[k]));
        return worst;
    }

} // namespace secbeam
