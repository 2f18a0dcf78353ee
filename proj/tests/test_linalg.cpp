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


#include "oracles.hpp"
#include "test_support.hpp"

#include "secbeam/linalg.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace secbeam;
using testing_support::Draws;

namespace
{
    const Complex I(0.0, 1.0);

    double max_diff(const oracle::Mat &a, const ComplexMatrix &b)
    {
        double worst = 0.0;
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j)
                worst = std::max(worst, std::abs(a[i][j] - b(i, j)));
        return worst;
    }
} // namespace

TEST(ComplexVector, RejectsEmpty)
{
    EXPECT_THROW(ComplexVector(std::size_t{0}), DimensionError);
    EXPECT_THROW(ComplexVector(std::vector<Complex>{}), DimensionError);
}

TEST(ComplexVector, ArithmeticChecksLengths)
{
    ComplexVector a{1.0, 2.0};
    const ComplexVector b{I, 1.0};
    a += b;
    EXPECT_EQ(a, (ComplexVector{1.0 + I, 3.0}));
    EXPECT_THROW(a += ComplexVector{1.0}, DimensionError);
    EXPECT_EQ((Complex(2.0) * ComplexVector{1.0, I}), (ComplexVector{2.0, 2.0 * I}));
}

TEST(ComplexVector, FiniteCheck)
{
    ComplexVector v{1.0, 2.0};
    EXPECT_TRUE(v.all_finite());
    v[1] = Complex(std::nan(""), 0.0);
    EXPECT_FALSE(v.all_finite());
}

TEST(ComplexMatrix, ShapeContract)
{
    EXPECT_THROW(ComplexMatrix(0, 2), DimensionError);
    EXPECT_THROW(ComplexMatrix(2, 2, {1.0, 2.0, 3.0}), DimensionError);
    const ComplexMatrix m(2, 3, {1.0, 2.0, 3.0, 4.0, 5.0, 6.0});
    EXPECT_EQ(m(1, 0), Complex(4.0));
    EXPECT_EQ(m.column(2), (ComplexVector{3.0, 6.0}));
    EXPECT_EQ(m.row(0), (ComplexVector{1.0, 2.0, 3.0}));
    EXPECT_EQ(shape_string(m), "2x3");
}

TEST(Hermitian, ScalarConjugates)
{
    EXPECT_EQ(hermitian(ComplexMatrix(1, 1, {2.0 + 3.0 * I})), ComplexMatrix(1, 1, {2.0 - 3.0 * I}));
}

TEST(Hermitian, IdentityIsFixed)
{
    EXPECT_EQ(hermitian(ComplexMatrix::identity(2)), ComplexMatrix::identity(2));
}

TEST(Hermitian, ColumnBecomesConjugatedRow)
{
    const ComplexMatrix h = hermitian(ComplexMatrix(2, 1, {I, 1.0}));
    EXPECT_EQ(h.rows(), 1u);
    EXPECT_EQ(h.cols(), 2u);
    EXPECT_EQ(h, ComplexMatrix(1, 2, {-I, 1.0}));
}

TEST(Hermitian, Involution)
{
    Draws d(11);
    for (int k = 0; k < 10; ++k)
    {
        const ComplexMatrix m = d.matrix(3, 5);
        EXPECT_EQ(hermitian(hermitian(m)), m);
    }
}

TEST(Matmul, IdentityLeft)
{
    Draws d(1);
    const ComplexMatrix m = d.matrix(2, 3);
    EXPECT_EQ(matmul(ComplexMatrix::identity(2), m), m);
}

TEST(Matmul, RowTimesColumn)
{
    const ComplexMatrix r = matmul(ComplexMatrix(1, 2, {1.0, I}), ComplexMatrix(2, 1, {1.0, I}));
    EXPECT_NEAR(std::abs(r(0, 0)), 0.0, 1e-15);
}

TEST(Matmul, MatchesTripleLoop)
{
    Draws d(2);
    const ComplexMatrix a = d.matrix(3, 3);
    const ComplexMatrix b = d.matrix(3, 3);
    const oracle::Mat ref = oracle::matmul(oracle::to_nested(a), oracle::to_nested(b));
    EXPECT_LT(max_diff(ref, matmul(a, b)), 1e-12);
}

TEST(Matmul, RectangularMatchesTripleLoop)
{
    Draws d(3);
    const ComplexMatrix a = d.matrix(4, 7);
    const ComplexMatrix b = d.matrix(7, 2);
    EXPECT_LT(max_diff(oracle::matmul(oracle::to_nested(a), oracle::to_nested(b)), matmul(a, b)), 1e-12);
}

TEST(Matmul, DimensionMismatchThrows)
{
    EXPECT_THROW(matmul(ComplexMatrix(2, 3), ComplexMatrix(2, 3)), DimensionError);
}

TEST(Matmul, Associative)
{
    Draws d(4);
    for (int k = 0; k < 20; ++k)
    {
        const ComplexMatrix a = d.matrix(3, 4), b = d.matrix(4, 2), c = d.matrix(2, 5);
        const ComplexMatrix left = matmul(matmul(a, b), c);
        const ComplexMatrix right = matmul(a, matmul(b, c));
        EXPECT_LT(max_abs_diff(left, right) / frobenius_norm(left), 1e-9);
    }
}

TEST(Matvec, AgreesWithMatmul)
{
    Draws d(5);
    const ComplexMatrix m = d.matrix(4, 3);
    const ComplexVector v = d.vector(3);
    const ComplexVector u = d.vector(4);
    const ComplexVector mv = matvec(m, v);
    const ComplexVector mhu = matvec_hermitian(m, u);
    for (std::size_t i = 0; i < 4; ++i)
    {
        Complex acc = 0.0;
        for (std::size_t j = 0; j < 3; ++j)
            acc += m(i, j) * v[j];
        EXPECT_LT(std::abs(acc - mv[i]), 1e-13);
    }
    for (std::size_t j = 0; j < 3; ++j)
    {
        Complex acc = 0.0;
        for (std::size_t i = 0; i < 4; ++i)
            acc += std::conj(m(i, j)) * u[i];
        EXPECT_LT(std::abs(acc - mhu[j]), 1e-13);
    }
    EXPECT_THROW(matvec(m, u), DimensionError);
}

TEST(Inner, ConjugatesFirstArgument)
{
    EXPECT_EQ(inner(ComplexVector{I}, ComplexVector{I}), Complex(1.0));
    const ComplexMatrix o = outer(ComplexVector{1.0, I}, ComplexVector{I});
    EXPECT_EQ(o, ComplexMatrix(2, 1, {-I, 1.0}));
}

TEST(Inverse, Identity)
{
    EXPECT_LT(max_abs_diff(inverse(ComplexMatrix::identity(3)), ComplexMatrix::identity(3)), 1e-15);
}

TEST(Inverse, Diagonal)
{
    const Complex diag[] = {2.0, 4.0 * I};
    const Complex expected[] = {0.5, -0.25 * I};
    EXPECT_LT(max_abs_diff(inverse(ComplexMatrix::diagonal(diag)), ComplexMatrix::diagonal(expected)), 1e-15);
}

TEST(Inverse, MultiplyBackBothSides)
{
    Draws d(6);
    for (int k = 0; k < 25; ++k)
    {
        const ComplexMatrix u = d.well_conditioned(4);
        const ComplexMatrix inv = inverse(u);
        EXPECT_LT(max_abs_diff(matmul(inv, u), ComplexMatrix::identity(4)), 1e-10);
        EXPECT_LT(max_abs_diff(matmul(u, inv), ComplexMatrix::identity(4)), 1e-10);
    }
}

TEST(Inverse, AgreesWithReferenceElimination)
{
    Draws d(7);
    const ComplexMatrix m = d.matrix(5, 5);
    EXPECT_LT(max_diff(oracle::inverse(oracle::to_nested(m)), inverse(m)), 1e-9);
}

TEST(Inverse, IllConditionedStillAccurate)
{
    // Condition number about 1e5.
    const Complex diag[] = {1.0, 1e-5, 3.0};
    Draws d(8);
    const ComplexMatrix q = d.well_conditioned(3, 0.05);
    const ComplexMatrix m = matmul(matmul(q, ComplexMatrix::diagonal(diag)), inverse(q));
    EXPECT_LT(max_abs_diff(matmul(inverse(m), m), ComplexMatrix::identity(3)), 1e-10);
}

TEST(Inverse, SingularThrows)
{
    EXPECT_THROW(inverse(ComplexMatrix(2, 2, {1.0, 2.0, 2.0, 4.0})), SingularMatrixError);
    EXPECT_THROW(inverse(ComplexMatrix(3, 3)), SingularMatrixError);
    EXPECT_THROW(inverse(ComplexMatrix(2, 3)), DimensionError);
}

TEST(Norms, Examples)
{
    EXPECT_DOUBLE_EQ(two_norm(ComplexVector{3.0, 4.0 * I}), 5.0);
    EXPECT_DOUBLE_EQ(frobenius_norm(ComplexMatrix::identity(2)), std::sqrt(2.0));
    const auto a = abs_entrywise(ComplexVector{1.0 + I});
    ASSERT_EQ(a.size(), 1u);
    EXPECT_DOUBLE_EQ(a[0], std::sqrt(2.0));
}

TEST(Norms, SquaredNormIsSumOfModuli)
{
    Draws d(9);
    const ComplexVector v = d.vector(17);
    double acc = 0.0;
    for (double x : abs_entrywise(v))
        acc += x * x;
    EXPECT_NEAR(squared_norm(v), acc, 1e-12);
    EXPECT_NEAR(two_norm(v) * two_norm(v), acc, 1e-12);
}
