#include <catsum/closed_forms.hpp>
#include <catsum/elimination.hpp>

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using catsum::BigInt;
using catsum::BigRational;
using catsum::DenseMatrix;
using catsum::Polynomial;
using catsum::RationalFunction;
using catsum::Var;

namespace {

Polynomial px(std::vector<BigRational> cs) { return Polynomial(Var::x, std::move(cs)); }

DenseMatrix<BigRational> ints(std::size_t n, std::vector<long> v) {
    std::vector<BigRational> e(v.begin(), v.end());
    return DenseMatrix<BigRational>(n, n, std::move(e));
}

} // namespace

TEST(Doolittle, Identity) {
    const auto id = DenseMatrix<BigRational>::identity(3, BigRational());
    const auto lu = catsum::doolittle_lu(id);
    EXPECT_EQ(lu.L, id);
    EXPECT_EQ(lu.U, id);
}

TEST(Doolittle, OrderTwoHankel) {
    const auto lu = catsum::doolittle_lu(catsum::to_ratfun(catsum::build_matrix(2, 0)));
    EXPECT_EQ(lu.L.at(2, 1), RationalFunction(px({1, 2}), px({1, 1})));
    EXPECT_EQ(lu.U.at(2, 2), RationalFunction(px({1, 3, 1}), px({1, 1})));
}

TEST(Doolittle, ZeroPivotNamesTheMinor) {
    try {
        catsum::doolittle_lu(ints(2, {0, 1, 1, 0}));
        FAIL() << "expected ZeroPivotError";
    } catch (const catsum::ZeroPivotError& e) {
        EXPECT_EQ(e.leading_minor(), 1U);
    }
    try {
        catsum::doolittle_lu(ints(3, {1, 2, 3, 2, 4, 5, 3, 5, 6}));
        FAIL() << "expected ZeroPivotError";
    } catch (const catsum::ZeroPivotError& e) {
        EXPECT_EQ(e.leading_minor(), 2U);
    }
    EXPECT_THROW(catsum::doolittle_lu(DenseMatrix<BigRational>(2, 3, BigRational(1))), catsum::UsageError);
}

TEST(Doolittle, PivotsOfHankelAreGRatios) {
    const std::size_t n = 6;
    const auto lu = catsum::doolittle_lu(catsum::to_ratfun(catsum::build_matrix(n, 0)));
    for (std::size_t k = 1; k <= n; ++k)
        EXPECT_EQ(lu.U.at(k, k),
                  RationalFunction(catsum::g_poly(static_cast<long>(k)), catsum::g_poly(static_cast<long>(k) - 1)));
}

TEST(Doolittle, ReconstructsRandomSymmetricMatrices) {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(trial % 6);
        const auto m = catsum::oracle::random_symmetric_regular(rng, n);
        const auto lu = catsum::doolittle_lu(m);
        EXPECT_EQ(catsum::mat_mul(lu.L, lu.U), m);
        for (std::size_t i = 1; i <= n; ++i) {
            EXPECT_TRUE(lu.L.at(i, i).is_one());
            for (std::size_t j = i + 1; j <= n; ++j) {
                EXPECT_TRUE(lu.L.at(i, j).is_zero());
                EXPECT_TRUE(lu.U.at(j, i).is_zero());
            }
        }
    }
}

TEST(Bareiss, Examples) {
    EXPECT_EQ(catsum::bareiss_det(DenseMatrix<BigRational>::identity(4, BigRational())), BigRational(1));
    EXPECT_EQ(catsum::bareiss_det(catsum::build_matrix(2, 0)), px({1, 3, 1}));
    EXPECT_EQ(catsum::bareiss_det(catsum::build_matrix(3, 0, BigRational(1))), BigRational(13));
}

TEST(Bareiss, RowExchangesAndSingular) {
    EXPECT_EQ(catsum::bareiss_det(ints(2, {0, 1, 1, 0})), BigRational(-1));
    EXPECT_EQ(catsum::bareiss_det(ints(3, {0, 2, 1, 3, 0, 1, 1, 1, 0})), BigRational(5));
    EXPECT_EQ(catsum::bareiss_det(ints(3, {1, 2, 3, 2, 4, 6, 0, 1, 1})), BigRational(0));
    EXPECT_EQ(catsum::bareiss_det(ints(2, {0, 0, 0, 5})), BigRational(0));
}

TEST(Bareiss, MatchesCofactorExpansion) {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<long> entry(-9, 9);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(trial % 6);
        std::vector<BigInt> e(n * n);
        for (auto& v : e) v = entry(rng);
        if (trial % 5 == 0) e[0] = 0;
        const DenseMatrix<BigInt> m(n, n, e);
        EXPECT_EQ(catsum::bareiss_det(m), catsum::oracle::laplace_det(m));
    }
    for (std::size_t n = 1; n <= 6; ++n) {
        const auto m = catsum::build_matrix(n, 2);
        EXPECT_EQ(catsum::bareiss_det(m), catsum::oracle::laplace_det(m));
    }
}

TEST(Bareiss, AgreesWithDoolittlePivotProduct) {
    for (std::size_t n = 1; n <= 8; ++n) {
        const auto m = catsum::build_matrix(n, 0);
        const auto lu = catsum::doolittle_lu(catsum::to_ratfun(m));
        EXPECT_EQ(catsum::pivot_product(lu), RationalFunction(catsum::bareiss_det(m)));
    }
}

TEST(Bareiss, EvaluationCommutes) {
    std::mt19937_64 rng(37);
    for (std::size_t n = 1; n <= 8; ++n) {
        const auto m = catsum::build_matrix(n, 0);
        const Polynomial det = catsum::bareiss_det(m);
        for (int trial = 0; trial < 20; ++trial) {
            const BigRational x0 = catsum::oracle::random_rational(rng, 50);
            EXPECT_EQ(catsum::bareiss_det(catsum::build_matrix(n, 0, x0)), det.eval(x0));
        }
    }
}
