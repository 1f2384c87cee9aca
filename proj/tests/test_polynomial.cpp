#include <catsum/polynomial.hpp>

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using catsum::BigRational;
using catsum::Polynomial;
using catsum::Var;

namespace {

Polynomial px(std::vector<BigRational> cs) { return Polynomial(Var::x, std::move(cs)); }

} // namespace

TEST(Polynomial, ZeroIsEmptyWithNoDegree) {
    const Polynomial zero(Var::x);
    EXPECT_TRUE(zero.is_zero());
    EXPECT_TRUE(zero.coeffs().empty());
    EXPECT_FALSE(zero.degree().has_value());
    EXPECT_EQ(px({0, 0, 0}), zero);
    EXPECT_EQ(px({1, 2, 0, 0}).degree(), 1U);
}

TEST(Polynomial, Arithmetic) {
    EXPECT_EQ(catsum::poly_mul(px({1, 1}), px({1, 1})), px({1, 2, 1}));
    const Polynomial p = px({3, -1, 4});
    EXPECT_EQ(catsum::poly_add(p, Polynomial(Var::x)), p);
    EXPECT_EQ(catsum::poly_scale(px({1, 3, 1}), BigRational(1, 6)),
              px({BigRational(1, 6), BigRational(1, 2), BigRational(1, 6)}));
    EXPECT_EQ(p - p, Polynomial(Var::x));
    EXPECT_EQ(px({1, 1}).pow(5), px({1, 5, 10, 10, 5, 1}));
    EXPECT_EQ(px({1, 1}).pow(0), px({1}));
}

TEST(Polynomial, DegreeOfProductIsSum) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const auto p = catsum::oracle::random_nonzero_poly(rng, Var::x, 6);
        const auto q = catsum::oracle::random_nonzero_poly(rng, Var::x, 6);
        EXPECT_EQ(*(p * q).degree(), *p.degree() + *q.degree());
    }
}

TEST(Polynomial, VariableMismatchIsUsageError) {
    const Polynomial x1(Var::x, {1, 1});
    const Polynomial u1(Var::u, {1, 1});
    EXPECT_THROW(x1 + u1, catsum::UsageError);
    EXPECT_THROW(x1 * u1, catsum::UsageError);
    EXPECT_THROW(catsum::poly_gcd(x1, u1), catsum::UsageError);
}

TEST(Polynomial, DivisionWithRemainder) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const auto a = catsum::oracle::random_poly(rng, Var::x, 8);
        const auto b = catsum::oracle::random_nonzero_poly(rng, Var::x, 4);
        const auto [q, r] = a.divmod(b);
        EXPECT_EQ(q * b + r, a);
        EXPECT_LT(r.degree(), b.degree());
    }
    EXPECT_THROW(px({1}).divmod(Polynomial(Var::x)), catsum::DomainError);
    EXPECT_THROW(px({1, 0, 1}).exact_div(px({1, 1})), catsum::DomainError);
}

TEST(Polynomial, Gcd) {
    EXPECT_EQ(catsum::poly_gcd(px({1, 2, 1}), px({1, 1})), px({1, 1}));
    EXPECT_EQ(catsum::poly_gcd(px({1, 1}), px({1})), px({1}));
    // (1+x)(1+3x+x^2) = 1 + 4x + 4x^2 + x^3; 1+3x+x^2 has no root at -1.
    EXPECT_EQ(catsum::poly_gcd(px({1, 4, 4, 1}), px({1, 2, 1})), px({1, 1}));
    EXPECT_EQ(catsum::poly_gcd(px({2, 4}), Polynomial(Var::x)), px({BigRational(1, 2), 1}));
    EXPECT_THROW(catsum::poly_gcd(Polynomial(Var::x), Polynomial(Var::x)), catsum::DomainError);
}

TEST(Polynomial, GcdRecoversPlantedFactor) {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        const auto common = catsum::oracle::random_nonzero_poly(rng, Var::x, 3);
        const auto a = catsum::oracle::random_nonzero_poly(rng, Var::x, 4) * common;
        const auto b = catsum::oracle::random_nonzero_poly(rng, Var::x, 4) * common;
        const auto g = catsum::poly_gcd(a, b);
        EXPECT_TRUE(g.leading().is_one());
        EXPECT_TRUE(a.divmod(g).second.is_zero());
        EXPECT_TRUE(b.divmod(g).second.is_zero());
        EXPECT_TRUE(g.divmod(common).second.is_zero());
    }
}

TEST(Polynomial, EvalAndPrint) {
    EXPECT_EQ(px({1, 6, 5, 1}).eval(1), BigRational(13));
    EXPECT_EQ(px({1, 6, 5, 1}).to_string(), "1 + 6*x + 5*x^2 + x^3");
    EXPECT_EQ(px({0, -1, BigRational(1, 2)}).to_string(), "-x + 1/2*x^2");
    EXPECT_EQ(Polynomial(Var::u).to_string(), "0");
    EXPECT_EQ(Polynomial(Var::u, {1, -1}).to_string(), "1 + -u");
}
