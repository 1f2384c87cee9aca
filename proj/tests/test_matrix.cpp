#include <catsum/closed_forms.hpp>
#include <catsum/matrix.hpp>

#include <gtest/gtest.h>

using catsum::BigRational;
using catsum::DenseMatrix;
using catsum::Polynomial;
using catsum::RationalFunction;
using catsum::Var;

namespace {

Polynomial px(std::vector<BigRational> cs) { return Polynomial(Var::x, std::move(cs)); }

DenseMatrix<BigRational> ints(std::size_t r, std::size_t c, std::vector<long> v) {
    std::vector<BigRational> e(v.begin(), v.end());
    return DenseMatrix<BigRational>(r, c, std::move(e));
}

} // namespace

TEST(BuildMatrix, Symbolic) {
    const auto m1 = catsum::build_matrix(1, 0);
    EXPECT_EQ(m1.at(1, 1), px({1, 1}));

    const auto m2 = catsum::build_matrix(2, 0);
    EXPECT_EQ(m2.at(1, 1), px({1, 1}));
    EXPECT_EQ(m2.at(1, 2), px({1, 2}));
    EXPECT_EQ(m2.at(2, 1), px({1, 2}));
    EXPECT_EQ(m2.at(2, 2), px({2, 5}));
}

TEST(BuildMatrix, NumericAndShift) {
    EXPECT_EQ(catsum::build_matrix(2, 0, BigRational(1)), ints(2, 2, {2, 3, 3, 7}));
    // t = 1: C_1 + x C_2, C_2 + x C_3, C_3 + x C_4
    const auto shifted = catsum::build_matrix(2, 1);
    EXPECT_EQ(shifted.at(1, 1), px({1, 2}));
    EXPECT_EQ(shifted.at(2, 2), px({5, 14}));
    EXPECT_EQ(catsum::evaluate(shifted, BigRational(1, 2)), catsum::build_matrix(2, 1, BigRational(1, 2)));
}

TEST(BuildMatrix, SymmetricHankel) {
    for (std::size_t n = 1; n <= 8; ++n) {
        for (long t = 0; t <= 3; ++t) {
            const auto m = catsum::build_matrix(n, t);
            EXPECT_TRUE(m.is_symmetric());
            for (std::size_t i = 2; i <= n; ++i)
                for (std::size_t j = 1; j < n; ++j) EXPECT_EQ(m.at(i, j), m.at(i - 1, j + 1));
        }
    }
}

TEST(BuildMatrix, PreconditionErrors) {
    EXPECT_THROW(catsum::build_matrix(0, 0), catsum::DomainError);
    EXPECT_THROW(catsum::build_matrix(2, -1), catsum::DomainError);
    EXPECT_THROW(catsum::build_matrix(0, 0, BigRational(1)), catsum::DomainError);
}

TEST(BuildMatrix, AnyVariant) {
    EXPECT_TRUE(std::holds_alternative<DenseMatrix<Polynomial>>(catsum::build_matrix_any(2, 0, std::nullopt)));
    EXPECT_TRUE(std::holds_alternative<DenseMatrix<BigRational>>(catsum::build_matrix_any(2, 0, BigRational(1))));
}

TEST(DenseMatrix, IndexingIsOneBased) {
    auto m = ints(2, 3, {1, 2, 3, 4, 5, 6});
    EXPECT_EQ(m.at(1, 1), BigRational(1));
    EXPECT_EQ(m.at(2, 3), BigRational(6));
    EXPECT_THROW(m.at(0, 1), catsum::UsageError);
    EXPECT_THROW(m.at(3, 1), catsum::UsageError);
    EXPECT_THROW(DenseMatrix<BigRational>(2, 2, std::vector<BigRational>(3)), catsum::UsageError);
}

TEST(MatMul, Basics) {
    const auto a = ints(2, 2, {1, 2, 3, 4});
    EXPECT_EQ(catsum::mat_mul(a, DenseMatrix<BigRational>::identity(2, BigRational())), a);
    EXPECT_EQ(catsum::mat_mul(a, ints(2, 2, {0, 1, 1, 0})), ints(2, 2, {2, 1, 4, 3}));
    EXPECT_EQ(catsum::mat_mul(ints(1, 3, {1, 2, 3}), ints(3, 1, {4, 5, 6})), ints(1, 1, {32}));
    EXPECT_THROW(catsum::mat_mul(a, ints(3, 1, {1, 2, 3})), catsum::UsageError);
}

TEST(MatMul, ClosedFormFactorsOfOrderTwo) {
    const auto cf = catsum::closed_form_lu(2);
    EXPECT_EQ(catsum::mat_mul(cf.L, cf.U), catsum::to_ratfun(catsum::build_matrix(2, 0)));
}
