#ifndef CATSUM_MATRIX_HPP
#define CATSUM_MATRIX_HPP

/*
 * Dense matrices over the exact coefficient domains, plus construction of the
 * Catalan-sum Hankel matrix M_n(x, t) with (i, j) entry
 * C_{t+i+j-2} + x * C_{t+i+j-1}.
 *
 * The public accessors are 1-based to match the usual (i, j, k) notation;
 * storage is row-major and 0-based.
 */

#include <catsum/big_rational.hpp>
#include <catsum/combinatorics.hpp>
#include <catsum/errors.hpp>
#include <catsum/polynomial.hpp>
#include <catsum/rational_function.hpp>

#include <cassert>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

namespace catsum {

/// Identity, zero and exact-division hooks for each entry domain. "like" is
/// a sample element used to pick up the variable tag of polynomial domains.
template <typename T>
struct RingTraits;

template <>
struct RingTraits<BigRational> {
    static BigRational zero(const BigRational&) { return 0; }
    static BigRational one(const BigRational&) { return 1; }
    static bool is_zero(const BigRational& a) { return a.is_zero(); }
    static BigRational exact_div(const BigRational& a, const BigRational& b) { return a / b; }
    static constexpr const char* domain = "rational";
};

template <>
struct RingTraits<BigInt> {
    static BigInt zero(const BigInt&) { return 0; }
    static BigInt one(const BigInt&) { return 1; }
    static bool is_zero(const BigInt& a) { return a == 0; }
    static BigInt exact_div(const BigInt& a, const BigInt& b) {
        if (b == 0) throw DomainError("BigInt: division by zero");
        BigInt q;
        mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        assert(q * b == a);
        return q;
    }
    static constexpr const char* domain = "integer";
};

template <>
struct RingTraits<Polynomial> {
    static Polynomial zero(const Polynomial& like) { return Polynomial(like.var()); }
    static Polynomial one(const Polynomial& like) { return Polynomial::constant(like.var(), 1); }
    static bool is_zero(const Polynomial& a) { return a.is_zero(); }
    static Polynomial exact_div(const Polynomial& a, const Polynomial& b) { return a.exact_div(b); }
    static constexpr const char* domain = "poly-x";
};

template <>
struct RingTraits<RationalFunction> {
    static RationalFunction zero(const RationalFunction& like) { return RationalFunction(like.var()); }
    static RationalFunction one(const RationalFunction& like) {
        return RationalFunction::constant(like.var(), 1);
    }
    static bool is_zero(const RationalFunction& a) { return a.is_zero(); }
    static RationalFunction exact_div(const RationalFunction& a, const RationalFunction& b) {
        return a / b;
    }
    static constexpr const char* domain = "ratfun-x";
};

template <typename T>
class DenseMatrix {
public:
    DenseMatrix(std::size_t rows, std::size_t cols, const T& fill)
        : rows_(rows), cols_(cols), entries_(rows * cols, fill) {
        if (rows == 0 || cols == 0) throw UsageError("DenseMatrix: dimensions must be positive");
    }

    DenseMatrix(std::size_t rows, std::size_t cols, std::vector<T> row_major)
        : rows_(rows), cols_(cols), entries_(std::move(row_major)) {
        if (rows == 0 || cols == 0) throw UsageError("DenseMatrix: dimensions must be positive");
        if (entries_.size() != rows * cols) throw UsageError("DenseMatrix: entry count mismatch");
    }

    /// n x n identity; "like" supplies the domain's zero and one.
    static DenseMatrix identity(std::size_t n, const T& like) {
        DenseMatrix m(n, n, RingTraits<T>::zero(like));
        for (std::size_t i = 1; i <= n; ++i) m.at(i, i) = RingTraits<T>::one(like);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    const T& at(std::size_t i, std::size_t j) const { return entries_[index(i, j)]; }
    T& at(std::size_t i, std::size_t j) { return entries_[index(i, j)]; }

    const std::vector<T>& entries() const { return entries_; }

    template <typename F>
    auto map(F&& f) const -> DenseMatrix<std::decay_t<std::invoke_result_t<F, const T&>>> {
        using U = std::decay_t<std::invoke_result_t<F, const T&>>;
        std::vector<U> out;
        out.reserve(entries_.size());
        for (const auto& e : entries_) out.push_back(f(e));
        return DenseMatrix<U>(rows_, cols_, std::move(out));
    }

    bool is_symmetric() const {
        if (!is_square()) return false;
        for (std::size_t i = 1; i <= rows_; ++i)
            for (std::size_t j = i + 1; j <= cols_; ++j)
                if (!(at(i, j) == at(j, i))) return false;
        return true;
    }

    friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<T> entries_;

    std::size_t index(std::size_t i, std::size_t j) const {
        if (i < 1 || i > rows_ || j < 1 || j > cols_)
            throw UsageError("DenseMatrix: index (" + std::to_string(i) + ", " + std::to_string(j) +
                             ") out of range");
        return (i - 1) * cols_ + (j - 1);
    }
};

template <typename T>
DenseMatrix<T> mat_mul(const DenseMatrix<T>& a, const DenseMatrix<T>& b) {
    if (a.cols() != b.rows())
        throw UsageError("mat_mul: dimension mismatch " + std::to_string(a.cols()) + " vs " +
                         std::to_string(b.rows()));
    const T zero = RingTraits<T>::zero(a.at(1, 1));
    DenseMatrix<T> c(a.rows(), b.cols(), zero);
    for (std::size_t i = 1; i <= a.rows(); ++i) {
        for (std::size_t j = 1; j <= b.cols(); ++j) {
            T acc = zero;
            for (std::size_t k = 1; k <= a.cols(); ++k) {
                if (RingTraits<T>::is_zero(a.at(i, k)) || RingTraits<T>::is_zero(b.at(k, j))) continue;
                acc = acc + a.at(i, k) * b.at(k, j);
            }
            c.at(i, j) = std::move(acc);
        }
    }
    return c;
}

/// Entry (i, j) of M_n(x, t) as a polynomial in x.
inline Polynomial hankel_entry(std::size_t i, std::size_t j, long t) {
    const long m = t + static_cast<long>(i + j) - 2;
    return Polynomial(Var::x, {BigRational(catalan(m)), BigRational(catalan(m + 1))});
}

/// M_n(x, t) with x kept symbolic.
inline DenseMatrix<Polynomial> build_matrix(std::size_t n, long t) {
    if (n < 1) throw DomainError("build_matrix: n must be at least 1");
    if (t < 0) throw DomainError("build_matrix: t must be non-negative");
    DenseMatrix<Polynomial> m(n, n, Polynomial(Var::x));
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j) m.at(i, j) = hankel_entry(i, j, t);
    assert(m.is_symmetric());
    return m;
}

/// M_n(x0, t) for a fixed rational x0.
inline DenseMatrix<BigRational> build_matrix(std::size_t n, long t, const BigRational& x0) {
    if (n < 1) throw DomainError("build_matrix: n must be at least 1");
    if (t < 0) throw DomainError("build_matrix: t must be non-negative");
    DenseMatrix<BigRational> m(n, n, BigRational());
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 1; j <= n; ++j) {
            const long idx = t + static_cast<long>(i + j) - 2;
            m.at(i, j) = BigRational(catalan(idx)) + x0 * BigRational(catalan(idx + 1));
        }
    }
    assert(m.is_symmetric());
    return m;
}

using AnyMatrix = std::variant<DenseMatrix<Polynomial>, DenseMatrix<BigRational>>;

/// Symbolic when x0 is empty, numeric otherwise.
inline AnyMatrix build_matrix_any(std::size_t n, long t, const std::optional<BigRational>& x0) {
    if (x0) return build_matrix(n, t, *x0);
    return build_matrix(n, t);
}

/// Lifts a polynomial matrix into the rational-function field.
inline DenseMatrix<RationalFunction> to_ratfun(const DenseMatrix<Polynomial>& m) {
    return m.map([](const Polynomial& p) { return RationalFunction(p); });
}

/// Evaluates every entry at x0.
inline DenseMatrix<BigRational> evaluate(const DenseMatrix<Polynomial>& m, const BigRational& x0) {
    return m.map([&](const Polynomial& p) { return p.eval(x0); });
}

} // namespace catsum

#endif // CATSUM_MATRIX_HPP
