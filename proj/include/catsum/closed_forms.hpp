#ifndef CATSUM_CLOSED_FORMS_HPP
#define CATSUM_CLOSED_FORMS_HPP

/*
 * Explicit formulas for the LU factors of M_n(x) at shift t = 0.
 *
 *   g(k)   = sum_{0<=r<=k} binom(2k-r, r) x^r
 *   F(k,i) = binom(2i, i-k) / (i(2i-1))
 *            * sum_{0<=r<=k} binom(2k-r, r) / (2k-r)
 *                            * (ri + 2ik^2 - ik - 2rk^2 + 2k^3 - k^2) x^r
 *   L[i,k] = F(k,i) / g(k),   U[k,j] = F(k,j) / g(k-1)
 *
 * and their images under x = -u/(1+u)^2, where g and F become short
 * expressions in powers of u, 1-u and 1+u.
 */

#include <catsum/big_rational.hpp>
#include <catsum/combinatorics.hpp>
#include <catsum/errors.hpp>
#include <catsum/matrix.hpp>
#include <catsum/polynomial.hpp>
#include <catsum/rational_function.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace catsum {

inline Polynomial g_poly(long k) {
    if (k < 0) throw DomainError("g_poly: k must be non-negative, got " + std::to_string(k));
    std::vector<BigRational> cs;
    cs.reserve(static_cast<std::size_t>(k) + 1);
    for (long r = 0; r <= k; ++r) cs.emplace_back(binomial(2 * k - r, r));
    return Polynomial(Var::x, std::move(cs));
}

inline Polynomial F_poly(long k, long i) {
    if (k < 1 || i < 1)
        throw DomainError("F_poly: k and i must be at least 1, got (" + std::to_string(k) + ", " +
                          std::to_string(i) + ")");
    const BigInt kb(k);
    const BigInt ib(i);
    std::vector<BigRational> inner;
    inner.reserve(static_cast<std::size_t>(k) + 1);
    for (long r = 0; r <= k; ++r) {
        const BigInt rb(r);
        const BigInt weight = rb * ib + 2 * ib * kb * kb - ib * kb - 2 * rb * kb * kb + 2 * kb * kb * kb - kb * kb;
        inner.emplace_back(binomial(2 * k - r, r) * weight, BigInt(2 * k - r));
    }
    const BigRational prefactor(binomial(2 * i, i - k), ib * (2 * ib - 1));
    return Polynomial(Var::x, std::move(inner)).scaled(prefactor);
}

struct ClosedFormLU {
    std::size_t n;
    DenseMatrix<RationalFunction> L;
    DenseMatrix<RationalFunction> U;
};

/// L and U from F and g. Zeros off the triangles come out of the binomial
/// factor; they are checked here, never written in.
inline ClosedFormLU closed_form_lu(std::size_t n) {
    if (n < 1) throw DomainError("closed_form_lu: n must be at least 1");
    std::vector<Polynomial> g;
    g.reserve(n + 1);
    for (std::size_t k = 0; k <= n; ++k) g.push_back(g_poly(static_cast<long>(k)));

    const RationalFunction zero(Var::x);
    ClosedFormLU out{n, DenseMatrix<RationalFunction>(n, n, zero), DenseMatrix<RationalFunction>(n, n, zero)};
    for (std::size_t k = 1; k <= n; ++k) {
        for (std::size_t i = 1; i <= n; ++i) {
            const Polynomial f = F_poly(static_cast<long>(k), static_cast<long>(i));
            out.L.at(i, k) = RationalFunction(f, g[k]);
            out.U.at(k, i) = RationalFunction(f, g[k - 1]);
        }
    }

    for (std::size_t i = 1; i <= n; ++i) {
        if (!out.L.at(i, i).is_one()) throw std::logic_error("closed_form_lu: L diagonal is not 1");
        for (std::size_t k = i + 1; k <= n; ++k) {
            if (!out.L.at(i, k).is_zero()) throw std::logic_error("closed_form_lu: L not lower triangular");
            if (!out.U.at(k, i).is_zero()) throw std::logic_error("closed_form_lu: U not upper triangular");
        }
    }
    return out;
}

// ---- u-world ----

/// The substitution x = -u / (1+u)^2.
inline RationalFunction x_of_u() {
    const Polynomial one_plus_u(Var::u, {1, 1});
    return RationalFunction(Polynomial::monomial(Var::u, -1, 1), one_plus_u.pow(2));
}

namespace detail {

inline Polynomial one_plus_u_pow(unsigned e) { return Polynomial(Var::u, {1, 1}).pow(e); }

/// 1 + sign * u^e
inline Polynomial one_plus_sign_u_pow(int sign, std::size_t e) {
    return Polynomial::constant(Var::u, 1) + Polynomial::monomial(Var::u, sign, e);
}

inline const Polynomial& one_minus_u() {
    static const Polynomial p(Var::u, {1, -1});
    return p;
}

} // namespace detail

/// g(k) = (1 - u^{2k+1}) / ((1-u)(1+u)^{2k}).
inline RationalFunction g_closed_u(long k) {
    if (k < 0) throw DomainError("g_closed_u: k must be non-negative, got " + std::to_string(k));
    const auto kk = static_cast<unsigned>(k);
    return RationalFunction(detail::one_plus_sign_u_pow(-1, 2 * kk + 1),
                            detail::one_minus_u() * detail::one_plus_u_pow(2 * kk));
}

/// F(k,j) as the sum of the two terms
///   (1 - u^{2k}) B/(2j(2j-1)) (2k^2 - j) / ((1-u)(1+u)^{2k-1})
///   (1 + u^{2k}) B k / (2j (1+u)^{2k})
/// with B = binom(2j, j-k).
inline RationalFunction F_closed_u(long k, long j) {
    if (k < 1 || j < 1)
        throw DomainError("F_closed_u: k and j must be at least 1, got (" + std::to_string(k) + ", " +
                          std::to_string(j) + ")");
    const auto kk = static_cast<unsigned>(k);
    const BigRational b(binomial(2 * j, j - k));

    const BigRational c1 = b / BigRational(BigInt(2 * j * (2 * j - 1))) * BigRational(2 * k * k - j);
    const RationalFunction first(detail::one_plus_sign_u_pow(-1, 2 * kk).scaled(c1),
                                 detail::one_minus_u() * detail::one_plus_u_pow(2 * kk - 1));

    const BigRational c2 = b * BigRational(k) / BigRational(2 * j);
    const RationalFunction second(detail::one_plus_sign_u_pow(1, 2 * kk).scaled(c2),
                                  detail::one_plus_u_pow(2 * kk));
    return first + second;
}

/// 1 / (g(k) g(k-1)) from the closed form of g.
inline RationalFunction pf_kernel_lhs(long k) {
    if (k < 1) throw DomainError("pf_kernel_lhs: k must be at least 1");
    return (g_closed_u(k) * g_closed_u(k - 1)).inverse();
}

/// (1-u)(1+u)^{4k-3} [1/(1-u^{2k-1}) - u^2/(1-u^{2k+1})].
inline RationalFunction pf_kernel_rhs(long k) {
    if (k < 1) throw DomainError("pf_kernel_rhs: k must be at least 1");
    const auto kk = static_cast<unsigned>(k);
    const Polynomial one = Polynomial::constant(Var::u, 1);
    const RationalFunction a(one, detail::one_plus_sign_u_pow(-1, 2 * kk - 1));
    const RationalFunction b(Polynomial::monomial(Var::u, 1, 2), detail::one_plus_sign_u_pow(-1, 2 * kk + 1));
    const RationalFunction prefactor(detail::one_minus_u() * detail::one_plus_u_pow(4 * kk - 3));
    return prefactor * (a - b);
}

} // namespace catsum

#endif // CATSUM_CLOSED_FORMS_HPP
