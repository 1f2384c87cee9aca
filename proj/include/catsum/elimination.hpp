#ifndef CATSUM_ELIMINATION_HPP
#define CATSUM_ELIMINATION_HPP

/*
 * Two elimination routines that share no code:
 *
 *  - doolittle_lu: unpivoted LU over a field, L unit lower triangular. A
 *    vanishing leading principal minor is reported as ZeroPivotError and is
 *    never repaired by a permutation.
 *  - bareiss_det: fraction-free determinant over an integral domain. Every
 *    division is exact, so polynomial matrices stay polynomial throughout.
 */

#include <catsum/errors.hpp>
#include <catsum/matrix.hpp>

#include <cstddef>
#include <utility>

namespace catsum {

template <typename T>
struct LUPair {
    DenseMatrix<T> L;
    DenseMatrix<T> U;
};

template <typename T>
LUPair<T> doolittle_lu(const DenseMatrix<T>& a) {
    using R = RingTraits<T>;
    if (!a.is_square()) throw UsageError("doolittle_lu: matrix is not square");
    const std::size_t n = a.rows();
    const T& like = a.at(1, 1);
    LUPair<T> lu{DenseMatrix<T>::identity(n, like), DenseMatrix<T>(n, n, R::zero(like))};
    auto& L = lu.L;
    auto& U = lu.U;

    for (std::size_t k = 1; k <= n; ++k) {
        for (std::size_t j = k; j <= n; ++j) {
            T s = a.at(k, j);
            for (std::size_t p = 1; p < k; ++p) s = s - L.at(k, p) * U.at(p, j);
            U.at(k, j) = std::move(s);
        }
        if (R::is_zero(U.at(k, k))) throw ZeroPivotError(k);
        for (std::size_t i = k + 1; i <= n; ++i) {
            T s = a.at(i, k);
            for (std::size_t p = 1; p < k; ++p) s = s - L.at(i, p) * U.at(p, k);
            L.at(i, k) = s / U.at(k, k);
        }
    }
    return lu;
}

/// Product of U's diagonal, i.e. the determinant implied by an LU pair.
template <typename T>
T pivot_product(const LUPair<T>& lu) {
    T acc = RingTraits<T>::one(lu.U.at(1, 1));
    for (std::size_t k = 1; k <= lu.U.rows(); ++k) acc = acc * lu.U.at(k, k);
    return acc;
}

template <typename T>
T bareiss_det(const DenseMatrix<T>& a) {
    using R = RingTraits<T>;
    if (!a.is_square()) throw UsageError("bareiss_det: matrix is not square");
    const std::size_t n = a.rows();
    DenseMatrix<T> m = a;
    T prev = R::one(a.at(1, 1));
    bool negate = false;

    for (std::size_t k = 1; k < n; ++k) {
        if (R::is_zero(m.at(k, k))) {
            std::size_t swap_row = 0;
            for (std::size_t i = k + 1; i <= n && swap_row == 0; ++i)
                if (!R::is_zero(m.at(i, k))) swap_row = i;
            if (swap_row == 0) return R::zero(a.at(1, 1));
            for (std::size_t j = 1; j <= n; ++j) std::swap(m.at(k, j), m.at(swap_row, j));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i <= n; ++i) {
            for (std::size_t j = k + 1; j <= n; ++j) {
                T num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                m.at(i, j) = R::exact_div(num, prev);
            }
            m.at(i, k) = R::zero(prev);
        }
        prev = m.at(k, k);
    }
    T det = m.at(n, n);
    if (negate) det = -det;
    return det;
}

} // namespace catsum

#endif // CATSUM_ELIMINATION_HPP
