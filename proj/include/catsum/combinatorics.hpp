#ifndef CATSUM_COMBINATORICS_HPP
#define CATSUM_COMBINATORICS_HPP

#include <catsum/big_rational.hpp>
#include <catsum/errors.hpp>

#include <string>

namespace catsum {

/// Largest sequence index accepted unless the caller raises the cap.
inline constexpr long kDefaultMaxIndex = 10000;

namespace detail {

inline void check_index(const char* what, long n, long max_index) {
    if (n < 0) throw DomainError(std::string(what) + ": negative index " + std::to_string(n));
    if (n > max_index)
        throw DomainError(std::string(what) + ": index " + std::to_string(n) + " exceeds cap " +
                          std::to_string(max_index));
}

} // namespace detail

/// binom(n, m) for n >= 0; zero whenever m < 0 or m > n.
inline BigInt binomial(long n, long m, long max_index = kDefaultMaxIndex) {
    detail::check_index("binomial", n, max_index);
    if (m < 0 || m > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(m));
    return r;
}

/// C_n = binom(2n, n) / (n + 1).
inline BigInt catalan(long n, long max_index = kDefaultMaxIndex) {
    detail::check_index("catalan", n, max_index);
    BigInt c = binomial(2 * n, n, 2 * max_index);
    mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(n + 1));
    return c;
}

/// F_0 = 0, F_1 = 1, iterated.
inline BigInt fibonacci(long n, long max_index = kDefaultMaxIndex) {
    detail::check_index("fibonacci", n, max_index);
    BigInt a = 0;
    BigInt b = 1;
    for (long k = 0; k < n; ++k) {
        BigInt next = a + b;
        a = std::move(b);
        b = std::move(next);
    }
    return a;
}

} // namespace catsum

#endif // CATSUM_COMBINATORICS_HPP
