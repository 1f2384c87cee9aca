#ifndef CATSUM_BIG_RATIONAL_HPP
#define CATSUM_BIG_RATIONAL_HPP

/*
 * Exact rational scalars.
 *
 * BigRational is a thin value type over GMP's mpq_class. The wrapper pins the
 * canonical form (coprime, positive denominator, zero as 0/1), turns every
 * division by zero into a DomainError instead of a GMP abort, and owns the
 * "num/den" text form used in all serialized output.
 */

#include <catsum/errors.hpp>

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

namespace catsum {

using BigInt = mpz_class;

class BigRational {
public:
    BigRational() = default;
    BigRational(long v) : q_(v) {}          // NOLINT(google-explicit-constructor)
    BigRational(int v) : q_(v) {}           // NOLINT(google-explicit-constructor)
    BigRational(const BigInt& v) : q_(v) {} // NOLINT(google-explicit-constructor)

    BigRational(const BigInt& num, const BigInt& den) {
        if (den == 0) throw DomainError("BigRational: zero denominator");
        q_.get_num() = num;
        q_.get_den() = den;
        q_.canonicalize();
    }

    BigRational(long num, long den) : BigRational(BigInt(num), BigInt(den)) {}

    BigInt numerator() const { return q_.get_num(); }
    BigInt denominator() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    BigRational inverse() const {
        if (is_zero()) throw DomainError("BigRational: inverse of zero");
        BigRational r;
        mpq_inv(r.q_.get_mpq_t(), q_.get_mpq_t());
        return r;
    }

    BigRational operator-() const { return from(-q_); }

    BigRational& operator+=(const BigRational& o) { q_ += o.q_; return *this; }
    BigRational& operator-=(const BigRational& o) { q_ -= o.q_; return *this; }
    BigRational& operator*=(const BigRational& o) { q_ *= o.q_; return *this; }
    BigRational& operator/=(const BigRational& o) {
        if (o.is_zero()) throw DomainError("BigRational: division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
    friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
    friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
    friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }

    friend bool operator==(const BigRational& a, const BigRational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    /// "num/den" in base 10; the denominator is omitted when it is 1.
    std::string to_string() const {
        if (is_integer()) return q_.get_num().get_str(10);
        return q_.get_num().get_str(10) + "/" + q_.get_den().get_str(10);
    }

    /// Inverse of to_string(). Accepts "p", "p/q" with optional leading sign
    /// on p; q must be a positive integer. Non-canonical input is reduced.
    static BigRational parse(std::string_view text) {
        const auto slash = text.find('/');
        const auto num_text = text.substr(0, slash);
        BigInt num = parse_integer(num_text, true);
        if (slash == std::string_view::npos) return BigRational(num);
        BigInt den = parse_integer(text.substr(slash + 1), false);
        if (den == 0) throw UsageError("BigRational: zero denominator in '" + std::string(text) + "'");
        return BigRational(num, den);
    }

    const mpq_class& raw() const { return q_; }

    std::size_t hash() const {
        return std::hash<std::string>{}(to_string());
    }

private:
    mpq_class q_{0};

    static BigRational from(mpq_class q) {
        BigRational r;
        r.q_ = std::move(q);
        return r;
    }

    static BigInt parse_integer(std::string_view s, bool allow_sign) {
        std::string_view digits = s;
        if (allow_sign && !digits.empty() && (digits.front() == '-' || digits.front() == '+'))
            digits.remove_prefix(1);
        if (digits.empty()) throw UsageError("BigRational: malformed number '" + std::string(s) + "'");
        for (char c : digits)
            if (c < '0' || c > '9')
                throw UsageError("BigRational: malformed number '" + std::string(s) + "'");
        std::string buf(s);
        if (!buf.empty() && buf.front() == '+') buf.erase(0, 1);
        return BigInt(buf, 10);
    }
};

inline std::ostream& operator<<(std::ostream& os, const BigRational& r) {
    return os << r.to_string();
}

inline BigRational rat_add(const BigRational& a, const BigRational& b) { return a + b; }
inline BigRational rat_mul(const BigRational& a, const BigRational& b) { return a * b; }
inline BigRational rat_neg(const BigRational& a) { return -a; }
inline BigRational rat_inv(const BigRational& a) { return a.inverse(); }

} // namespace catsum

#endif // CATSUM_BIG_RATIONAL_HPP
