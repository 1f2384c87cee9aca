#ifndef CATSUM_POLYNOMIAL_HPP
#define CATSUM_POLYNOMIAL_HPP

/*
 * Dense univariate polynomials over BigRational.
 *
 * Coefficients are stored in ascending degree order with no trailing zeros;
 * the zero polynomial is the empty coefficient list. Every polynomial carries
 * a variable tag (x or u) and binary operations reject mismatched tags.
 */

#include <catsum/big_rational.hpp>
#include <catsum/errors.hpp>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace catsum {

enum class Var { x, u };

inline const char* var_name(Var v) { return v == Var::x ? "x" : "u"; }

/// Degree of a polynomial. The zero polynomial has degree minus infinity,
/// represented by an empty optional (never by -1).
using Degree = std::optional<std::size_t>;

class Polynomial {
public:
    explicit Polynomial(Var v = Var::x) : var_(v) {}

    Polynomial(Var v, std::vector<BigRational> ascending) : var_(v), c_(std::move(ascending)) {
        trim();
    }

    static Polynomial constant(Var v, const BigRational& c) { return Polynomial(v, {c}); }

    static Polynomial monomial(Var v, const BigRational& c, std::size_t power) {
        std::vector<BigRational> cs(power + 1);
        cs[power] = c;
        return Polynomial(v, std::move(cs));
    }

    /// The polynomial consisting of the bare variable.
    static Polynomial variable(Var v) { return monomial(v, 1, 1); }

    Var var() const { return var_; }
    std::span<const BigRational> coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    bool is_constant() const { return c_.size() <= 1; }

    Degree degree() const {
        if (c_.empty()) return std::nullopt;
        return c_.size() - 1;
    }

    /// Coefficient of var^k; zero beyond the degree.
    BigRational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : BigRational(); }

    const BigRational& leading() const {
        if (c_.empty()) throw DomainError("Polynomial: leading coefficient of zero");
        return c_.back();
    }

    Polynomial monic() const {
        if (is_zero()) throw DomainError("Polynomial: monic of zero");
        return scaled(leading().inverse());
    }

    Polynomial scaled(const BigRational& s) const {
        if (s.is_zero()) return Polynomial(var_);
        Polynomial r(*this);
        for (auto& c : r.c_) c *= s;
        return r;
    }

    BigRational eval(const BigRational& at) const {
        BigRational acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
        return acc;
    }

    Polynomial pow(unsigned e) const {
        Polynomial result = constant(var_, 1);
        Polynomial base = *this;
        while (e != 0) {
            if (e & 1U) result *= base;
            e >>= 1U;
            if (e != 0) base *= base;
        }
        return result;
    }

    Polynomial operator-() const { return scaled(-1); }

    Polynomial& operator+=(const Polynomial& o) {
        check_var(o);
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
        trim();
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o) {
        check_var(o);
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
        trim();
        return *this;
    }

    Polynomial& operator*=(const Polynomial& o) {
        check_var(o);
        if (is_zero() || o.is_zero()) {
            c_.clear();
            return *this;
        }
        std::vector<BigRational> prod(c_.size() + o.c_.size() - 1);
        for (std::size_t a = 0; a < c_.size(); ++a) {
            if (c_[a].is_zero()) continue;
            for (std::size_t b = 0; b < o.c_.size(); ++b) {
                if (o.c_[b].is_zero()) continue;
                prod[a + b] += c_[a] * o.c_[b];
            }
        }
        c_ = std::move(prod);
        trim();
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.var_ == b.var_ && a.c_ == b.c_;
    }

    /// Euclidean division over Q: returns (quotient, remainder) with
    /// deg(remainder) < deg(divisor).
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const {
        check_var(divisor);
        if (divisor.is_zero()) throw DomainError("Polynomial: division by zero polynomial");
        Polynomial rem(*this);
        if (rem.c_.size() < divisor.c_.size()) return {Polynomial(var_), std::move(rem)};

        const std::size_t dq = divisor.c_.size() - 1;
        const BigRational inv_lead = divisor.leading().inverse();
        std::vector<BigRational> quot(rem.c_.size() - dq);
        for (std::size_t top = rem.c_.size(); top-- > dq;) {
            if (rem.c_[top].is_zero()) continue;
            BigRational f = rem.c_[top] * inv_lead;
            const std::size_t shift = top - dq;
            for (std::size_t k = 0; k <= dq; ++k) rem.c_[shift + k] -= f * divisor.c_[k];
            quot[shift] = std::move(f);
        }
        rem.trim();
        return {Polynomial(var_, std::move(quot)), std::move(rem)};
    }

    /// Division that must leave no remainder (Bareiss steps rely on this).
    Polynomial exact_div(const Polynomial& divisor) const {
        auto [q, r] = divmod(divisor);
        if (!r.is_zero()) throw DomainError("Polynomial: inexact division");
        return q;
    }

    std::string to_string() const;

    void check_var(const Polynomial& o) const {
        if (var_ != o.var_)
            throw UsageError(std::string("Polynomial: variable mismatch (") + var_name(var_) +
                             " vs " + var_name(o.var_) + ")");
    }

private:
    Var var_;
    std::vector<BigRational> c_;

    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
};

inline Polynomial poly_add(const Polynomial& p, const Polynomial& q) { return p + q; }
inline Polynomial poly_mul(const Polynomial& p, const Polynomial& q) { return p * q; }
inline Polynomial poly_scale(const Polynomial& p, const BigRational& c) { return p.scaled(c); }

/// Monic gcd via the Euclidean algorithm over Q.
inline Polynomial poly_gcd(Polynomial a, Polynomial b) {
    a.check_var(b);
    if (a.is_zero() && b.is_zero()) throw DomainError("poly_gcd: both arguments are zero");
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    a = a.monic();
    b = b.monic();
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        if (b.is_constant()) return Polynomial::constant(a.var(), 1);
        Polynomial r = a.divmod(b).second;
        a = std::move(b);
        b = r.is_zero() ? std::move(r) : r.monic();
    }
    return a;
}

/// Ascending powers, " + " separators, coefficients as p/q; e.g.
/// "1 + -1/2*x + x^3". The zero polynomial prints as "0".
inline std::string Polynomial::to_string() const {
    if (c_.empty()) return "0";
    std::string out;
    const std::string v = var_name(var_);
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k].is_zero()) continue;
        if (!out.empty()) out += " + ";
        std::string mono = k == 0 ? "" : (k == 1 ? v : v + "^" + std::to_string(k));
        if (k == 0) {
            out += c_[k].to_string();
        } else if (c_[k].is_one()) {
            out += mono;
        } else if (c_[k] == BigRational(-1)) {
            out += "-" + mono;
        } else {
            out += c_[k].to_string() + "*" + mono;
        }
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

} // namespace catsum

#endif // CATSUM_POLYNOMIAL_HPP
