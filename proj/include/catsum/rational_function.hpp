#ifndef CATSUM_RATIONAL_FUNCTION_HPP
#define CATSUM_RATIONAL_FUNCTION_HPP

/*
 * Rational functions over Q in one variable.
 *
 * The canonical representative has a monic denominator and a numerator
 * coprime to it, so two values are equal exactly when their members are.
 * Zero is 0/1. Addition and multiplication use the gcd-splitting forms that
 * keep intermediate results in lowest terms when the operands are canonical.
 */

#include <catsum/big_rational.hpp>
#include <catsum/errors.hpp>
#include <catsum/polynomial.hpp>

#include <cassert>
#include <ostream>
#include <string>
#include <utility>

namespace catsum {

class RationalFunction {
public:
    explicit RationalFunction(Var v = Var::x) : num_(v), den_(Polynomial::constant(v, 1)) {}

    RationalFunction(const Polynomial& p) // NOLINT(google-explicit-constructor)
        : num_(p), den_(Polynomial::constant(p.var(), 1)) {}

    RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
        normalize();
    }

    static RationalFunction constant(Var v, const BigRational& c) {
        return RationalFunction(Polynomial::constant(v, c));
    }

    Var var() const { return num_.var(); }
    const Polynomial& numerator() const { return num_; }
    const Polynomial& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }

    RationalFunction inverse() const {
        if (is_zero()) throw DomainError("RationalFunction: inverse of zero");
        return RationalFunction(den_, num_);
    }

    RationalFunction operator-() const { return from_canonical(-num_, den_); }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        a.num_.check_var(b.num_);
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
        // With b = b1*g, d = d1*g the sum's numerator is coprime to b1*d1,
        // so only g can share factors with it.
        const Polynomial g = poly_gcd(a.den_, b.den_);
        const Polynomial a_cof = a.den_.exact_div(g);
        const Polynomial b_cof = b.den_.exact_div(g);
        Polynomial num = a.num_ * b_cof + b.num_ * a_cof;
        if (num.is_zero()) return RationalFunction(a.var());
        const Polynomial h = poly_gcd(num, g);
        return from_canonical_monic(num.exact_div(h), a_cof * b.den_.exact_div(h));
    }

    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return a + (-b);
    }

    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        a.num_.check_var(b.num_);
        if (a.is_zero() || b.is_zero()) return RationalFunction(a.var());
        const Polynomial g1 = poly_gcd(a.num_, b.den_);
        const Polynomial g2 = poly_gcd(b.num_, a.den_);
        return from_canonical_monic(a.num_.exact_div(g1) * b.num_.exact_div(g2),
                                    a.den_.exact_div(g2) * b.den_.exact_div(g1));
    }

    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        return a * b.inverse();
    }

    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        const bool structural = a.num_ == b.num_ && a.den_ == b.den_;
#ifndef NDEBUG
        if (a.var() == b.var()) {
            const bool crossed = a.num_ * b.den_ == b.num_ * a.den_;
            assert(structural == crossed);
        }
#endif
        return structural;
    }

    /// Equality by cross-multiplication; independent of canonical form.
    bool equals_by_cross_multiplication(const RationalFunction& o) const {
        return num_ * o.den_ == o.num_ * den_;
    }

    BigRational eval(const BigRational& at) const {
        const BigRational d = den_.eval(at);
        if (d.is_zero()) throw DomainError("RationalFunction: pole at evaluation point");
        return num_.eval(at) / d;
    }

    std::string to_string() const {
        if (den_.is_one()) return num_.to_string();
        return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
    }

private:
    Polynomial num_;
    Polynomial den_;

    void normalize() {
        num_.check_var(den_);
        if (den_.is_zero()) throw DomainError("RationalFunction: zero denominator");
        if (num_.is_zero()) {
            den_ = Polynomial::constant(num_.var(), 1);
            return;
        }
        const Polynomial g = poly_gcd(num_, den_);
        if (!g.is_one()) {
            num_ = num_.exact_div(g);
            den_ = den_.exact_div(g);
        }
        scale_to_monic();
    }

    void scale_to_monic() {
        if (!den_.leading().is_one()) {
            const BigRational inv = den_.leading().inverse();
            num_ = num_.scaled(inv);
            den_ = den_.scaled(inv);
        }
    }

    static RationalFunction from_canonical(Polynomial num, Polynomial den) {
        RationalFunction r(num.var());
        r.num_ = std::move(num);
        r.den_ = std::move(den);
        return r;
    }

    // Coprime pair whose denominator may still need scaling to monic.
    static RationalFunction from_canonical_monic(Polynomial num, Polynomial den) {
        RationalFunction r = from_canonical(std::move(num), std::move(den));
        if (r.num_.is_zero()) return RationalFunction(r.var());
        r.scale_to_monic();
        return r;
    }
};

/// Canonical quotient num/den.
inline RationalFunction rf_normalize(const Polynomial& num, const Polynomial& den) {
    return RationalFunction(num, den);
}

/// p(s): substitutes the rational function s for the variable x of p,
/// evaluated by Horner's scheme in the field of s.
inline RationalFunction poly_compose_rf(const Polynomial& p, const RationalFunction& s) {
    if (p.var() != Var::x) throw UsageError("poly_compose_rf: outer polynomial must be in x");
    if (s.var() != Var::u) throw UsageError("poly_compose_rf: substituted function must be in u");
    RationalFunction acc(Var::u);
    const auto cs = p.coeffs();
    for (auto it = cs.rbegin(); it != cs.rend(); ++it)
        acc = acc * s + RationalFunction::constant(Var::u, *it);
    return acc;
}

inline std::ostream& operator<<(std::ostream& os, const RationalFunction& r) {
    return os << r.to_string();
}

} // namespace catsum

#endif // CATSUM_RATIONAL_FUNCTION_HPP
