#include "qsc/ratfunc.hpp"

namespace qsc {

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
    normalize();
}

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = Poly::one();
        return;
    }
    if (!den_.is_one()) {
        Poly g = poly_gcd(num_, den_);
        if (*g.degree() > 0) {
            num_ = poly_divexact(num_, g);
            den_ = poly_divexact(den_, g);
        }
    }
    if (!den_.is_monic()) {
        Rational inv = 1 / den_.leading();
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

const Poly& RatFunc::to_poly() const {
    if (!den_.is_one()) throw std::logic_error("RatFunc::to_poly: denominator " + den_.str());
    return num_;
}

RatFunc RatFunc::operator-() const {
    RatFunc r(*this);
    r.num_ = -r.num_;
    return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    Poly g = poly_gcd(a.den_, b.den_);
    if (g.is_one()) return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    Poly da = poly_divexact(a.den_, g);
    Poly db = poly_divexact(b.den_, g);
    return RatFunc(a.num_ * db + b.num_ * da, a.den_ * db);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc();
    // cross-cancel before multiplying to keep intermediate degrees down
    Poly an = a.num_, bd = b.den_;
    Poly g1 = poly_gcd(an, bd);
    if (!g1.is_one()) {
        an = poly_divexact(an, g1);
        bd = poly_divexact(bd, g1);
    }
    Poly bn = b.num_, ad = a.den_;
    Poly g2 = poly_gcd(bn, ad);
    if (!g2.is_one()) {
        bn = poly_divexact(bn, g2);
        ad = poly_divexact(ad, g2);
    }
    return RatFunc(an * bn, ad * bd);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw std::domain_error("RatFunc: division by zero");
    return a * RatFunc(b.den_, b.num_);
}

RatFunc RatFunc::pow(unsigned long e) const {
    RatFunc r(Rational(1));
    RatFunc base(*this);
    while (e) {
        if (e & 1) r *= base;
        if (e >>= 1) base *= base;
    }
    return r;
}

Rational RatFunc::eval(const Rational& x) const {
    Rational d = den_.eval(x);
    if (d == 0)
        throw PoleError("pole at q = " + Rational(x).get_str() + ": denominator " +
                        den_.str() + " vanishes");
    return num_.eval(x) / d;
}

std::string RatFunc::str() const {
    if (is_poly()) return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

RatFunc q_power(long e) {
    if (e >= 0) return RatFunc(Poly::monomial(static_cast<unsigned long>(e)));
    return RatFunc(Poly::one(), Poly::monomial(static_cast<unsigned long>(-e)));
}

}  // namespace qsc
