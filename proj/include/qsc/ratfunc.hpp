#pragma once

#include "qsc/poly.hpp"

namespace qsc {

/// Thrown by eval() when the denominator vanishes at the evaluation point.
struct PoleError : std::domain_error {
    explicit PoleError(const std::string& what) : std::domain_error(what) {}
};

/// Reduced quotient of two polynomials: gcd(num, den) = 1, den monic and
/// nonzero. Also covers Laurent expressions (denominator a power of q).
class RatFunc {
  public:
    RatFunc() : num_(), den_(Poly::one()) {}
    RatFunc(const Rational& c) : num_(c), den_(Poly::one()) {}
    RatFunc(const Poly& p) : num_(p), den_(Poly::one()) {}
    RatFunc(Poly num, Poly den);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_poly() const { return den_.is_one(); }
    /// Throws std::logic_error when the denominator is not 1.
    const Poly& to_poly() const;

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    RatFunc pow(unsigned long e) const;

    /// Exact evaluation; throws PoleError naming the vanishing denominator.
    Rational eval(const Rational& x) const;

    std::string str() const;

  private:
    void normalize();
    Poly num_, den_;
};

/// q^e for any integer e (negative exponents give 1/q^{-e}).
RatFunc q_power(long e);

}  // namespace qsc
