#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qsc/rational.hpp"

namespace qsc {

/// Dense univariate polynomial in q over Rational. Coefficient i is the
/// coefficient of q^i; the highest stored coefficient is nonzero unless the
/// polynomial is zero (empty coefficient vector). degree() of the zero
/// polynomial is nullopt, never a number.
class Poly {
  public:
    Poly() = default;
    explicit Poly(const Rational& c);
    explicit Poly(std::vector<Rational> coeffs);

    static Poly zero() { return Poly(); }
    static Poly one() { return Poly(Rational(1)); }
    // c * q^e
    static Poly monomial(unsigned long e, const Rational& c = Rational(1));

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const;
    std::optional<long> degree() const;
    const Rational& leading() const;
    Rational coeff(unsigned long i) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_monic() const;
    bool has_integer_coeffs() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly operator*(const Rational& c) const;
    bool operator==(const Poly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Rational eval(const Rational& x) const;

    /// Leading coefficient scaled to 1. Zero polynomial is left unchanged.
    Poly monic() const;

    std::string str() const;

  private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// Euclidean division: a = quotient*b + remainder, deg(remainder) < deg(b).
/// Throws std::domain_error when b is zero.
std::pair<Poly, Poly> poly_divrem(const Poly& a, const Poly& b);

/// Monic greatest common divisor. Throws on gcd(0, 0).
Poly poly_gcd(const Poly& a, const Poly& b);

/// Quotient a/b; throws std::logic_error if b does not divide a exactly.
Poly poly_divexact(const Poly& a, const Poly& b);

}  // namespace qsc
