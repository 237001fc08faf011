#pragma once

#include <vector>

#include "qsc/ratfunc.hpp"

namespace qsc {

/// The t-th cyclotomic polynomial, by exact division of q^t - 1 by the
/// cyclotomics of the proper divisors of t. Memoized; safe to call from
/// several threads.
Poly cyclotomic(unsigned long t);

unsigned long euler_totient(unsigned long t);

/// [m] = (1 - q^m)/(1 - q). Polynomial 1 + q + ... + q^{m-1} for m >= 0,
/// a Laurent expression for m < 0.
RatFunc q_integer(long m);

/// Parameters of the q-shifted factorial (q^a; q^d)_k.
struct QPochhammerSpec {
    long base_exponent = 1;  // a; negative values give Laurent expressions
    long step = 1;           // d >= 1
    long length = 0;         // k >= 0
};

/// prod_{j=0}^{k-1} (1 - q^{a+jd}); 1 for k = 0.
RatFunc q_pochhammer(const QPochhammerSpec& spec);
inline RatFunc q_pochhammer(long a, long d, long k) { return q_pochhammer({a, d, k}); }

/// prod_{j=0}^{k-1} (1 - c q^{a+jd}) with a rational scalar c.
RatFunc scaled_q_pochhammer(const Rational& c, long a, long d, long k);

/// A product of cyclotomic-polynomial powers, kept factored (for coprimality
/// checks against individual factors) and expanded (for divisibility).
struct Modulus {
    std::vector<std::pair<unsigned long, unsigned long>> factors;  // (index t, exponent e)
    Poly expanded;
    std::string description;
};

/// [n] * Phi_n(q)^phi_power.
Modulus modulus_build(unsigned long n, unsigned long phi_power);

/// Phi_n(q)^power.
Modulus phi_only_modulus(unsigned long n, unsigned long power);

/// [n] alone.
Modulus q_integer_modulus(unsigned long n);

}  // namespace qsc
