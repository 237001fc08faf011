#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace qsc {

// Arbitrary-precision integers and rationals. mpq_class keeps values
// canonical (gcd(|num|, den) = 1, den >= 1, 0 represented as 0/1), which is
// exactly the invariant every module here relies on.
using Int = mpz_class;
using Rational = mpq_class;

inline Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rational pow_rational(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    if (base == 0 && e < 0) throw std::domain_error("pow_rational: 0^negative");
    Rational r;
    unsigned long ae = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), ae);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), ae);
    if (e < 0) r = 1 / r;
    r.canonicalize();
    return r;
}

// a / b where b must divide a exactly.
inline long exact_div(long a, long b) {
    if (b == 0 || a % b != 0)
        throw std::logic_error("exact_div: " + std::to_string(a) +
                               " not divisible by " + std::to_string(b));
    return a / b;
}

}  // namespace qsc
