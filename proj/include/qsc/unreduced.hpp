#pragma once

#include <vector>

#include "qsc/ratfunc.hpp"

namespace qsc {

/// Unreduced fraction of polynomials. Equality and congruence checks do not
/// need intermediates in lowest terms, so skipping the gcd reduction that
/// RatFunc performs at every step and cross-multiplying (or cancelling
/// modulus factors) once at the end is far cheaper.
struct Unreduced {
    Poly num;
    Poly den = Poly::one();
};

inline void mul_rf(Unreduced& f, const RatFunc& x) {
    f.num = f.num * x.num();
    f.den = f.den * x.den();
}

inline void div_rf(Unreduced& f, const RatFunc& x) {
    f.num = f.num * x.den();
    f.den = f.den * x.num();
}

inline Unreduced operator*(const Unreduced& a, const Unreduced& b) {
    return {a.num * b.num, a.den * b.den};
}

inline Unreduced operator+(const Unreduced& a, const Unreduced& b) {
    if (a.num.is_zero()) return b;
    if (b.num.is_zero()) return a;
    if (a.den == b.den) return {a.num + b.num, a.den};
    // q-factorial denominators nest as the summation index grows; preferring
    // the larger one as the common denominator keeps degrees linear.
    auto [qb, rb] = poly_divrem(b.den, a.den);
    if (rb.is_zero()) return {a.num * qb + b.num, b.den};
    auto [qa, ra] = poly_divrem(a.den, b.den);
    if (ra.is_zero()) return {a.num + b.num * qa, a.den};
    return {a.num * b.den + b.num * a.den, a.den * b.den};
}

inline Unreduced operator-(const Unreduced& a, const Unreduced& b) {
    Unreduced nb{-b.num, b.den};
    return a + nb;
}

inline bool unreduced_equal(const Unreduced& a, const Unreduced& b) {
    return a.num * b.den == b.num * a.den;
}

/// Sum over a common denominator (the lcm of the term denominators): one gcd
/// per term instead of one per pairwise addition, and the denominator degree
/// stays at the lcm instead of the full product.
inline Unreduced unreduced_sum(const std::vector<Unreduced>& terms) {
    Poly den = Poly::one();
    for (const auto& t : terms)
        if (!t.num.is_zero()) den = den * poly_divexact(t.den, poly_gcd(den, t.den));
    Poly num;
    for (const auto& t : terms)
        if (!t.num.is_zero()) num += t.num * poly_divexact(den, t.den);
    return {num, den};
}

}  // namespace qsc
