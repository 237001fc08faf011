#pragma once

#include "qsc/congruence.hpp"
#include "qsc/theorems.hpp"

namespace qsc {

/// A rational number seen p-adically: value = p^valuation * u with u a
/// p-adic unit known modulo p^precision. Zero carries a distinguished flag.
struct PAdicValue {
    Int p = 2;
    unsigned long precision = 1;  // unit_residue is known modulo p^precision
    long valuation = 0;
    Int unit_residue = 0;  // in [0, p^precision), coprime to p unless zero
    bool is_zero = true;

    static PAdicValue from_rational(const Rational& x, const Int& p, unsigned long precision);
    PAdicValue operator*(const PAdicValue& o) const;
    PAdicValue operator+(const PAdicValue& o) const;
    /// Agreement modulo p^min(precisions), taking valuations into account.
    bool congruent_to(const PAdicValue& o) const;
};

long padic_valuation(const Rational& x, const Int& p);

/// x == y (mod p^m) in the p-adic sense. Throws std::domain_error when the
/// denominator of x - y is divisible by p (the congruence is not well posed).
bool congruent_mod_prime_power(const Rational& x, const Rational& y, const Int& p,
                               unsigned long m);

/// Bernoulli numbers, B_1 = -1/2 convention, from the defining recurrence
/// sum_{j=0}^{m} C(m+1, j) B_j = 0. Desk bound m <= 200.
Rational bernoulli(unsigned long m);

/// H_m^{(order)} = sum_{k=1}^{m} k^{-order}.
Rational harmonic(unsigned long m, unsigned long order);

/// Rising factorial a(a+1)...(a+k-1); 1 for k = 0.
Rational rising_factorial(const Rational& a, unsigned long k);

/// Morita's p-adic Gamma at a p-adic integer x, via the integer
/// representative N == x (mod p^k) and the product formula
/// Gamma_p(N) = (-1)^N prod_{1<=j<N, p∤j} j. Desk bound p^k <= 10^7.
PAdicValue padic_gamma(const Rational& x, const Int& p, unsigned long k);

enum class SeriesId { C2Family, G2Family };
enum class UpperChoice { Short, Long };

/// Exact value of the finite classical sum. C2Family: summand
/// (4k+1) ((1/2)_k / k!)^4, upper (p^r-1)/2 (Short) or p^r-1 (Long).
/// G2Family: summand (8k+1) ((1/4)_k / k!)^4, upper (p-1)/4 for
/// p == 1 (mod 4) resp. (3p-1)/4 for p == 3 (mod 4) (Short), or p-1 (Long).
Rational classical_sum(SeriesId series, long p, long power, UpperChoice upper);

/// Independent classical evaluation of the q -> 1 limit of the main sums:
/// sum_{k=0}^{M} (2dk+r) ((r/d)_k / k!)^4.
Rational classical_lhs_general(long d, long r, long upper);

enum class StatementId {
    VanHamme_C2,  // C2 sum == p (mod p^3)
    Long_C2_p4,   // same, mod p^4, p > 3
    GW_gen,       // C2 sum to (p^r-1)/2 == p^r (mod p^{r+3})
    WangHu,       // ... == p^r + 7/6 p^{r+3} B_{p-3} (mod p^{r+4})
    VanHamme_G2,  // G2 sum == p G_p(1/2)G_p(1/4)/G_p(3/4) (mod p^3), p == 1 (4)
    He_G2_p4,     // same, mod p^4
    Swisher,      // G2 sum to (3p-1)/4 == -3p^2/2 * G_p(1/2)G_p(1/4)/G_p(3/4) (mod p^4)
    Cor13,        // G2 sum == prefactor*(p - p^3/16 H) + p^4 tail (mod p^5), both M
    Cor15,        // p == 3 (4) analogue with 3p, 27/16, 81 p^4 tail (mod p^5), both M
    Cor16,        // prefactor*(3p - ...) == (-1)^{(p-3)/4} 3/2 p^2 G_p(1/4)^2 G_p(1/2) (mod p^4)
    SunZW,        // sum 16^{k-1}/((2k-1)^3 binom(2k-2,k-1)^2) == 7/4 B_{p-3} (mod p)
    SunZH,        // H_{(p-1)/2}^{(2)} == 7/3 p B_{p-3} (mod p^2)
};

/// Instance check of one classical supercongruence at an odd prime p.
/// `power` is the exponent r of GW_gen / WangHu and ignored elsewhere.
/// Statements offering two summation limits are checked for both.
CongruenceReport verify_classical(StatementId id, long p, long power = 1);

/// ratfunc_eval(lhs_sum(params), 1) == the independently computed classical
/// sum, exactly.
bool q_to_1_crosscheck(const TheoremParams& params);

}  // namespace qsc
