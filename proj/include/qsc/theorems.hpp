#pragma once

#include <vector>

#include "qsc/congruence.hpp"

namespace qsc {

enum class Family { Theorem1, Theorem2 };
enum class MChoice { Short, Long };

/// Parameter triple of the two main q-supercongruences, plus the choice of
/// summation limit. Theorem1: n+d-nd <= r <= n and n == r (mod d).
/// Theorem2: d >= 2, d-n <= r <= dn-n and n == -r (mod d). Both require
/// gcd(n, d) = 1.
struct TheoremParams {
    long n = 3;
    long d = 2;
    long r = 1;
    Family family = Family::Theorem1;
    MChoice m_choice = MChoice::Short;

    /// Throws std::invalid_argument naming the violated constraint.
    void validate() const;

    /// n for Theorem1, (d-1)n for Theorem2.
    long big_n() const { return family == Family::Theorem1 ? n : (d - 1) * n; }
    /// (big_n - r)/d for Short, n-1 for Long.
    long upper_limit() const;
};

/// sum_{k=0}^{M} [2dk+r] (q^r;q^d)_k^4 / (q^d;q^d)_k^4 * q^{(d-2r)k}.
RatFunc lhs_sum(const TheoremParams& p);

RatFunc rhs_theorem1(long n, long d, long r);
RatFunc rhs_theorem2(long n, long d, long r);

/// Full pipeline: lhs_sum against the family RHS modulo [n] Phi_n(q)^4.
CongruenceReport verify_theorem(const TheoremParams& p);

/// Same check against [n] Phi_n(q)^{4+extra_power} (sharpness probing).
CongruenceReport verify_theorem_at_power(const TheoremParams& p, unsigned long phi_power);

enum class PriorId { GW_C2, LW_G2, Guo_uni, GS };

struct PriorParams {
    long n = 3;
    long d = 2;
    long r = 1;
    MChoice m_choice = MChoice::Short;
};

/// Verifies one of the previously known modulo-[n]Phi_n(q)^3 results and
/// cross-checks that the corresponding Theorem RHS refines it (congruent to
/// it modulo the same weaker modulus).
CongruenceReport verify_prior(PriorId id, const PriorParams& p);

enum class VanishingLemma { Lemma21, Lemma22 };

/// The boundary-tail sums of the two vanishing lemmas, with the symbolic
/// (a, b) parameters replaced by rational sample values; checked to be 0
/// modulo [n] Phi_n(q) (1 - a q^X)(a - q^X)(b - q^X), X = n or (d-1)n.
CongruenceReport verify_lemma_vanishing(VanishingLemma which, long n, long d, long r,
                                        const Rational& a_val, const Rational& b_val);

/// All valid parameter tuples with 3 <= n <= n_max, 2 <= d <= d_max and
/// r in [-r_window, r_window] plus the boundary case r = n, both MChoice
/// values omitted (Short only); deterministic (n, d, r) order.
std::vector<TheoremParams> enumerate_valid_params(Family family, long n_max, long d_max,
                                                  long r_window);

}  // namespace qsc
