#pragma once

#include <map>
#include <string>

#include "qsc/qobjects.hpp"

namespace qsc {

/// Outcome of one congruence check. A failed denominator-coprimality test
/// (coprimality_ok = false) means the congruence is not even well posed for
/// this modulus; callers must treat it as an error, never as holds = false.
struct CongruenceReport {
    std::string description;
    std::map<std::string, long> parameters;
    bool holds = false;
    bool coprimality_ok = false;
    Poly residue_witness;  // reduced numerator of a - b when the check fails
    Poly offending_gcd;    // nonconstant gcd(den(a-b), modulus) when not coprime

    bool ok() const { return holds && coprimality_ok; }
};

struct CoprimalityReport {
    long k = 0;
    Poly gcd_with_modulus;
    bool coprime = false;
};

enum class Variant { N, DN };

/// Decide a == b (mod m). Denominator coprimality is checked factor by
/// factor before the expanded divisibility test.
CongruenceReport congruent(const RatFunc& a, const RatFunc& b, const Modulus& m,
                           const std::string& description = "");

/// Same check against an arbitrary polynomial modulus (used for the
/// specialized a,b moduli of the vanishing lemmas).
CongruenceReport congruent(const RatFunc& a, const RatFunc& b, const Poly& modulus,
                           const std::string& description = "");

/// Decide num/den == 0 (mod m) for a fraction that is NOT in lowest terms.
/// Modulus factors are cancelled by multiplicity instead of reducing the
/// fraction, which avoids a large-degree gcd; coprimality semantics match
/// congruent() (a factor survives in the reduced denominator exactly when its
/// multiplicity in den exceeds its multiplicity in num).
CongruenceReport congruent_unreduced(Poly num, Poly den, const Modulus& m,
                                     const std::string& description = "");

/// congruent_unreduced against an explicitly factored modulus: `factors`
/// must list every irreducible factor of `expanded`.
CongruenceReport congruent_unreduced(Poly num, Poly den, const std::vector<Poly>& factors,
                                     const Poly& expanded,
                                     const std::string& description = "");

/// Reduced denominator of (q^r;q^d)_L / (q^d;q^d)_L against 1 - q^n, where
/// L = (n-r)/d for Variant::N and ((d-1)n-r)/d for Variant::DN.
CoprimalityReport lemma_coprimality_prefactor(long n, long d, long r,
                                              Variant variant = Variant::N);

/// Reduced denominator of
/// (1-q^N)(q^d;q^d)_{k-1}(q^{2r};q^d)_{k-1} / ((q^r;q^d)_k (q^r;q^d)_{k-1})
/// against 1 - q^n, with N = n or (d-1)n per variant.
CoprimalityReport lemma_coprimality_gk(long n, long d, long r, long k, Variant variant);

/// Reduced denominator of (1-q^N)/(1-q^{dk}) against 1 - q^n.
CoprimalityReport lemma_coprimality_qint(long n, long d, long k, Variant variant);

}  // namespace qsc
