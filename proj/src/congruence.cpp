#include "qsc/congruence.hpp"

#include <numeric>

namespace qsc {

namespace {

CongruenceReport check_divisibility(const RatFunc& diff, const Poly& modulus,
                                    const Poly& den_gcd, const std::string& description) {
    CongruenceReport rep;
    rep.description = description;
    if (!den_gcd.is_one()) {
        rep.coprimality_ok = false;
        rep.holds = false;
        rep.offending_gcd = den_gcd;
        return rep;
    }
    rep.coprimality_ok = true;
    auto [quot, rem] = poly_divrem(diff.num(), modulus);
    (void)quot;
    rep.residue_witness = rem;
    rep.holds = rem.is_zero();
    return rep;
}

}  // namespace

CongruenceReport congruent(const RatFunc& a, const RatFunc& b, const Modulus& m,
                           const std::string& description) {
    RatFunc diff = a - b;
    // per-factor rejection first; coprime to every Phi_t implies coprime to
    // the full product
    Poly den_gcd = Poly::one();
    for (const auto& [t, e] : m.factors) {
        (void)e;
        Poly g = poly_gcd(diff.den(), cyclotomic(t));
        if (!g.is_one()) {
            den_gcd = g;
            break;
        }
    }
    return check_divisibility(diff, m.expanded, den_gcd,
                              description.empty() ? m.description : description);
}

CongruenceReport congruent(const RatFunc& a, const RatFunc& b, const Poly& modulus,
                           const std::string& description) {
    if (modulus.is_zero()) throw std::domain_error("congruent: zero modulus");
    RatFunc diff = a - b;
    Poly g = diff.den().is_one() ? Poly::one() : poly_gcd(diff.den(), modulus);
    return check_divisibility(diff, modulus, g, description);
}

CongruenceReport congruent_unreduced(Poly num, Poly den, const std::vector<Poly>& factors,
                                     const Poly& expanded, const std::string& description) {
    if (den.is_zero()) throw std::domain_error("congruent_unreduced: zero denominator");
    CongruenceReport rep;
    rep.description = description;
    if (num.is_zero()) {
        rep.coprimality_ok = true;
        rep.holds = true;
        return rep;
    }
    for (const Poly& factor : factors) {
        long mult_den = 0;
        while (true) {
            auto [quot, rem] = poly_divrem(den, factor);
            if (!rem.is_zero()) break;
            den = std::move(quot);
            ++mult_den;
        }
        long cancelled = 0;
        while (cancelled < mult_den) {
            auto [quot, rem] = poly_divrem(num, factor);
            if (!rem.is_zero()) break;
            num = std::move(quot);
            ++cancelled;
        }
        if (cancelled < mult_den) {
            rep.coprimality_ok = false;
            rep.holds = false;
            rep.offending_gcd = factor;
            return rep;
        }
    }
    rep.coprimality_ok = true;
    auto [quot, rem] = poly_divrem(num, expanded);
    (void)quot;
    rep.residue_witness = rem;
    rep.holds = rem.is_zero();
    return rep;
}

CongruenceReport congruent_unreduced(Poly num, Poly den, const Modulus& m,
                                     const std::string& description) {
    std::vector<Poly> factors;
    factors.reserve(m.factors.size());
    for (const auto& [t, e] : m.factors) {
        (void)e;
        factors.push_back(cyclotomic(t));
    }
    return congruent_unreduced(std::move(num), std::move(den), factors, m.expanded,
                               description.empty() ? m.description : description);
}

namespace {

CoprimalityReport denominator_report(const RatFunc& fraction, long n, long k) {
    CoprimalityReport rep;
    rep.k = k;
    Poly one_minus_qn = Poly::one() - Poly::monomial(static_cast<unsigned long>(n));
    rep.gcd_with_modulus = fraction.den().is_one()
                               ? Poly::one()
                               : poly_gcd(fraction.den(), one_minus_qn);
    rep.coprime = *rep.gcd_with_modulus.degree() == 0;
    return rep;
}

long lemma_upper(long n, long d, long r, Variant variant) {
    long big_n = variant == Variant::N ? n : (d - 1) * n;
    return exact_div(big_n - r, d);
}

}  // namespace

CoprimalityReport lemma_coprimality_prefactor(long n, long d, long r, Variant variant) {
    if (n < 1 || d < 1) throw std::invalid_argument("lemma_coprimality_prefactor: n, d >= 1");
    if (variant == Variant::N && (n - r) % d != 0)
        throw std::invalid_argument("lemma_coprimality_prefactor: need n == r (mod d)");
    if (variant == Variant::DN && (n + r) % d != 0)
        throw std::invalid_argument("lemma_coprimality_prefactor: need d | (n + r)");
    long len = lemma_upper(n, d, r, variant);
    if (len < 0) throw std::invalid_argument("lemma_coprimality_prefactor: r too large");
    RatFunc frac = q_pochhammer(r, d, len) / q_pochhammer(d, d, len);
    return denominator_report(frac, n, 0);
}

CoprimalityReport lemma_coprimality_gk(long n, long d, long r, long k, Variant variant) {
    long upper = lemma_upper(n, d, r, variant);
    if (k < 1 || k > upper)
        throw std::invalid_argument("lemma_coprimality_gk: k out of range [1, " +
                                    std::to_string(upper) + "]");
    long big_n = variant == Variant::N ? n : (d - 1) * n;
    RatFunc num = (RatFunc(Rational(1)) - q_power(big_n)) * q_pochhammer(d, d, k - 1) *
                  q_pochhammer(2 * r, d, k - 1);
    RatFunc den = q_pochhammer(r, d, k) * q_pochhammer(r, d, k - 1);
    return denominator_report(num / den, n, k);
}

CoprimalityReport lemma_coprimality_qint(long n, long d, long k, Variant variant) {
    if (std::gcd(n, d) != 1) throw std::invalid_argument("lemma_coprimality_qint: gcd(n,d) != 1");
    if (k < 1) throw std::invalid_argument("lemma_coprimality_qint: k out of range");
    long big_n = variant == Variant::N ? n : (d - 1) * n;
    RatFunc frac = (RatFunc(Rational(1)) - q_power(big_n)) /
                   (RatFunc(Rational(1)) - q_power(d * k));
    return denominator_report(frac, n, k);
}

}  // namespace qsc
