#include "qsc/wz.hpp"

#include "qsc/unreduced.hpp"

namespace qsc {

namespace {

// k(k - 2m ± 1) is even (k and k - 2m ± 1 have opposite parities), so the
// total exponent is an integer; exact_div aborts loudly if that ever breaks.
long f_exponent(long m, long k, long d, long r) {
    return exact_div(d * k * (k - 2 * m - 1), 2) + (d - 2 * r) * m;
}

long g_exponent(long m, long k, long d, long r) {
    return exact_div(d * k * (k - 2 * m + 1), 2) + (d - 2 * r) * (m - 1);
}

RatFunc sign(long k) { return RatFunc(Rational(k % 2 == 0 ? 1 : -1)); }

Unreduced f_frac(const WZPoint& pt) {
    const auto& [m, k, d, r] = pt;
    Unreduced f;
    if (m < 0 || m - k < 0) return f;
    f.num = Poly::one();
    mul_rf(f, sign(k));
    mul_rf(f, q_power(f_exponent(m, k, d, r)));
    mul_rf(f, q_integer(2 * d * m + r));
    mul_rf(f, q_pochhammer(r, d, m).pow(3));
    mul_rf(f, q_pochhammer(r, d, m + k));
    div_rf(f, q_pochhammer(d, d, m).pow(3));
    div_rf(f, q_pochhammer(d, d, m - k));
    div_rf(f, q_pochhammer(r, d, k).pow(2));
    return f;
}

Unreduced g_frac(const WZPoint& pt) {
    const auto& [m, k, d, r] = pt;
    Unreduced f;
    if (m <= 0 || m - k < 0) return f;
    Poly one_minus_q({Rational(1), Rational(-1)});
    f.num = Poly::one();
    f.den = one_minus_q * one_minus_q;
    mul_rf(f, sign(k - 1));
    mul_rf(f, q_power(g_exponent(m, k, d, r)));
    mul_rf(f, q_pochhammer(r, d, m).pow(3));
    mul_rf(f, q_pochhammer(r, d, m + k - 1));
    div_rf(f, q_pochhammer(d, d, m - 1).pow(3));
    div_rf(f, q_pochhammer(d, d, m - k));
    div_rf(f, q_pochhammer(r, d, k).pow(2));
    return f;
}

}  // namespace

RatFunc wz_f(const WZPoint& pt) {
    const auto& [m, k, d, r] = pt;
    if (m < 0 || m - k < 0) return RatFunc();
    RatFunc num = q_integer(2 * d * m + r) * q_pochhammer(r, d, m).pow(3) *
                  q_pochhammer(r, d, m + k);
    RatFunc den = q_pochhammer(d, d, m).pow(3) * q_pochhammer(d, d, m - k) *
                  q_pochhammer(r, d, k).pow(2);
    return sign(k) * q_power(f_exponent(m, k, d, r)) * num / den;
}

RatFunc wz_g(const WZPoint& pt) {
    const auto& [m, k, d, r] = pt;
    if (m <= 0 || m - k < 0) return RatFunc();
    Poly one_minus_q({Rational(1), Rational(-1)});
    RatFunc num = q_pochhammer(r, d, m).pow(3) * q_pochhammer(r, d, m + k - 1);
    RatFunc den = RatFunc(one_minus_q).pow(2) * q_pochhammer(d, d, m - 1).pow(3) *
                  q_pochhammer(d, d, m - k) * q_pochhammer(r, d, k).pow(2);
    return sign(k - 1) * q_power(g_exponent(m, k, d, r)) * num / den;
}

bool verify_wz_recurrence(const WZPoint& pt) {
    const auto& [m, k, d, r] = pt;
    if (k < 1) throw std::invalid_argument("verify_wz_recurrence: k >= 1 required");
    Unreduced fa = f_frac({m, k - 1, d, r});
    mul_rf(fa, q_integer(d * k - d + r));
    Unreduced fb = f_frac({m, k, d, r});
    mul_rf(fb, q_integer(d * k - d + 2 * r));
    Unreduced rhs = g_frac({m + 1, k, d, r}) - g_frac({m, k, d, r});
    return unreduced_equal(fa - fb, rhs);
}

bool verify_telescoping(long n, long d, long r, Variant variant) {
    TheoremParams p{n, d, r,
                    variant == Variant::N ? Family::Theorem1 : Family::Theorem2,
                    MChoice::Short};
    p.validate();
    long upper = p.upper_limit();

    Unreduced lhs;
    for (long m = 0; m <= upper; ++m) lhs = lhs + f_frac({m, 0, d, r});

    Unreduced weight{Poly::one()};  // prod_{j=1}^{k-1} [dj-d+2r]/[dj-d+r]
    std::vector<Unreduced> rhs_terms;
    for (long k = 1; k <= upper; ++k) {
        Unreduced term = g_frac({upper + 1, k, d, r}) * weight;
        div_rf(term, q_integer(d * k - d + r));
        rhs_terms.push_back(std::move(term));
        mul_rf(weight, q_integer(d * k - d + 2 * r));
        div_rf(weight, q_integer(d * k - d + r));
    }
    rhs_terms.push_back(f_frac({upper, upper, d, r}) * weight);
    return unreduced_equal(lhs, unreduced_sum(rhs_terms));
}

bool verify_quartic_identity(long n, long kd) {
    RatFunc one(Rational(1));
    RatFunc lhs = (one - q_power(n - kd)) * (one - q_power(n + kd)) +
                  (one - q_power(kd)).pow(2) * q_power(n - kd) -
                  q_power(n) * (one - q_power(n)).pow(2) -
                  q_power(n) * (one - q_power(n)).pow(3);
    return lhs == (one - q_power(n)).pow(4);
}

CongruenceReport verify_lemma_F(Variant variant, long n, long d, long r) {
    TheoremParams p{n, d, r,
                    variant == Variant::N ? Family::Theorem1 : Family::Theorem2,
                    MChoice::Short};
    p.validate();
    long big_n = p.big_n();
    long upper = exact_div(big_n - r, d);

    RatFunc lhs = q_power(exact_div((big_n - r) * (d - big_n - 3 * r), 2 * d)) *
                  q_integer(2 * big_n - r) * q_pochhammer(r, d, 2 * upper) /
                  q_pochhammer(d, d, upper).pow(2);

    RatFunc qn = q_integer(big_n);
    Poly one_minus_q({Rational(1), Rational(-1)});
    RatFunc inner;
    for (long k = 1; k <= upper; ++k) inner += q_power(k * d) / q_integer(k * d).pow(2);
    RatFunc rhs = RatFunc(Rational(upper % 2 == 0 ? 1 : -1)) *
                  q_power(exact_div(r * (r - big_n), d)) *
                  (qn - (qn.pow(3) + qn.pow(4) * RatFunc(one_minus_q)) * inner);

    CongruenceReport rep = congruent(lhs, rhs, modulus_build(static_cast<unsigned long>(n), 4));
    rep.parameters = {{"n", n}, {"d", d}, {"r", r}, {"variant", variant == Variant::N ? 0 : 1}};
    return rep;
}

CongruenceReport verify_F_mid(long n, long d, long r) {
    TheoremParams p{n, d, r, Family::Theorem1, MChoice::Short};
    p.validate();
    long upper = exact_div(n - r, d);

    RatFunc lhs = q_pochhammer(r, d, upper) * q_pochhammer(n + d, d, upper) /
                  q_pochhammer(d, d, upper).pow(2);

    RatFunc qn = q_integer(n);
    Poly one_minus_q({Rational(1), Rational(-1)});
    RatFunc inner;
    for (long k = 1; k <= upper; ++k) inner += q_power(k * d) / q_integer(k * d).pow(2);
    RatFunc rhs = RatFunc(Rational(upper % 2 == 0 ? 1 : -1)) *
                  q_power(exact_div((n - r) * (n - d + r), 2 * d)) *
                  (RatFunc(Rational(1)) - (qn.pow(2) + qn.pow(3) * RatFunc(one_minus_q)) * inner);

    CongruenceReport rep = congruent(lhs, rhs, phi_only_modulus(static_cast<unsigned long>(n), 4));
    rep.parameters = {{"n", n}, {"d", d}, {"r", r}};
    return rep;
}

CongruenceReport verify_G_congruence(long n, long d, long r, long k, Variant variant) {
    TheoremParams p{n, d, r,
                    variant == Variant::N ? Family::Theorem1 : Family::Theorem2,
                    MChoice::Short};
    p.validate();
    long big_n = p.big_n();
    long upper = exact_div(big_n - r, d);
    if (k < 1 || k > upper)
        throw std::invalid_argument("verify_G_congruence: k out of range [1, " +
                                    std::to_string(upper) + "]");

    Unreduced lf = g_frac({upper + 1, k, d, r});
    for (long j = 1; j <= k - 1; ++j) {
        mul_rf(lf, q_integer(d * j - d + 2 * r));
        div_rf(lf, q_integer(d * j - d + r));
    }
    div_rf(lf, q_integer(d * k - d + r));

    Unreduced rf{Poly::one()};
    mul_rf(rf, q_power(exact_div((k * d - d - 2 * big_n + 2 * r) * (d - big_n), d)));
    mul_rf(rf, q_integer(big_n).pow(4));
    mul_rf(rf, q_pochhammer(d, d, k));
    mul_rf(rf, q_pochhammer(2 * r, d, k - 1));
    div_rf(rf, q_integer(d * k));
    div_rf(rf, q_integer(d * k - d + r).pow(2));
    div_rf(rf, q_pochhammer(r, d, k));
    div_rf(rf, q_pochhammer(r, d, k - 1));

    // lcm([n], Phi_n^5) = [n] Phi_n^4, verified as the two halves separately
    CongruenceReport phi5 =
        congruent_unreduced(lf.num * rf.den - rf.num * lf.den, lf.den * rf.den,
                            phi_only_modulus(static_cast<unsigned long>(n), 5));
    Modulus qn_mod = q_integer_modulus(static_cast<unsigned long>(n));
    CongruenceReport lhs0 = congruent_unreduced(lf.num, lf.den, qn_mod);
    CongruenceReport rhs0 = congruent_unreduced(rf.num, rf.den, qn_mod);

    CongruenceReport rep;
    rep.description = "G-term congruence (Phi^5 and [n] halves)";
    rep.parameters = {{"n", n}, {"d", d}, {"r", r}, {"k", k},
                      {"variant", variant == Variant::N ? 0 : 1}};
    rep.coprimality_ok = phi5.coprimality_ok && lhs0.coprimality_ok && rhs0.coprimality_ok;
    rep.holds = phi5.holds && lhs0.holds && rhs0.holds;
    if (!phi5.holds) rep.residue_witness = phi5.residue_witness;
    else if (!lhs0.holds) rep.residue_witness = lhs0.residue_witness;
    else if (!rhs0.holds) rep.residue_witness = rhs0.residue_witness;
    if (!phi5.coprimality_ok) rep.offending_gcd = phi5.offending_gcd;
    else if (!lhs0.coprimality_ok) rep.offending_gcd = lhs0.offending_gcd;
    else if (!rhs0.coprimality_ok) rep.offending_gcd = rhs0.offending_gcd;
    return rep;
}

bool verify_iden(long d, long r, long k) {
    if (k < 1) throw std::invalid_argument("verify_iden: k >= 1 required");
    RatFunc lhs = q_pochhammer(d, d, k) * q_pochhammer(2 * r, d, k - 1) /
                  (q_integer(d * k) * q_integer(d * k - d + r).pow(2) *
                   q_pochhammer(r, d, k) * q_pochhammer(r, d, k - 1));
    RatFunc rhs = q_pochhammer(d, d, k - 1) * q_pochhammer(2 * r, d, k - 1) /
                  (q_integer(d * k - d + r).pow(3) * q_pochhammer(r, d, k - 1).pow(2));
    return lhs == rhs;
}

}  // namespace qsc
