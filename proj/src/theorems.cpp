#include "qsc/theorems.hpp"

#include <algorithm>
#include <numeric>

#include "qsc/unreduced.hpp"

namespace qsc {

void TheoremParams::validate() const {
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (d < 1) throw std::invalid_argument("d must be positive");
    if (std::gcd(n, d) != 1) throw std::invalid_argument("gcd(n, d) must be 1");
    auto mod = [](long a, long m) { return ((a % m) + m) % m; };
    if (family == Family::Theorem1) {
        if (r < n + d - n * d || r > n)
            throw std::invalid_argument("Theorem1 needs n+d-nd <= r <= n");
        if (mod(n - r, d) != 0) throw std::invalid_argument("Theorem1 needs n == r (mod d)");
    } else {
        if (d < 2) throw std::invalid_argument("Theorem2 needs d >= 2");
        if (r < d - n || r > d * n - n)
            throw std::invalid_argument("Theorem2 needs d-n <= r <= dn-n");
        if (mod(n + r, d) != 0) throw std::invalid_argument("Theorem2 needs n == -r (mod d)");
    }
}

long TheoremParams::upper_limit() const {
    if (m_choice == MChoice::Long) return n - 1;
    return exact_div(big_n() - r, d);
}

RatFunc lhs_sum(const TheoremParams& p) {
    p.validate();
    long upper = p.upper_limit();
    RatFunc sum;
    for (long k = 0; k <= upper; ++k) {
        RatFunc term = q_integer(2 * p.d * k + p.r) *
                       (q_pochhammer(p.r, p.d, k) / q_pochhammer(p.d, p.d, k)).pow(4) *
                       q_power((p.d - 2 * p.r) * k);
        sum += term;
    }
    return sum;
}

namespace {

// Shared right-hand side of both theorems: Theorem1 with N = n,
// Theorem2 with N = (d-1)n.
RatFunc rhs_core(long big_n, long d, long r) {
    long upper = exact_div(big_n - r, d);
    RatFunc qn = q_integer(big_n);
    Poly one_minus_q({Rational(1), Rational(-1)});

    RatFunc inner_sum;
    for (long k = 1; k <= upper; ++k)
        inner_sum += q_power(k * d) / q_integer(k * d).pow(2);
    RatFunc bracket = qn - (qn.pow(3) + qn.pow(4) * RatFunc(one_minus_q)) * inner_sum;
    RatFunc prefactor = q_power(exact_div(r * (r - big_n), d)) *
                        q_pochhammer(2 * r, d, upper) / q_pochhammer(d, d, upper);

    RatFunc tail;
    for (long k = 1; k <= upper; ++k) {
        long expo = exact_div((k * d - d - 2 * big_n + 2 * r) * (d - big_n), d);
        tail += q_power(expo) * q_pochhammer(d, d, k - 1) * q_pochhammer(2 * r, d, k - 1) /
                (q_integer(d * k - d + r).pow(3) * q_pochhammer(r, d, k - 1).pow(2));
    }
    return prefactor * bracket + qn.pow(4) * tail;
}

}  // namespace

RatFunc rhs_theorem1(long n, long d, long r) {
    TheoremParams p{n, d, r, Family::Theorem1, MChoice::Short};
    p.validate();
    return rhs_core(n, d, r);
}

RatFunc rhs_theorem2(long n, long d, long r) {
    TheoremParams p{n, d, r, Family::Theorem2, MChoice::Short};
    p.validate();
    return rhs_core((d - 1) * n, d, r);
}

CongruenceReport verify_theorem(const TheoremParams& p) {
    return verify_theorem_at_power(p, 4);
}

CongruenceReport verify_theorem_at_power(const TheoremParams& p, unsigned long phi_power) {
    p.validate();
    RatFunc rhs = rhs_core(p.big_n(), p.d, p.r);
    CongruenceReport rep = congruent(lhs_sum(p), rhs,
                                     modulus_build(static_cast<unsigned long>(p.n), phi_power));
    rep.parameters = {{"n", p.n},
                      {"d", p.d},
                      {"r", p.r},
                      {"family", p.family == Family::Theorem1 ? 1 : 2},
                      {"long_m", p.m_choice == MChoice::Long ? 1 : 0},
                      {"phi_power", static_cast<long>(phi_power)}};
    return rep;
}

namespace {

RatFunc prior_rhs(PriorId id, long n, long d, long r) {
    switch (id) {
        case PriorId::GW_C2: {
            // q^{(1-n)/2}[n] + (n^2-1)(1-q)^2/24 * q^{(1-n)/2}[n]^3
            Poly one_minus_q({Rational(1), Rational(-1)});
            RatFunc qn = q_integer(n);
            Rational c(n * n - 1, 24);
            c.canonicalize();
            return q_power(exact_div(1 - n, 2)) *
                   (qn + RatFunc(one_minus_q).pow(2) * RatFunc(c) * qn.pow(3));
        }
        case PriorId::LW_G2: {
            long upper = exact_div(n - 1, 4);
            Poly one_minus_q({Rational(1), Rational(-1)});
            Rational c(n * n - 1, 24);
            c.canonicalize();
            RatFunc qn = q_integer(n);
            RatFunc inner = RatFunc(Rational(1)) + qn.pow(2) * RatFunc(c) * RatFunc(one_minus_q).pow(2);
            for (long k = 1; k <= upper; ++k)
                inner += qn.pow(2) * q_power(4 * k - 2) / q_integer(4 * k - 2).pow(2);
            return q_pochhammer(2, 4, upper) / q_pochhammer(4, 4, upper) * qn *
                   q_power(exact_div(1 - n, 4)) * inner;
        }
        case PriorId::Guo_uni: {
            long upper = exact_div(n - r, d);
            RatFunc qn = q_integer(n);
            RatFunc inner;
            for (long j = 1; j <= upper; ++j)
                inner += q_power(d * j) / q_integer(d * j).pow(2);
            return qn * q_power(exact_div(r * (r - n), d)) * q_pochhammer(2 * r, d, upper) /
                   q_pochhammer(d, d, upper) * (RatFunc(Rational(1)) - qn.pow(2) * inner);
        }
        case PriorId::GS: {
            if (d == 2) return RatFunc();
            long big_n = (d - 1) * n;
            long upper = exact_div(big_n - r, d);
            return q_power(exact_div(r * (n + r - d * n), d)) *
                   q_pochhammer(2 * r, d, upper) / q_pochhammer(d, d, upper) *
                   q_integer(big_n);
        }
    }
    throw std::logic_error("unreachable");
}

TheoremParams prior_theorem_params(PriorId id, const PriorParams& p) {
    Family family =
        (id == PriorId::GS) ? Family::Theorem2 : Family::Theorem1;
    return TheoremParams{p.n, p.d, p.r, family, p.m_choice};
}

void validate_prior(PriorId id, const PriorParams& p) {
    switch (id) {
        case PriorId::GW_C2:
            if (p.n < 1 || p.n % 2 == 0)
                throw std::invalid_argument("GW_C2 needs a positive odd n");
            if (p.d != 2 || p.r != 1)
                throw std::invalid_argument("GW_C2 is the d=2, r=1 case");
            break;
        case PriorId::LW_G2:
            if (p.n < 5 || p.n % 4 != 1)
                throw std::invalid_argument("LW_G2 needs n == 1 (mod 4), n >= 5");
            if (p.d != 4 || p.r != 1)
                throw std::invalid_argument("LW_G2 is the d=4, r=1 case");
            break;
        case PriorId::Guo_uni: {
            if (p.d < 2) throw std::invalid_argument("Guo_uni needs d >= 2");
            if (std::gcd(p.d, p.r) != 1) throw std::invalid_argument("Guo_uni needs gcd(d, r) = 1");
            if (p.n - p.r < 0 || p.n - p.r > p.d * p.n - p.d)
                throw std::invalid_argument("Guo_uni needs 0 <= n-r <= dn-d");
            if (((p.n - p.r) % p.d) != 0)
                throw std::invalid_argument("Guo_uni needs n == r (mod d)");
            break;
        }
        case PriorId::GS:
            if (p.d < 2) throw std::invalid_argument("GS needs d >= 2");
            if (p.r > p.d - 2) throw std::invalid_argument("GS needs r <= d-2");
            if (p.n < p.d - p.r) throw std::invalid_argument("GS needs n >= d-r");
            if (std::gcd(p.d, p.r) != 1) throw std::invalid_argument("GS needs gcd(d, r) = 1");
            if (((p.n + p.r) % p.d + p.d) % p.d != 0)
                throw std::invalid_argument("GS needs n == -r (mod d)");
            break;
    }
}

}  // namespace

CongruenceReport verify_prior(PriorId id, const PriorParams& p) {
    validate_prior(id, p);
    TheoremParams tp = prior_theorem_params(id, p);
    tp.validate();
    Modulus m3 = modulus_build(static_cast<unsigned long>(p.n), 3);
    RatFunc prior = prior_rhs(id, p.n, p.d, p.r);
    CongruenceReport rep = congruent(lhs_sum(tp), prior, m3);
    if (rep.ok()) {
        // refinement consistency: the stronger Theorem RHS must agree with
        // the prior RHS at the weaker modulus
        RatFunc refined = tp.family == Family::Theorem1 ? rhs_theorem1(p.n, p.d, p.r)
                                                        : rhs_theorem2(p.n, p.d, p.r);
        CongruenceReport cross = congruent(refined, prior, m3);
        rep.holds = cross.holds;
        rep.coprimality_ok = cross.coprimality_ok;
        if (!cross.holds) rep.residue_witness = cross.residue_witness;
        if (!cross.coprimality_ok) rep.offending_gcd = cross.offending_gcd;
    }
    rep.parameters = {{"n", p.n},
                      {"d", p.d},
                      {"r", p.r},
                      {"prior", static_cast<long>(id)},
                      {"long_m", p.m_choice == MChoice::Long ? 1 : 0}};
    return rep;
}

CongruenceReport verify_lemma_vanishing(VanishingLemma which, long n, long d, long r,
                                        const Rational& a_val, const Rational& b_val) {
    TheoremParams tp{n, d, r,
                     which == VanishingLemma::Lemma21 ? Family::Theorem1 : Family::Theorem2,
                     MChoice::Short};
    tp.validate();
    if (a_val == 0 || b_val == 0)
        throw std::invalid_argument("verify_lemma_vanishing: a, b must be nonzero");

    long x = tp.big_n();  // exponent of the specialization point q^x
    long start = exact_div(x - r + d, d);

    // The summand is assembled with cleared scalar denominators so every
    // polynomial keeps integer coefficients: (c q^a; q^d)_k scaled by a
    // rational c becomes den(c)^{-k} prod_j (den(c) - num(c) q^{a+jd}), with
    // negative q-exponents factored out into a global power of q (the
    // modulus has nonzero constant term, so a power of q is invertible and
    // the shift does not affect the congruence).
    struct Cleared {
        Poly poly = Poly::one();
        Rational scale = 1;  // den(c)^{-k}
        long q_exp = 0;
    };
    auto cleared_poch = [](const Rational& c, long a, long d_, long k) {
        Cleared out;
        Rational cden(c.get_den()), cnum(c.get_num());
        for (long j = 0; j < k; ++j) {
            long e = a + j * d_;
            if (e >= 0) {
                out.poly = out.poly * (Poly(cden) - Poly::monomial(static_cast<unsigned long>(e), cnum));
            } else {
                out.poly = out.poly * (Poly::monomial(static_cast<unsigned long>(-e), cden) - Poly(cnum));
                out.q_exp += e;
            }
            out.scale /= cden;
        }
        return out;
    };

    struct TermParts {
        Poly num, den;
        Rational scalar;
        long q_exp;
    };
    std::vector<TermParts> parts;
    long min_exp = 0;
    for (long k = start; k <= n - 1; ++k) {
        Cleared na = cleared_poch(a_val, r, d, k);
        Cleared nb = cleared_poch(1 / a_val, r, d, k);
        Cleared nc = cleared_poch(1 / b_val, r, d, k);
        Cleared np = cleared_poch(Rational(1), r, d, k);
        Cleared da = cleared_poch(a_val, d, d, k);
        Cleared db = cleared_poch(1 / a_val, d, d, k);
        Cleared dc = cleared_poch(b_val, d, d, k);
        Cleared dp = cleared_poch(Rational(1), d, d, k);

        TermParts t;
        t.num = q_integer(2 * d * k + r).num() * na.poly * nb.poly * nc.poly * np.poly;
        t.den = da.poly * db.poly * dc.poly * dp.poly;
        t.scalar = pow_rational(b_val, k) * na.scale * nb.scale * nc.scale * np.scale /
                   (da.scale * db.scale * dc.scale * dp.scale);
        t.q_exp = (d - 2 * r) * k + na.q_exp + nb.q_exp + nc.q_exp + np.q_exp -
                  da.q_exp - db.q_exp - dc.q_exp - dp.q_exp;
        min_exp = std::min(min_exp, t.q_exp);
        parts.push_back(std::move(t));
    }

    Unreduced sum;
    for (auto& t : parts) {
        Unreduced term{t.num * Rational(t.scalar.get_num()), t.den * Rational(t.scalar.get_den())};
        term.num = term.num * Poly::monomial(static_cast<unsigned long>(t.q_exp - min_exp));
        sum = sum + term;
    }

    auto clear_linear = [x](const Rational& c_lead, const Rational& c_const) {
        // c_const - c_lead q^x, with the two rationals brought to integers
        Rational lcm_den(Int(1));
        mpz_lcm(lcm_den.get_num_mpz_t(), c_lead.get_den_mpz_t(), c_const.get_den_mpz_t());
        return Poly(c_const * lcm_den) -
               Poly::monomial(static_cast<unsigned long>(x), c_lead * lcm_den);
    };
    Modulus qn_mod = q_integer_modulus(static_cast<unsigned long>(n));
    std::vector<Poly> factors;
    for (const auto& [t, e] : qn_mod.factors) {
        (void)e;
        factors.push_back(cyclotomic(t));
    }
    factors.push_back(clear_linear(a_val, Rational(1)));   // 1 - a q^x
    factors.push_back(clear_linear(Rational(1), a_val));   // a - q^x
    factors.push_back(clear_linear(Rational(1), b_val));   // b - q^x
    Poly modulus = qn_mod.expanded * cyclotomic(static_cast<unsigned long>(n)) *
                   factors[factors.size() - 3] * factors[factors.size() - 2] * factors.back();

    CongruenceReport rep = congruent_unreduced(
        sum.num, sum.den, factors, modulus,
        "vanishing lemma at a=" + Rational(a_val).get_str() + ", b=" + Rational(b_val).get_str());
    if (!rep.coprimality_ok)
        throw std::invalid_argument(
            "verify_lemma_vanishing: specialization a=" + Rational(a_val).get_str() +
            ", b=" + Rational(b_val).get_str() +
            " shares a factor with the modulus; pick different sample values");
    rep.parameters = {{"n", n}, {"d", d}, {"r", r}};
    return rep;
}

std::vector<TheoremParams> enumerate_valid_params(Family family, long n_max, long d_max,
                                                  long r_window) {
    if (n_max < 1 || d_max < 1 || r_window < 0)
        throw std::invalid_argument("enumerate_valid_params: bounds must be positive");
    std::vector<TheoremParams> out;
    for (long n = 3; n <= n_max; ++n) {
        for (long d = 2; d <= d_max; ++d) {
            if (std::gcd(n, d) != 1) continue;
            for (long r = -r_window; r <= std::max(r_window, n); ++r) {
                if (r > r_window && r != n) continue;
                TheoremParams p{n, d, r, family, MChoice::Short};
                try {
                    p.validate();
                } catch (const std::invalid_argument&) {
                    continue;
                }
                out.push_back(p);
            }
        }
    }
    return out;
}

}  // namespace qsc
