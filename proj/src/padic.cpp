#include "qsc/padic.hpp"

#include <mutex>
#include <vector>

namespace qsc {

namespace {

Int pow_of(const Int& p, unsigned long k) { return pow_int(p, k); }

Int mod_inverse(const Int& a, const Int& m) {
    Int r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw std::domain_error("mod_inverse: not invertible");
    return r;
}

long int_valuation(Int v, const Int& p) {
    if (v == 0) throw std::domain_error("valuation of zero");
    long c = 0;
    Int r, q;
    for (;;) {
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
        if (r != 0) return c;
        v = q;
        ++c;
    }
}

}  // namespace

long padic_valuation(const Rational& x, const Int& p) {
    if (x == 0) throw std::domain_error("padic_valuation of zero");
    return int_valuation(x.get_num(), p) - int_valuation(x.get_den(), p);
}

PAdicValue PAdicValue::from_rational(const Rational& x, const Int& p, unsigned long precision) {
    PAdicValue v;
    v.p = p;
    v.precision = precision;
    if (x == 0) return v;
    v.is_zero = false;
    long vn = int_valuation(x.get_num(), p);
    long vd = int_valuation(x.get_den(), p);
    v.valuation = vn - vd;
    Int pk = pow_of(p, precision);
    Int num = x.get_num() / pow_of(p, static_cast<unsigned long>(vn));
    Int den = x.get_den() / pow_of(p, static_cast<unsigned long>(vd));
    Int u = (num % pk) * mod_inverse(den % pk, pk) % pk;
    if (u < 0) u += pk;
    v.unit_residue = u;
    return v;
}

PAdicValue PAdicValue::operator*(const PAdicValue& o) const {
    if (p != o.p) throw std::invalid_argument("PAdicValue: mixed primes");
    PAdicValue r;
    r.p = p;
    r.precision = std::min(precision, o.precision);
    if (is_zero || o.is_zero) return r;
    r.is_zero = false;
    r.valuation = valuation + o.valuation;
    Int pk = pow_of(p, r.precision);
    r.unit_residue = unit_residue * o.unit_residue % pk;
    return r;
}

PAdicValue PAdicValue::operator+(const PAdicValue& o) const {
    if (p != o.p) throw std::invalid_argument("PAdicValue: mixed primes");
    if (is_zero) return o;
    if (o.is_zero) return *this;
    long v0 = std::min(valuation, o.valuation);
    // known modulo p^{v0 + prec_avail}
    long prec_avail = static_cast<long>(std::min(precision, o.precision));
    Int pk = pow_of(p, static_cast<unsigned long>(prec_avail));
    Int s = unit_residue * pow_of(p, static_cast<unsigned long>(valuation - v0)) +
            o.unit_residue * pow_of(p, static_cast<unsigned long>(o.valuation - v0));
    s %= pk;
    PAdicValue r;
    r.p = p;
    if (s == 0) {
        // cancellation below the known precision; representable only as zero
        r.precision = static_cast<unsigned long>(prec_avail);
        return r;
    }
    long shift = int_valuation(s, p);
    r.is_zero = false;
    r.valuation = v0 + shift;
    r.precision = static_cast<unsigned long>(prec_avail - shift);
    Int pk2 = pow_of(p, r.precision);
    r.unit_residue = (s / pow_of(p, static_cast<unsigned long>(shift))) % pk2;
    return r;
}

bool PAdicValue::congruent_to(const PAdicValue& o) const {
    if (p != o.p) return false;
    if (is_zero || o.is_zero) return is_zero == o.is_zero;
    if (valuation != o.valuation) return false;
    unsigned long prec = std::min(precision, o.precision);
    Int pk = pow_of(p, prec);
    return unit_residue % pk == o.unit_residue % pk;
}

bool congruent_mod_prime_power(const Rational& x, const Rational& y, const Int& p,
                               unsigned long m) {
    Rational diff = x - y;
    if (diff == 0) return true;
    if (int_valuation(diff.get_den(), p) != 0)
        throw std::domain_error("congruence mod p^m not well posed: denominator of " +
                                diff.get_str() + " divisible by " + p.get_str());
    return int_valuation(diff.get_num(), p) >= static_cast<long>(m);
}

Rational bernoulli(unsigned long m) {
    if (m > 200) throw std::invalid_argument("bernoulli: desk bound m <= 200 exceeded");
    static std::mutex mu;
    static std::vector<Rational> memo{Rational(1)};
    std::lock_guard<std::mutex> lock(mu);
    while (memo.size() <= m) {
        unsigned long n = memo.size();
        Rational s(0);
        for (unsigned long j = 0; j < n; ++j) s += Rational(binomial(n + 1, j)) * memo[j];
        s /= Rational(-(Int(n) + 1));
        memo.push_back(s);
    }
    return memo[m];
}

Rational harmonic(unsigned long m, unsigned long order) {
    Rational s(0);
    for (unsigned long k = 1; k <= m; ++k) s += Rational(1) / Rational(pow_int(Int(k), order));
    return s;
}

Rational rising_factorial(const Rational& a, unsigned long k) {
    Rational r(1);
    for (unsigned long j = 0; j < k; ++j) r *= a + Rational(Int(j));
    return r;
}

PAdicValue padic_gamma(const Rational& x, const Int& p, unsigned long k) {
    if (p < 3 || mpz_probab_prime_p(p.get_mpz_t(), 30) == 0)
        throw std::invalid_argument("padic_gamma: p must be an odd prime");
    Int x_den = x.get_den();
    if (mpz_divisible_p(x_den.get_mpz_t(), p.get_mpz_t()))
        throw std::domain_error("padic_gamma: " + x.get_str() + " is not a " + p.get_str() +
                                "-adic integer");
    Int pk = pow_of(p, k);
    if (pk > 10000000) throw std::invalid_argument("padic_gamma: desk bound p^k <= 10^7 exceeded");

    Int n_rep = (x.get_num() % pk) * mod_inverse(x.get_den() % pk, pk) % pk;
    if (n_rep < 0) n_rep += pk;
    unsigned long n = n_rep.get_ui();

    Int prod = 1;
    unsigned long pl = p.get_ui();
    for (unsigned long j = 1; j < n; ++j) {
        if (j % pl == 0) continue;
        prod = prod * j % pk;
    }
    if (n % 2 == 1) prod = pk - prod;  // (-1)^n
    if (prod == pk) prod = 0;
    // Gamma_p values are units, so valuation 0 and full precision k.
    PAdicValue v;
    v.p = p;
    v.precision = k;
    v.valuation = 0;
    v.unit_residue = prod;
    v.is_zero = false;
    return v;
}

Rational classical_lhs_general(long d, long r, long upper) {
    if (d < 1) throw std::invalid_argument("classical_lhs_general: d >= 1");
    Rational base(r, d);
    base.canonicalize();
    Rational s(0);
    for (long k = 0; k <= upper; ++k) {
        Rational ratio = rising_factorial(base, static_cast<unsigned long>(k)) /
                         rising_factorial(Rational(1), static_cast<unsigned long>(k));
        s += Rational(2 * d * k + r) * pow_rational(ratio, 4);
    }
    return s;
}

namespace {

long short_upper(SeriesId series, long p, long power) {
    if (series == SeriesId::C2Family) {
        Int pr = pow_int(Int(p), static_cast<unsigned long>(power));
        return Int((pr - 1) / 2).get_si();
    }
    return p % 4 == 1 ? (p - 1) / 4 : (3 * p - 1) / 4;
}

}  // namespace

Rational classical_sum(SeriesId series, long p, long power, UpperChoice upper) {
    if (p < 3 || power < 1) throw std::invalid_argument("classical_sum: bad parameters");
    long m;
    if (upper == UpperChoice::Short) {
        m = short_upper(series, p, power);
    } else {
        m = series == SeriesId::C2Family
                ? static_cast<long>(pow_int(Int(p), static_cast<unsigned long>(power)).get_si()) - 1
                : p - 1;
    }
    return series == SeriesId::C2Family ? classical_lhs_general(2, 1, m)
                                        : classical_lhs_general(4, 1, m);
}

namespace {

void require_prime(long p) {
    Int pz(p);
    if (p < 3 || p % 2 == 0 || mpz_probab_prime_p(pz.get_mpz_t(), 30) == 0)
        throw std::invalid_argument("p = " + std::to_string(p) + " is not an odd prime");
}

void require_residue(long p, long mod4, const char* who) {
    if (p % 4 != mod4)
        throw std::invalid_argument(std::string(who) + " needs p == " + std::to_string(mod4) +
                                    " (mod 4), got p = " + std::to_string(p));
}

Rational gamma_ratio_g2(long p, unsigned long prec) {
    // Gamma_p(1/2) Gamma_p(1/4) / Gamma_p(3/4) as an integer residue mod p^prec
    Int pz(p);
    Int pk = pow_of(pz, prec);
    Int v = padic_gamma(Rational(1, 2), pz, prec).unit_residue *
            padic_gamma(Rational(1, 4), pz, prec).unit_residue % pk;
    v = v * mod_inverse(padic_gamma(Rational(3, 4), pz, prec).unit_residue, pk) % pk;
    return Rational(v);
}

// Corollary-style RHS shared by Cor13/Cor15: prefactor*(c1 p - c2 p^3 H) + c3 p^4 tail
Rational corollary_rhs(long p, long upper) {
    Rational half(1, 2), quarter(1, 4);
    unsigned long lu = static_cast<unsigned long>(upper);
    Rational prefactor = rising_factorial(half, lu) / rising_factorial(Rational(1), lu);
    bool mod1 = p % 4 == 1;
    long c1 = mod1 ? 1 : 3;
    Rational c2 = mod1 ? Rational(1, 16) : Rational(27, 16);
    long c3 = mod1 ? 1 : 81;
    Rational pr(p);
    Rational rhs = prefactor * (Rational(c1) * pr - c2 * pr * pr * pr * harmonic(lu, 2));
    Rational tail(0);
    for (long k = 1; k <= upper; ++k) {
        unsigned long ku = static_cast<unsigned long>(k - 1);
        Rational den = Rational(pow_int(Int(4 * k - 3), 3)) *
                       pow_rational(rising_factorial(quarter, ku), 2);
        tail += rising_factorial(Rational(1), ku) * rising_factorial(half, ku) / den;
    }
    return rhs + Rational(c3) * pr * pr * pr * pr * tail;
}

CongruenceReport make_padic_report(bool holds, const Rational& residue, long p, long power,
                                   const std::string& desc) {
    CongruenceReport rep;
    rep.description = desc;
    rep.coprimality_ok = true;
    rep.holds = holds;
    if (!holds) rep.residue_witness = Poly(residue);
    rep.parameters = {{"p", p}, {"power", power}};
    return rep;
}

}  // namespace

CongruenceReport verify_classical(StatementId id, long p, long power) {
    require_prime(p);
    Int pz(p);
    auto check = [&](const Rational& lhs, const Rational& rhs, unsigned long m,
                     const std::string& desc) {
        bool holds = congruent_mod_prime_power(lhs, rhs, pz, m);
        Rational residue = lhs - rhs;
        return make_padic_report(holds, residue, p, power, desc);
    };

    switch (id) {
        case StatementId::VanHamme_C2:
            return check(classical_sum(SeriesId::C2Family, p, 1, UpperChoice::Short), Rational(p),
                         3, "VanHamme C2 mod p^3");
        case StatementId::Long_C2_p4:
            if (p <= 3) throw std::invalid_argument("Long_C2_p4 needs p > 3");
            return check(classical_sum(SeriesId::C2Family, p, 1, UpperChoice::Short), Rational(p),
                         4, "Long's C2 strengthening mod p^4");
        case StatementId::GW_gen: {
            if (power < 1) throw std::invalid_argument("GW_gen needs power >= 1");
            Rational pr(pow_int(pz, static_cast<unsigned long>(power)));
            return check(classical_sum(SeriesId::C2Family, p, power, UpperChoice::Short), pr,
                         static_cast<unsigned long>(power) + 3, "C2 at prime powers");
        }
        case StatementId::WangHu: {
            if (p < 5) throw std::invalid_argument("WangHu needs p >= 5");
            Rational pr(pow_int(pz, static_cast<unsigned long>(power)));
            Rational rhs = pr + Rational(7, 6) *
                                    Rational(pow_int(pz, static_cast<unsigned long>(power) + 3)) *
                                    bernoulli(static_cast<unsigned long>(p - 3));
            return check(classical_sum(SeriesId::C2Family, p, power, UpperChoice::Short), rhs,
                         static_cast<unsigned long>(power) + 4, "Wang-Hu Bernoulli refinement");
        }
        case StatementId::VanHamme_G2:
        case StatementId::He_G2_p4: {
            require_residue(p, 1, "G2");
            unsigned long m = id == StatementId::VanHamme_G2 ? 3 : 4;
            Rational rhs = Rational(p) * gamma_ratio_g2(p, m);
            return check(classical_sum(SeriesId::G2Family, p, 1, UpperChoice::Short), rhs, m,
                         m == 3 ? "VanHamme G2 mod p^3" : "He's G2 strengthening mod p^4");
        }
        case StatementId::Swisher: {
            require_residue(p, 3, "Swisher");
            if (p < 5) throw std::invalid_argument("Swisher needs p >= 5");
            Rational rhs = Rational(-3, 2) * Rational(p) * Rational(p) * gamma_ratio_g2(p, 4);
            return check(classical_sum(SeriesId::G2Family, p, 1, UpperChoice::Short), rhs, 4,
                         "Swisher's G2 extension mod p^4");
        }
        case StatementId::Cor13:
        case StatementId::Cor15: {
            bool is13 = id == StatementId::Cor13;
            require_residue(p, is13 ? 1 : 3, is13 ? "Cor13" : "Cor15");
            long upper = short_upper(SeriesId::G2Family, p, 1);
            Rational rhs = corollary_rhs(p, upper);
            for (UpperChoice u : {UpperChoice::Short, UpperChoice::Long}) {
                auto rep = check(classical_sum(SeriesId::G2Family, p, 1, u), rhs, 5,
                                 is13 ? "G2 mod p^5 (p == 1 mod 4)" : "G2 mod p^5 (p == 3 mod 4)");
                if (!rep.holds || u == UpperChoice::Long) return rep;
            }
            throw std::logic_error("unreachable");
        }
        case StatementId::Cor16: {
            require_residue(p, 3, "Cor16");
            if (p < 5) throw std::invalid_argument("Cor16 needs p >= 5");
            long upper = (3 * p - 1) / 4;
            unsigned long lu = static_cast<unsigned long>(upper);
            Rational lhs = rising_factorial(Rational(1, 2), lu) /
                           rising_factorial(Rational(1), lu) *
                           (Rational(3 * p) -
                            Rational(27, 16) * Rational(p) * Rational(p) * Rational(p) *
                                harmonic(lu, 2));
            Int pk = pow_of(pz, 4);
            Int g = padic_gamma(Rational(1, 4), pz, 4).unit_residue;
            g = g * g % pk;
            g = g * padic_gamma(Rational(1, 2), pz, 4).unit_residue % pk;
            long sgn = ((p - 3) / 4) % 2 == 0 ? 1 : -1;
            Rational rhs = Rational(sgn * 3, 2) * Rational(p) * Rational(p) * Rational(g);
            return check(lhs, rhs, 4, "Gamma_p form of the G2 prefactor mod p^4");
        }
        case StatementId::SunZW: {
            if (p < 5) throw std::invalid_argument("SunZW needs p >= 5");
            Rational s(0);
            for (long k = 1; k <= (p - 1) / 2; ++k) {
                Int den = pow_int(Int(2 * k - 1), 3) *
                          pow_int(binomial(static_cast<unsigned long>(2 * k - 2),
                                           static_cast<unsigned long>(k - 1)),
                                  2);
                s += Rational(pow_int(Int(16), static_cast<unsigned long>(k - 1))) / Rational(den);
            }
            Rational rhs = Rational(7, 4) * bernoulli(static_cast<unsigned long>(p - 3));
            return check(s, rhs, 1, "central binomial sum vs Bernoulli mod p");
        }
        case StatementId::SunZH: {
            if (p < 5) throw std::invalid_argument("SunZH needs p >= 5");
            Rational lhs = harmonic(static_cast<unsigned long>((p - 1) / 2), 2);
            Rational rhs =
                Rational(7, 3) * Rational(p) * bernoulli(static_cast<unsigned long>(p - 3));
            return check(lhs, rhs, 2, "harmonic number vs Bernoulli mod p^2");
        }
    }
    throw std::logic_error("unreachable");
}

bool q_to_1_crosscheck(const TheoremParams& params) {
    params.validate();
    Rational q_side = lhs_sum(params).eval(Rational(1));
    Rational classical = classical_lhs_general(params.d, params.r, params.upper_limit());
    return q_side == classical;
}

}  // namespace qsc
