#include "qsc/qobjects.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace qsc {

namespace {

std::vector<unsigned long> divisors(unsigned long n) {
    std::vector<unsigned long> d;
    for (unsigned long i = 1; i * i <= n; ++i) {
        if (n % i) continue;
        d.push_back(i);
        if (i != n / i) d.push_back(n / i);
    }
    std::sort(d.begin(), d.end());
    return d;
}

Poly q_pow_minus_one(unsigned long t) {
    std::vector<Rational> c(t + 1, Rational(0));
    c[0] = -1;
    c[t] = 1;
    return Poly(std::move(c));
}

std::mutex cyclo_mutex;
std::map<unsigned long, Poly> cyclo_memo;

}  // namespace

unsigned long euler_totient(unsigned long t) {
    unsigned long result = t;
    for (unsigned long p = 2; p * p <= t; ++p) {
        if (t % p) continue;
        while (t % p == 0) t /= p;
        result -= result / p;
    }
    if (t > 1) result -= result / t;
    return result;
}

Poly cyclotomic(unsigned long t) {
    if (t == 0) throw std::invalid_argument("cyclotomic(0)");
    {
        std::lock_guard<std::mutex> lock(cyclo_mutex);
        auto it = cyclo_memo.find(t);
        if (it != cyclo_memo.end()) return it->second;
    }
    Poly result;
    if (t == 1) {
        result = Poly({Rational(-1), Rational(1)});  // q - 1
    } else {
        Poly p = q_pow_minus_one(t);
        for (unsigned long s : divisors(t))
            if (s < t) p = poly_divexact(p, cyclotomic(s));
        result = p;
    }
    std::lock_guard<std::mutex> lock(cyclo_mutex);
    cyclo_memo.emplace(t, result);
    return result;
}

RatFunc q_integer(long m) {
    if (m == 0) return RatFunc();
    if (m > 0) {
        // 1 + q + ... + q^{m-1}
        std::vector<Rational> c(static_cast<size_t>(m), Rational(1));
        return RatFunc(Poly(std::move(c)));
    }
    Poly one_minus_q({Rational(1), Rational(-1)});
    return (RatFunc(Poly::one()) - q_power(m)) / RatFunc(one_minus_q);
}

RatFunc q_pochhammer(const QPochhammerSpec& spec) {
    if (spec.step < 1) throw std::invalid_argument("q_pochhammer: step must be >= 1");
    if (spec.length < 0) throw std::invalid_argument("q_pochhammer: negative length");
    RatFunc r(Rational(1));
    for (long j = 0; j < spec.length; ++j) {
        long e = spec.base_exponent + j * spec.step;
        r *= RatFunc(Rational(1)) - q_power(e);
        if (r.is_zero()) break;  // exponent hit 0, whole product vanishes
    }
    return r;
}

RatFunc scaled_q_pochhammer(const Rational& c, long a, long d, long k) {
    if (d < 1) throw std::invalid_argument("scaled_q_pochhammer: step must be >= 1");
    if (k < 0) throw std::invalid_argument("scaled_q_pochhammer: negative length");
    RatFunc r(Rational(1));
    for (long j = 0; j < k; ++j) {
        r *= RatFunc(Rational(1)) - RatFunc(c) * q_power(a + j * d);
        if (r.is_zero()) break;
    }
    return r;
}

namespace {

Modulus from_factors(std::vector<std::pair<unsigned long, unsigned long>> factors,
                     std::string description) {
    Modulus m;
    m.factors = std::move(factors);
    m.description = std::move(description);
    Poly e = Poly::one();
    for (const auto& [t, pw] : m.factors)
        for (unsigned long i = 0; i < pw; ++i) e *= cyclotomic(t);
    m.expanded = e;
    return m;
}

}  // namespace

Modulus modulus_build(unsigned long n, unsigned long phi_power) {
    if (n < 1) throw std::invalid_argument("modulus_build: n must be >= 1");
    std::vector<std::pair<unsigned long, unsigned long>> f;
    // [n] = prod_{t | n, t > 1} Phi_t; merge the Phi_n factor with phi_power.
    for (unsigned long t : divisors(n)) {
        if (t == 1) continue;
        f.emplace_back(t, t == n ? phi_power + 1 : 1);
    }
    if (n == 1) f.emplace_back(1, phi_power);  // [1] = 1
    return from_factors(std::move(f), "[" + std::to_string(n) + "]*Phi_" +
                                          std::to_string(n) + "^" + std::to_string(phi_power));
}

Modulus phi_only_modulus(unsigned long n, unsigned long power) {
    if (n < 1) throw std::invalid_argument("phi_only_modulus: n must be >= 1");
    return from_factors({{n, power}},
                        "Phi_" + std::to_string(n) + "^" + std::to_string(power));
}

Modulus q_integer_modulus(unsigned long n) {
    if (n < 2) throw std::invalid_argument("q_integer_modulus: n must be >= 2");
    std::vector<std::pair<unsigned long, unsigned long>> f;
    for (unsigned long t : divisors(n))
        if (t > 1) f.emplace_back(t, 1);
    return from_factors(std::move(f), "[" + std::to_string(n) + "]");
}

}  // namespace qsc
