#include "qsc/poly.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

namespace qsc {

Poly::Poly(const Rational& c) {
    if (c != 0) coeffs_.push_back(c);
}

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(unsigned long e, const Rational& c) {
    if (c == 0) return Poly();
    Poly p;
    p.coeffs_.assign(e + 1, Rational(0));
    p.coeffs_[e] = c;
    return p;
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

bool Poly::is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

std::optional<long> Poly::degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return static_cast<long>(coeffs_.size()) - 1;
}

const Rational& Poly::leading() const {
    if (coeffs_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return coeffs_.back();
}

Rational Poly::coeff(unsigned long i) const {
    if (i >= coeffs_.size()) return Rational(0);
    return coeffs_[i];
}

bool Poly::is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

bool Poly::has_integer_coeffs() const {
    for (const auto& c : coeffs_)
        if (c.get_den() != 1) return false;
    return true;
}

Poly Poly::operator-() const {
    Poly r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

namespace {

// Kronecker substitution: pack nonnegative integer coefficients into one big
// integer at 2^(64*words_per_coeff), multiply with GMP's subquadratic
// algorithms, unpack. Signs are handled by splitting into positive and
// negative parts.
struct PackedPoly {
    std::vector<uint64_t> pos, neg;  // word buffers, little-endian
    size_t n = 0;
};

void pack_into(std::vector<uint64_t>& buf, size_t idx, size_t w, const mpz_class& c) {
    size_t count = 0;
    mpz_export(buf.data() + idx * w, &count, -1, sizeof(uint64_t), 0, 0, c.get_mpz_t());
}

mpz_class from_words(const std::vector<uint64_t>& buf) {
    mpz_class r;
    if (!buf.empty())
        mpz_import(r.get_mpz_t(), buf.size(), -1, sizeof(uint64_t), 0, 0, buf.data());
    return r;
}

// coefficients of a*b where both packed buffers encode nonneg coefficients
void unpack_addsub(std::vector<mpz_class>& acc, const mpz_class& prod, size_t w, bool add) {
    if (prod == 0) return;
    size_t words = (mpz_sizeinbase(prod.get_mpz_t(), 2) + 63) / 64;
    std::vector<uint64_t> buf(words, 0);
    size_t count = 0;
    mpz_export(buf.data(), &count, -1, sizeof(uint64_t), 0, 0, prod.get_mpz_t());
    size_t ncoeff = (words + w - 1) / w;
    mpz_class c;
    for (size_t k = 0; k < ncoeff && k < acc.size(); ++k) {
        size_t lo = k * w, hi = std::min(lo + w, words);
        mpz_import(c.get_mpz_t(), hi - lo, -1, sizeof(uint64_t), 0, 0, buf.data() + lo);
        if (add)
            acc[k] += c;
        else
            acc[k] -= c;
    }
}

std::vector<Int> kronecker_multiply(const std::vector<Rational>& a,
                                    const std::vector<Rational>& b) {
    size_t max_bits = 0;
    for (const auto& c : a)
        max_bits = std::max(max_bits, mpz_sizeinbase(c.get_num_mpz_t(), 2));
    size_t max_bits_b = 0;
    for (const auto& c : b)
        max_bits_b = std::max(max_bits_b, mpz_sizeinbase(c.get_num_mpz_t(), 2));
    size_t nmin = std::min(a.size(), b.size());
    size_t need = max_bits + max_bits_b + 64 - __builtin_clzll(nmin) + 1;
    size_t w = (need + 63) / 64;

    auto split = [&](const std::vector<Rational>& v) {
        PackedPoly p;
        p.n = v.size();
        p.pos.assign(v.size() * w, 0);
        p.neg.assign(v.size() * w, 0);
        mpz_class tmp;
        for (size_t i = 0; i < v.size(); ++i) {
            int s = sgn(v[i]);
            if (s == 0) continue;
            tmp = s > 0 ? v[i].get_num() : mpz_class(-v[i].get_num());
            pack_into(s > 0 ? p.pos : p.neg, i, w, tmp);
        }
        return p;
    };
    PackedPoly pa = split(a), pb = split(b);
    mpz_class ap = from_words(pa.pos), an = from_words(pa.neg);
    mpz_class bp = from_words(pb.pos), bn = from_words(pb.neg);

    std::vector<mpz_class> acc(a.size() + b.size() - 1, mpz_class(0));
    unpack_addsub(acc, ap * bp, w, true);
    unpack_addsub(acc, an * bn, w, true);
    unpack_addsub(acc, ap * bn, w, false);
    unpack_addsub(acc, an * bp, w, false);
    return acc;
}

}  // namespace

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    Poly r;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    // All-integer inputs take an mpz path; mpq addmul spends most of its time
    // canonicalizing denominators that are known to be 1.
    if (a.has_integer_coeffs() && b.has_integer_coeffs()) {
        if (std::min(a.coeffs_.size(), b.coeffs_.size()) >= 32) {
            auto acc = kronecker_multiply(a.coeffs_, b.coeffs_);
            for (size_t k = 0; k < acc.size(); ++k) r.coeffs_[k] = Rational(acc[k]);
            r.trim();
            return r;
        }
        std::vector<Int> acc(r.coeffs_.size(), Int(0));
        for (size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            const Int& ai = a.coeffs_[i].get_num();
            for (size_t j = 0; j < b.coeffs_.size(); ++j) {
                if (b.coeffs_[j] == 0) continue;
                mpz_addmul(acc[i + j].get_mpz_t(), ai.get_mpz_t(),
                           b.coeffs_[j].get_num_mpz_t());
            }
        }
        for (size_t k = 0; k < acc.size(); ++k) r.coeffs_[k] = Rational(acc[k]);
    } else {
        for (size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (size_t j = 0; j < b.coeffs_.size(); ++j) {
                if (b.coeffs_[j] == 0) continue;
                r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
    }
    r.trim();
    return r;
}

Poly Poly::operator*(const Rational& c) const {
    if (c == 0) return Poly();
    Poly r(*this);
    for (auto& x : r.coeffs_) x *= c;
    return r;
}

Rational Poly::eval(const Rational& x) const {
    Rational r(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + *it;
    return r;
}

Poly Poly::monic() const {
    if (is_zero() || leading() == 1) return *this;
    return *this * (1 / leading());
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = coeffs_.size(); i-- > 0;) {
        if (coeffs_[i] == 0) continue;
        Rational c = coeffs_[i];
        if (!first) {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        if (i == 0 || c != 1) os << c.get_str();
        if (i > 0) {
            if (c != 1) os << "*";
            os << "q";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::pair<Poly, Poly> poly_divrem(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("poly_divrem: division by zero polynomial");
    if (a.is_zero() || *a.degree() < *b.degree()) return {Poly(), a};
    long db = *b.degree();
    // Integer operands dominate the call profile (cyclotomics, [n], expanded
    // moduli, q-factorial products); try all-integer synthetic division and
    // fall back to rational arithmetic only when a leading step is inexact
    // (which for leading coefficient +-1 never happens).
    if (a.has_integer_coeffs() && b.has_integer_coeffs()) {
        const Int& lead = b.leading().get_num();
        const bool unit_lead = lead == 1 || lead == -1;
        const bool neg_lead = lead == -1;
        std::vector<Int> irem(a.coeffs().size());
        for (size_t i = 0; i < irem.size(); ++i) irem[i] = a.coeffs()[i].get_num();
        std::vector<Int> iquot(irem.size() - db, Int(0));
        bool exact = true;
        for (long i = static_cast<long>(irem.size()) - 1; i >= db; --i) {
            if (irem[i] == 0) continue;
            Int& f = iquot[i - db];
            if (unit_lead) {
                f = std::move(irem[i]);
                if (neg_lead) mpz_neg(f.get_mpz_t(), f.get_mpz_t());
            } else {
                if (!mpz_divisible_p(irem[i].get_mpz_t(), lead.get_mpz_t())) {
                    exact = false;
                    break;
                }
                mpz_divexact(f.get_mpz_t(), irem[i].get_mpz_t(), lead.get_mpz_t());
            }
            irem[i] = 0;
            for (long j = 0; j < db; ++j)
                mpz_submul(irem[i - db + j].get_mpz_t(), f.get_mpz_t(),
                           b.coeffs()[j].get_num_mpz_t());
        }
        if (exact) {
            irem.resize(db);
            std::vector<Rational> q(iquot.size()), r(irem.size());
            for (size_t i = 0; i < iquot.size(); ++i) q[i] = Rational(iquot[i]);
            for (size_t i = 0; i < irem.size(); ++i) r[i] = Rational(irem[i]);
            return {Poly(std::move(q)), Poly(std::move(r))};
        }
    }
    std::vector<Rational> rem(a.coeffs());
    std::vector<Rational> quot(rem.size() - db, Rational(0));
    Rational inv_lead = 1 / b.leading();
    for (long i = static_cast<long>(rem.size()) - 1; i >= db; --i) {
        if (rem[i] == 0) continue;
        Rational f = rem[i] * inv_lead;
        quot[i - db] = f;
        rem[i] = 0;
        for (long j = 0; j < db; ++j) rem[i - db + j] -= f * b.coeffs()[j];
    }
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly poly_divexact(const Poly& a, const Poly& b) {
    auto [q, r] = poly_divrem(a, b);
    if (!r.is_zero())
        throw std::logic_error("poly_divexact: inexact division, remainder " + r.str());
    return q;
}

// ---------------------------------------------------------------------------
// GCD. Rational inputs are scaled to primitive integer polynomials; the gcd
// itself is found from images modulo word-size primes with CRT lifting and a
// trial-division certificate, so coefficient growth of a plain Euclidean
// remainder sequence never happens.
// ---------------------------------------------------------------------------

namespace {

using ZVec = std::vector<Int>;

ZVec to_primitive_integer(const Poly& p) {
    Int den_lcm(1);
    for (const auto& c : p.coeffs()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    ZVec v(p.coeffs().size());
    Int content(0);
    for (size_t i = 0; i < v.size(); ++i) {
        Rational c = p.coeffs()[i] * Rational(den_lcm);
        v[i] = c.get_num();  // denominator is now 1
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v[i].get_mpz_t());
    }
    if (content > 1)
        for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), content.get_mpz_t());
    return v;
}

ZVec primitive_part(ZVec v) {
    Int content(0);
    for (const auto& x : v) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), x.get_mpz_t());
    if (content > 1)
        for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), content.get_mpz_t());
    return v;
}

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

uint64_t powmod(uint64_t a, uint64_t e, uint64_t m) {
    uint64_t r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

std::vector<uint64_t> reduce_mod(const ZVec& v, uint64_t p) {
    std::vector<uint64_t> r(v.size());
    Int t;
    for (size_t i = 0; i < v.size(); ++i) {
        t = v[i] % Int(p);
        if (t < 0) t += Int(p);
        r[i] = t.get_ui();
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

// Monic gcd of two polynomials over Z/p, p prime. Inputs trimmed, not both empty.
std::vector<uint64_t> gcd_mod(std::vector<uint64_t> a, std::vector<uint64_t> b, uint64_t p) {
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        // a <- a mod b
        size_t db = b.size() - 1;
        uint64_t inv = powmod(b.back(), p - 2, p);
        for (size_t i = a.size(); i-- > db;) {
            uint64_t f = mulmod(a[i], inv, p);
            if (f == 0) continue;
            for (size_t j = 0; j <= db; ++j) {
                uint64_t sub = mulmod(f, b[j], p);
                size_t idx = i - db + j;
                a[idx] = (a[idx] >= sub) ? a[idx] - sub : a[idx] + p - sub;
            }
        }
        if (a.size() > db) a.resize(db);
        while (!a.empty() && a.back() == 0) a.pop_back();
        std::swap(a, b);
    }
    // make monic
    if (!a.empty() && a.back() != 1) {
        uint64_t inv = powmod(a.back(), p - 2, p);
        for (auto& x : a) x = mulmod(x, inv, p);
    }
    return a;
}

// Divisibility of the images mod p; false means definitely not divisible
// over Q (when p does not kill the leading coefficient of b).
bool divides_mod_p(const ZVec& b, const ZVec& a, uint64_t p) {
    auto bm = reduce_mod(b, p);
    if (bm.size() != b.size()) return true;  // leading coeff vanished: inconclusive
    auto am = reduce_mod(a, p);
    size_t db = bm.size() - 1;
    if (am.size() <= db) return am.empty();
    uint64_t inv = powmod(bm.back(), p - 2, p);
    for (size_t i = am.size(); i-- > db;) {
        if (am[i] == 0) continue;
        uint64_t f = mulmod(am[i], inv, p);
        am[i] = 0;
        for (size_t j = 0; j < db; ++j) {
            uint64_t sub = mulmod(f, bm[j], p);
            size_t idx = i - db + j;
            am[idx] = (am[idx] >= sub) ? am[idx] - sub : am[idx] + p - sub;
        }
    }
    for (size_t i = 0; i < db; ++i)
        if (am[i] != 0) return false;
    return true;
}

// Remainder-zero test of a by b over Q, with b primitive integer. Most calls
// are rejections, so a single word-prime image is checked first; a candidate
// that survives is certified by all-integer synthetic division — b primitive
// means a rational quotient is automatically integral (Gauss's lemma), so the
// division can abort at the first inexact leading step.
bool divides_over_q(const ZVec& b, const ZVec& a) {
    static const uint64_t probe_p = [] {
        Int s = Int(1) << 62;
        mpz_nextprime(s.get_mpz_t(), s.get_mpz_t());
        return s.get_ui();
    }();
    if (mpz_fdiv_ui(b.back().get_mpz_t(), probe_p) != 0 &&
        !divides_mod_p(b, a, probe_p))
        return false;

    ZVec rem(a);
    long db = static_cast<long>(b.size()) - 1;
    Int f;
    for (long i = static_cast<long>(rem.size()) - 1; i >= db; --i) {
        if (rem[i] == 0) continue;
        if (!mpz_divisible_p(rem[i].get_mpz_t(), b.back().get_mpz_t())) return false;
        mpz_divexact(f.get_mpz_t(), rem[i].get_mpz_t(), b.back().get_mpz_t());
        rem[i] = 0;
        for (long j = 0; j < db; ++j)
            mpz_submul(rem[i - db + j].get_mpz_t(), f.get_mpz_t(), b[j].get_mpz_t());
    }
    for (long i = 0; i < db && i < static_cast<long>(rem.size()); ++i)
        if (rem[i] != 0) return false;
    return true;
}

uint64_t next_gcd_prime(Int& state) {
    mpz_nextprime(state.get_mpz_t(), state.get_mpz_t());
    return state.get_ui();
}

Poly poly_from_z(const ZVec& v) {
    std::vector<Rational> c(v.size());
    for (size_t i = 0; i < v.size(); ++i) c[i] = Rational(v[i]);
    return Poly(std::move(c));
}

}  // namespace

Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("poly_gcd(0, 0)");
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (*a.degree() == 0 || *b.degree() == 0) return Poly::one();

    ZVec pa = to_primitive_integer(a);
    ZVec pb = to_primitive_integer(b);

    Int lc_gcd;
    mpz_gcd(lc_gcd.get_mpz_t(), pa.back().get_mpz_t(), pb.back().get_mpz_t());

    Int prime_state = Int(1) << 62;
    ZVec acc;          // CRT accumulator, coefficients in symmetric range
    Int acc_mod(0);    // product of primes used so far
    size_t acc_deg = SIZE_MAX;

    for (int iter = 0; iter < 200; ++iter) {
        uint64_t p = next_gcd_prime(prime_state);
        if (pa.back() % Int(p) == 0 || pb.back() % Int(p) == 0) continue;
        auto gp = gcd_mod(reduce_mod(pa, p), reduce_mod(pb, p), p);
        if (gp.size() == 1) return Poly::one();
        if (gp.size() > acc_deg) continue;  // unlucky prime, discard
        // Scale the monic image by gcd of the leading coefficients so the
        // lifted integer coefficients are reproducible across primes.
        uint64_t scale = mpz_fdiv_ui(lc_gcd.get_mpz_t(), p);
        std::vector<uint64_t> img(gp.size());
        for (size_t i = 0; i < gp.size(); ++i) img[i] = mulmod(gp[i], scale, p);

        if (gp.size() < acc_deg) {  // previous primes were unlucky; restart
            acc_deg = gp.size();
            acc.assign(gp.size(), Int(0));
            acc_mod = 1;
        }
        // CRT combine acc (mod acc_mod) with img (mod p)
        Int pz(p), inv_mod;
        if (acc_mod == 1) {
            for (size_t i = 0; i < acc.size(); ++i) acc[i] = Int(img[i]);
            acc_mod = pz;
        } else {
            mpz_invert(inv_mod.get_mpz_t(), acc_mod.get_mpz_t(), pz.get_mpz_t());
            for (size_t i = 0; i < acc.size(); ++i) {
                Int diff = (Int(img[i]) - acc[i]) % pz;
                if (diff < 0) diff += pz;
                acc[i] += acc_mod * ((diff * inv_mod) % pz);
            }
            acc_mod *= pz;
        }
        // symmetric lift and certificate
        ZVec cand(acc.size());
        Int half = acc_mod / 2;
        for (size_t i = 0; i < acc.size(); ++i) {
            Int c = acc[i] % acc_mod;
            if (c < 0) c += acc_mod;
            if (c > half) c -= acc_mod;
            cand[i] = c;
        }
        if (cand.back() == 0) continue;  // lift not stabilized yet
        cand = primitive_part(std::move(cand));
        if (divides_over_q(cand, pa) && divides_over_q(cand, pb))
            return poly_from_z(cand).monic();
    }
    throw std::runtime_error("poly_gcd: modular lifting failed to stabilize");
}

}  // namespace qsc
