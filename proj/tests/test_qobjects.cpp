#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "qsc/qobjects.hpp"

using namespace qsc;

namespace {
Poly P(std::vector<long> c) {
    std::vector<Rational> r;
    for (long x : c) r.emplace_back(x);
    return Poly(std::move(r));
}
}  // namespace

TEST_CASE("small cyclotomic polynomials") {
    CHECK(cyclotomic(1) == P({-1, 1}));
    CHECK(cyclotomic(2) == P({1, 1}));
    CHECK(cyclotomic(3) == P({1, 1, 1}));
    CHECK(cyclotomic(4) == P({1, 0, 1}));
    CHECK(cyclotomic(6) == P({1, -1, 1}));
    CHECK(cyclotomic(12) == P({1, 0, -1, 0, 1}));
    // first index with a coefficient outside {-1,0,1} is 105
    CHECK(cyclotomic(105).coeff(7) == -2);
}

TEST_CASE("cyclotomic product identity") {
    for (unsigned long n = 1; n <= 40; ++n) {
        Poly prod = Poly::one();
        for (unsigned long d = 1; d <= n; ++d)
            if (n % d == 0) prod *= cyclotomic(d);
        Poly qn_minus_1 = Poly::monomial(n) - Poly::one();
        CHECK(prod == qn_minus_1);
        CHECK(cyclotomic(n).degree() == static_cast<long>(euler_totient(n)));
    }
}

TEST_CASE("totient") {
    CHECK(euler_totient(1) == 1);
    CHECK(euler_totient(12) == 4);
    CHECK(euler_totient(13) == 12);
    CHECK(euler_totient(36) == 12);
}

TEST_CASE("q-integers") {
    CHECK(q_integer(0).is_zero());
    CHECK(q_integer(1) == RatFunc(Rational(1)));
    CHECK(q_integer(4) == RatFunc(P({1, 1, 1, 1})));
    // [-2] = -(1+q)/q^2
    CHECK(q_integer(-2) == RatFunc(-P({1, 1}), Poly::monomial(2)));
    Poly one_minus_q = P({1, -1});
    for (long m = -6; m <= 6; ++m)
        CHECK(q_integer(m) * RatFunc(one_minus_q) ==
              RatFunc(Rational(1)) - q_power(m));
}

TEST_CASE("q-pochhammer") {
    CHECK(q_pochhammer(1, 2, 0) == RatFunc(Rational(1)));
    // (q;q)_3 = (1-q)(1-q^2)(1-q^3)
    CHECK(q_pochhammer(1, 1, 3) ==
          RatFunc(P({1, -1}) * P({1, 0, -1}) * P({1, 0, 0, -1})));
    for (long a : {-3L, -1L, 1L, 2L})
        for (long d : {1L, 2L, 3L})
            for (long k = 0; k <= 4; ++k)
                CHECK(q_pochhammer(a, d, k + 1) ==
                      q_pochhammer(a, d, k) *
                          (RatFunc(Rational(1)) - q_power(a + k * d)));
}

TEST_CASE("scaled q-pochhammer") {
    for (long k = 0; k <= 4; ++k)
        CHECK(scaled_q_pochhammer(Rational(1), 1, 2, k) == q_pochhammer(1, 2, k));
    // (1 - 2q)(1 - 2q^3)
    CHECK(scaled_q_pochhammer(Rational(2), 1, 2, 2) ==
          RatFunc(P({1, -2}) * (Poly::one() - Poly::monomial(3, Rational(2)))));
}

TEST_CASE("modulus construction") {
    Modulus m = modulus_build(5, 4);
    Poly expect = q_integer(5).to_poly();
    for (int i = 0; i < 4; ++i) expect *= cyclotomic(5);
    CHECK(m.expanded == expect);
    // [5] = Phi_5, so factors merge into a single (5, 5) entry
    REQUIRE(m.factors.size() == 1);
    CHECK(m.factors[0].first == 5);
    CHECK(m.factors[0].second == 5);

    Modulus m6 = modulus_build(6, 2);
    Poly expect6 = q_integer(6).to_poly() * cyclotomic(6) * cyclotomic(6);
    CHECK(m6.expanded == expect6);

    CHECK(phi_only_modulus(7, 3).expanded ==
          cyclotomic(7) * cyclotomic(7) * cyclotomic(7));
    CHECK(q_integer_modulus(9).expanded == q_integer(9).to_poly());

    // n = 1: [1] = 1, the modulus degenerates to (q-1)^power
    CHECK(modulus_build(1, 2).expanded == cyclotomic(1) * cyclotomic(1));
}
