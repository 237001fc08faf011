#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "qsc/padic.hpp"

using namespace qsc;

TEST_CASE("valuations") {
    CHECK(padic_valuation(Rational(50), 5) == 2);
    CHECK(padic_valuation(Rational(8, 9), 3) == -2);
    CHECK(padic_valuation(Rational(7), 5) == 0);
}

TEST_CASE("congruence of rationals modulo prime powers") {
    CHECK(congruent_mod_prime_power(Rational(1, 2), Rational(3), 5, 1));
    CHECK(!congruent_mod_prime_power(Rational(1, 2), Rational(3), 5, 2));
    CHECK(congruent_mod_prime_power(Rational(1, 2), Rational(13), 5, 2));
    CHECK(congruent_mod_prime_power(Rational(0), Rational(125), 5, 3));
    CHECK_THROWS_AS(congruent_mod_prime_power(Rational(1, 5), Rational(0), 5, 1),
                    std::domain_error);
}

TEST_CASE("tracked p-adic values") {
    auto x = PAdicValue::from_rational(Rational(3, 4), 5, 4);
    auto y = PAdicValue::from_rational(Rational(7, 2), 5, 4);
    auto prod = x * y;
    CHECK(prod.congruent_to(PAdicValue::from_rational(Rational(21, 8), 5, 4)));
    auto sum = x + y;
    CHECK(sum.congruent_to(PAdicValue::from_rational(Rational(17, 4), 5, 4)));
    auto z = PAdicValue::from_rational(Rational(50), 5, 3);
    CHECK(z.valuation == 2);
    CHECK(!z.is_zero);
    CHECK(PAdicValue::from_rational(Rational(0), 5, 3).is_zero);
}

TEST_CASE("Bernoulli numbers") {
    CHECK(bernoulli(0) == Rational(1));
    CHECK(bernoulli(1) == Rational(-1, 2));
    CHECK(bernoulli(2) == Rational(1, 6));
    CHECK(bernoulli(3) == Rational(0));
    CHECK(bernoulli(4) == Rational(-1, 30));
    CHECK(bernoulli(12) == Rational(-691, 2730));
}

TEST_CASE("harmonic sums and rising factorials") {
    CHECK(harmonic(4, 1) == Rational(25, 12));
    CHECK(harmonic(3, 2) == Rational(49, 36));
    CHECK(harmonic(0, 1) == Rational(0));
    CHECK(rising_factorial(Rational(1, 2), 3) == Rational(15, 8));
    CHECK(rising_factorial(Rational(1, 4), 0) == Rational(1));
}

TEST_CASE("p-adic Gamma") {
    // Gamma_p(x+1) = -x Gamma_p(x) when x is a p-adic unit
    for (long p : {5L, 7L, 13L}) {
        Rational x(1, 2);
        auto lhs = padic_gamma(x + 1, p, 3);
        auto rhs = PAdicValue::from_rational(-x, p, 3) * padic_gamma(x, p, 3);
        CHECK(lhs.congruent_to(rhs));
    }
    // Gamma_p(1/2)^2 = (-1)^{(p+1)/2}
    for (long p : {5L, 7L}) {
        auto g = padic_gamma(Rational(1, 2), p, 3);
        auto sq = g * g;
        long sign = ((p + 1) / 2) % 2 == 0 ? 1 : -1;
        CHECK(sq.congruent_to(PAdicValue::from_rational(Rational(sign), p, 3)));
    }
}

TEST_CASE("classical sums") {
    // the generic q -> 1 summand specializes to both families
    CHECK(classical_lhs_general(2, 1, 2) == classical_sum(SeriesId::C2Family, 5, 1,
                                                          UpperChoice::Short));
    CHECK(classical_lhs_general(4, 1, 1) == classical_sum(SeriesId::G2Family, 5, 1,
                                                          UpperChoice::Short));
    // the (C.2)-type congruence at p = 5, both limits agree mod p^3
    CHECK(congruent_mod_prime_power(classical_sum(SeriesId::C2Family, 5, 1,
                                                  UpperChoice::Short),
                                    Rational(5), 5, 3));
    CHECK(congruent_mod_prime_power(classical_sum(SeriesId::C2Family, 5, 1,
                                                  UpperChoice::Long),
                                    Rational(5), 5, 3));
}

TEST_CASE("classical statement checks") {
    CHECK(verify_classical(StatementId::VanHamme_C2, 5).ok());
    CHECK(verify_classical(StatementId::Long_C2_p4, 7).ok());
    CHECK(verify_classical(StatementId::GW_gen, 5, 2).ok());
    CHECK(verify_classical(StatementId::VanHamme_G2, 5).ok());
    CHECK(verify_classical(StatementId::Swisher, 7).ok());
    CHECK(verify_classical(StatementId::SunZW, 5).ok());
    CHECK(verify_classical(StatementId::SunZH, 7).ok());
}

TEST_CASE("q -> 1 limit equals the classical sum") {
    CHECK(q_to_1_crosscheck({5, 2, 1, Family::Theorem1, MChoice::Short}));
    CHECK(q_to_1_crosscheck({5, 2, 1, Family::Theorem1, MChoice::Long}));
    CHECK(q_to_1_crosscheck({5, 4, 1, Family::Theorem1, MChoice::Short}));
    CHECK(q_to_1_crosscheck({7, 4, 1, Family::Theorem2, MChoice::Short}));
}
