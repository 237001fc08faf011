#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "qsc/poly.hpp"

using namespace qsc;

namespace {
Poly P(std::vector<long> c) {
    std::vector<Rational> r;
    for (long x : c) r.emplace_back(x);
    return Poly(std::move(r));
}
}  // namespace

TEST_CASE("construction and normal form") {
    CHECK(Poly().is_zero());
    CHECK(!Poly().degree().has_value());
    CHECK(Poly(std::vector<Rational>{Rational(1), Rational(2), Rational(0)}).degree() == 1);
    CHECK(Poly::one().is_one());
    CHECK(Poly::monomial(3).degree() == 3);
    CHECK(Poly::monomial(3).coeff(3) == 1);
    CHECK(Poly::monomial(0, Rational(0)).is_zero());
    CHECK(P({0, 0, 0}).is_zero());
}

TEST_CASE("ring laws on fixed elements") {
    Poly a = P({1, 2, 3});
    Poly b = P({-4, 0, 0, 1});
    Poly c = P({7, -1});
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a * b == b * a);
    CHECK((a - a).is_zero());
    CHECK(a + Poly() == a);
    CHECK(a * Poly::one() == a);
    CHECK((a * Poly()).is_zero());
    CHECK(-(-a) == a);
    CHECK((a * b) * c == a * (b * c));
}

TEST_CASE("evaluation, leading, monic") {
    Poly a = P({1, 2, 3});  // 3q^2 + 2q + 1
    CHECK(a.eval(Rational(2)) == 17);
    CHECK(a.eval(Rational(-1, 2)) == Rational(3, 4));
    CHECK(a.leading() == 3);
    CHECK(a.monic().leading() == 1);
    CHECK(a.monic() * Rational(3) == a);
    CHECK(a.has_integer_coeffs());
    CHECK(!Poly(Rational(1, 2)).has_integer_coeffs());
}

TEST_CASE("division with remainder") {
    // q^3 + 2q + 1 = (q + 1)(q^2 - q + 3) - 2
    auto [quot, rem] = poly_divrem(P({1, 2, 0, 1}), P({1, 1}));
    CHECK(quot == P({3, -1, 1}));
    CHECK(rem == P({-2}));
    CHECK(quot * P({1, 1}) + rem == P({1, 2, 0, 1}));

    auto [q2, r2] = poly_divrem(P({1, 1}), P({1, 2, 0, 1}));  // deg(a) < deg(b)
    CHECK(q2.is_zero());
    CHECK(r2 == P({1, 1}));

    CHECK_THROWS_AS(poly_divrem(P({1}), Poly()), std::domain_error);
}

TEST_CASE("exact division") {
    CHECK(poly_divexact(P({-1, 0, 1}), P({-1, 1})) == P({1, 1}));  // (q^2-1)/(q-1)
    CHECK_THROWS_AS(poly_divexact(P({1, 0, 1}), P({-1, 1})), std::logic_error);
    Poly a = P({2, -3, 5, 1});
    Poly b = P({4, 1, 1});
    CHECK(poly_divexact(a * b, b) == a);
}

TEST_CASE("gcd") {
    Poly q6 = P({-1, 0, 0, 0, 0, 0, 1});
    Poly q4 = P({-1, 0, 0, 0, 1});
    CHECK(poly_gcd(q6, q4) == P({-1, 0, 1}));  // q^2 - 1

    CHECK(poly_gcd(P({2, 4}), Poly()) == P({1, 2}).monic());
    CHECK_THROWS(poly_gcd(Poly(), Poly()));

    Poly common = P({1, 1}) * P({-5, 1});
    Poly a = common * P({3, 0, 2});
    Poly b = common * P({1, 7});
    CHECK(poly_gcd(a, b) == common.monic());

    // coprime pair
    CHECK(poly_gcd(P({1, 1}), P({2, 1})).is_one());
}

TEST_CASE("gcd survives larger structured inputs") {
    // (q^60 - 1, q^36 - 1) -> q^12 - 1
    std::vector<Rational> a(61, Rational(0)), b(37, Rational(0)), g(13, Rational(0));
    a[0] = -1; a[60] = 1;
    b[0] = -1; b[36] = 1;
    g[0] = -1; g[12] = 1;
    CHECK(poly_gcd(Poly(a), Poly(b)) == Poly(g));
}

TEST_CASE("printing") {
    CHECK(P({-2, 0, 1}).str() == "q^2 - 2");
    CHECK(Poly().str() == "0");
}
