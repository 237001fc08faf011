#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <numeric>
#include <tuple>

#include "doctest.h"
#include "qsc/theorems.hpp"

using namespace qsc;

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS((TheoremParams{6, 2, 2, Family::Theorem1, MChoice::Short}.validate()),
                    std::invalid_argument);  // gcd(n,d) != 1
    CHECK_THROWS_AS((TheoremParams{5, 2, 2, Family::Theorem1, MChoice::Short}.validate()),
                    std::invalid_argument);  // n != r (mod d)
    CHECK_THROWS_AS((TheoremParams{5, 2, 7, Family::Theorem1, MChoice::Short}.validate()),
                    std::invalid_argument);  // r > n
    CHECK_THROWS_AS((TheoremParams{5, 1, 1, Family::Theorem2, MChoice::Short}.validate()),
                    std::invalid_argument);  // d >= 2
    CHECK_NOTHROW((TheoremParams{5, 2, -3, Family::Theorem1, MChoice::Short}.validate()));
    CHECK_NOTHROW((TheoremParams{5, 3, 1, Family::Theorem2, MChoice::Short}.validate()));
    CHECK(TheoremParams{5, 3, 1, Family::Theorem2, MChoice::Short}.big_n() == 10);
    CHECK(TheoremParams{5, 3, 1, Family::Theorem2, MChoice::Short}.upper_limit() == 3);
    CHECK(TheoremParams{5, 3, 1, Family::Theorem2, MChoice::Long}.upper_limit() == 4);
}

TEST_CASE("smallest left-hand side in closed form") {
    // n=3, d=2, r=1, short limit M=1: 1 + [5]/[2]^4
    RatFunc expect = RatFunc(Rational(1)) + q_integer(5) / q_integer(2).pow(4);
    CHECK(lhs_sum({3, 2, 1, Family::Theorem1, MChoice::Short}) == expect);
}

TEST_CASE("main congruences on a small grid") {
    for (long n : {3L, 5L, 7L}) {
        for (long d : {2L, 3L, 4L}) {
            if (std::gcd(n, d) != 1) continue;
            long r1 = n % d == 0 ? d : n % d;  // n == r (mod d)
            long r2 = (d - n % d) % d;         // n == -r (mod d)
            if (r2 == 0) r2 = d;
            for (MChoice mc : {MChoice::Short, MChoice::Long}) {
                CHECK(verify_theorem({n, d, r1, Family::Theorem1, mc}).ok());
                if (d >= 2) CHECK(verify_theorem({n, d, r2, Family::Theorem2, mc}).ok());
            }
        }
    }
    // negative r (Laurent territory)
    CHECK(verify_theorem({5, 2, -1, Family::Theorem1, MChoice::Short}).ok());
    CHECK(verify_theorem({5, 3, -2, Family::Theorem2, MChoice::Long}).ok());
}

TEST_CASE("sharpness: power 5 fails generically, trivial instances never") {
    auto rep = verify_theorem_at_power({3, 2, 1, Family::Theorem1, MChoice::Short}, 5);
    CHECK(rep.coprimality_ok);
    CHECK(!rep.holds);
    CHECK(rep.residue_witness.degree().has_value());
    // r = n gives a single-term sum equal to the right side exactly
    CHECK(verify_theorem_at_power({5, 4, 5, Family::Theorem1, MChoice::Short}, 5).ok());
}

TEST_CASE("prior results and refinement consistency") {
    for (long n : {3L, 5L, 7L})
        CHECK(verify_prior(PriorId::GW_C2, {n, 2, 1, MChoice::Short}).ok());
    CHECK(verify_prior(PriorId::GW_C2, {5, 2, 1, MChoice::Long}).ok());
    CHECK(verify_prior(PriorId::LW_G2, {5, 4, 1, MChoice::Short}).ok());
    CHECK(verify_prior(PriorId::LW_G2, {5, 4, 1, MChoice::Long}).ok());
    CHECK(verify_prior(PriorId::Guo_uni, {5, 2, 1, MChoice::Short}).ok());
    CHECK(verify_prior(PriorId::Guo_uni, {7, 3, 1, MChoice::Short}).ok());
    CHECK(verify_prior(PriorId::GS, {5, 3, 1, MChoice::Short}).ok());
    // d = 2 branch: the right side degenerates to 0 mod [n]Phi_n^3
    CHECK(verify_prior(PriorId::GS, {3, 2, -1, MChoice::Short}).ok());
    CHECK(verify_prior(PriorId::GS, {5, 2, -1, MChoice::Long}).ok());

    CHECK_THROWS_AS(verify_prior(PriorId::GW_C2, {4, 2, 1, MChoice::Short}),
                    std::invalid_argument);
    CHECK_THROWS_AS(verify_prior(PriorId::GS, {5, 2, 1, MChoice::Short}),
                    std::invalid_argument);  // needs r <= d-2
}

TEST_CASE("vanishing lemma at rational specializations") {
    CHECK(verify_lemma_vanishing(VanishingLemma::Lemma21, 5, 2, 1, Rational(2), Rational(3))
              .ok());
    CHECK(verify_lemma_vanishing(VanishingLemma::Lemma21, 7, 3, 1, Rational(3), Rational(5))
              .ok());
    CHECK(verify_lemma_vanishing(VanishingLemma::Lemma22, 5, 3, 1, Rational(-2), Rational(7))
              .ok());
    CHECK_THROWS_AS(
        verify_lemma_vanishing(VanishingLemma::Lemma21, 5, 2, 1, Rational(0), Rational(3)),
        std::invalid_argument);
}

TEST_CASE("parameter enumeration is deterministic and complete") {
    auto tuples = enumerate_valid_params(Family::Theorem1, 9, 4, 9);
    CHECK(tuples.size() >= 10);
    for (const auto& p : tuples) CHECK_NOTHROW(p.validate());
    for (size_t i = 1; i < tuples.size(); ++i) {
        auto key = [](const TheoremParams& p) { return std::tuple(p.n, p.d, p.r); };
        CHECK(key(tuples[i - 1]) < key(tuples[i]));
    }
    // r = n boundary tuples are present even outside the window
    bool found = false;
    for (const auto& p : tuples)
        if (p.n == 9 && p.r == 9) found = true;
    CHECK(found);
    auto t2 = enumerate_valid_params(Family::Theorem2, 9, 4, 9);
    for (const auto& p : t2) CHECK_NOTHROW(p.validate());
    CHECK(!t2.empty());
}
