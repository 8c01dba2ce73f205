#include "permbound/count.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <mpfr.h>

using namespace permbound;

TEST_CASE("factorials") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(1) == 1);
    CHECK(factorial(5) == 120);
    CHECK(factorial(12) == 479001600);
    CHECK(factorial(20) == Count("2432902008176640000"));
    CHECK(factorial(30) == Count("265252859812191058636308480000000"));
}

TEST_CASE("binomials match an independently built Pascal triangle") {
    std::vector<std::vector<Count>> tri{{1}};
    for (unsigned n = 1; n <= 40; ++n) {
        std::vector<Count> row(n + 1, 1);
        for (unsigned k = 1; k < n; ++k) row[k] = tri.back()[k - 1] + tri.back()[k];
        tri.push_back(std::move(row));
    }
    for (unsigned n = 0; n <= 40; ++n)
        for (unsigned k = 0; k <= n; ++k) CHECK(binomial(n, static_cast<long>(k)) == tri[n][k]);
}

TEST_CASE("binomials vanish outside the valid range") {
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(5, 6) == 0);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(0, 1) == 0);
}

TEST_CASE("derangement numbers") {
    const long expected[] = {1, 0, 1, 2, 9, 44, 265, 1854, 14833, 133496, 1334961};
    for (unsigned k = 0; k <= 10; ++k) CHECK(derangement_count(k) == expected[k]);

    SECTION("inclusion-exclusion sum agrees") {
        for (unsigned k = 0; k <= 30; ++k) {
            Count s = 0;
            for (unsigned i = 0; i <= k; ++i) {
                Count term = binomial(k, static_cast<long>(i)) * factorial(k - i);
                s += (i % 2 == 0) ? term : -term;
            }
            CHECK(derangement_count(k) == s);
        }
    }

    SECTION("nearest integer to k!/e agrees") {
        for (unsigned k = 1; k <= 40; ++k) {
            mpfr_t t, e;
            mpfr_init2(t, 256);
            mpfr_init2(e, 256);
            mpfr_set_z(t, factorial(k).get_mpz_t(), MPFR_RNDN);
            mpfr_set_ui(e, 1, MPFR_RNDN);
            mpfr_exp(e, e, MPFR_RNDN);
            mpfr_div(t, t, e, MPFR_RNDN);
            mpfr_rint(t, t, MPFR_RNDN);
            Count nearest;
            mpfr_get_z(nearest.get_mpz_t(), t, MPFR_RNDN);
            mpfr_clear(t);
            mpfr_clear(e);
            CHECK(derangement_count(k) == nearest);
        }
    }
}

TEST_CASE("permutation ball volumes") {
    CHECK(ball_volume(6, 0) == 1);
    CHECK(ball_volume(6, 1) == 1);
    CHECK(ball_volume(4, 2) == 7);
    CHECK(ball_volume(4, 3) == 15);
    CHECK(ball_volume(6, 4) == 191);
    CHECK(ball_volume(11, 4) == 3356);
    for (unsigned n = 1; n <= 8; ++n) CHECK(ball_volume(n, n) == factorial(n));
    for (unsigned n = 2; n <= 8; ++n)
        for (unsigned r = 1; r <= n; ++r) CHECK(ball_volume(n, r) >= ball_volume(n, r - 1));
    CHECK_THROWS_AS(ball_volume(4, 5), std::domain_error);
}

TEST_CASE("binary ball volumes") {
    CHECK(binary_ball_volume(5, 0) == 1);
    CHECK(binary_ball_volume(5, 2) == 16);
    for (unsigned n = 0; n <= 20; ++n) {
        Count pow2 = 1;
        pow2 <<= n;
        CHECK(binary_ball_volume(n, n) == pow2);
    }
    CHECK_THROWS_AS(binary_ball_volume(3, 4), std::domain_error);
}

TEST_CASE("factorization and prime powers") {
    auto f12 = factorization(12);
    REQUIRE(f12.factors.size() == 2);
    CHECK(f12.factors[0] == std::pair<unsigned long, unsigned>{2, 2});
    CHECK(f12.factors[1] == std::pair<unsigned long, unsigned>{3, 1});
    CHECK_THROWS_AS(factorization(1), std::domain_error);

    CHECK(prime_power(8) == std::pair<unsigned long, unsigned>{2, 3});
    CHECK(prime_power(49) == std::pair<unsigned long, unsigned>{7, 2});
    CHECK(prime_power(125) == std::pair<unsigned long, unsigned>{5, 3});
    CHECK_FALSE(prime_power(12).has_value());
    CHECK_FALSE(prime_power(1).has_value());

    SECTION("reconstructing n from its factors") {
        for (unsigned long n = 2; n <= 5000; ++n) {
            auto f = factorization(n);
            unsigned long back = 1;
            for (auto [p, c] : f.factors)
                for (unsigned i = 0; i < c; ++i) back *= p;
            CHECK(back == n);
        }
    }
}

TEST_CASE("theta: smallest maximal prime-power component") {
    CHECK(theta(2) == 2);
    CHECK(theta(6) == 2);
    CHECK(theta(12) == 3);
    CHECK(theta(18) == 2);
    CHECK(theta(30) == 2);
    CHECK(theta(31) == 31);
    CHECK(theta(36) == 4);
    CHECK(theta(72) == 8);
    CHECK(theta(625) == 625);
}

TEST_CASE("directed log2 brackets the true value") {
    for (unsigned k = 0; k <= 200; k += 7) {
        Count pow2 = 1;
        pow2 <<= k;
        CHECK(log2_lower(pow2) == static_cast<double>(k));
        CHECK(log2_upper(pow2) == static_cast<double>(k));
    }
    CHECK(log2_lower(Count(10)) <= 3.3219280948873624);
    CHECK(log2_upper(Count(10)) >= 3.3219280948873622);
    for (unsigned n = 1; n <= 60; ++n) {
        Count v = factorial(n);
        double lo = log2_lower(v), hi = log2_upper(v);
        CHECK(lo <= hi);
        CHECK(hi - lo <= 1e-9);
    }
    CHECK_THROWS_AS(log2_lower(Count(0)), std::domain_error);
}

TEST_CASE("exact division helpers") {
    CHECK(ceil_div(Count(7), Count(2)) == 4);
    CHECK(ceil_div(Count(6), Count(2)) == 3);
    CHECK(floor_div(Count(7), Count(2)) == 3);
    CHECK(ceil_rational(mpq_class(7, 2)) == 4);
    CHECK(ceil_rational(mpq_class(6, 3)) == 2);
    CHECK(ceil_rational(mpq_class(0, 5)) == 0);
}

TEST_CASE("capacity errors are distinguishable from domain errors") {
    CapacityError e("limit hit");
    CHECK(dynamic_cast<std::runtime_error*>(&e) != nullptr);
}
