#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "test_support.hpp"
#include "typicality/counter_rng.hpp"
#include "typicality/special_functions.hpp"

using namespace typicality;
namespace oracle = typicality::testing;

TEST_CASE("harmonic numbers match the exact rational sum") {
    CHECK(harmonic(0) == 0.0);
    CHECK(harmonic(1) == 1.0);
    for (long long n : {2LL, 5LL, 6LL, 12LL, 24LL, 100LL, 1000LL, 10000LL}) {
        const double exact = to_double(oracle::harmonic_rational(n));
        CHECK(std::fabs(harmonic(n) - exact) <= 1e-14 * exact);
    }
    CHECK_THROWS_AS(harmonic(-1), std::domain_error);
}

TEST_CASE("digamma hits classical closed forms") {
    CHECK(std::fabs(digamma(1.0) + kEulerGamma) <= 1e-14);
    CHECK(std::fabs(digamma(0.5) + kEulerGamma + 2.0 * std::log(2.0)) <= 1e-13);
    CHECK(std::fabs(digamma(2.0) - (1.0 - kEulerGamma)) <= 1e-14);
}

TEST_CASE("digamma satisfies the recurrence psi(x+1) = psi(x) + 1/x") {
    for (double x : {0.07, 0.5, 1.3, 3.14159, 7.77, 123.456}) {
        const double lhs = digamma(x + 1.0);
        const double rhs = digamma(x) + 1.0 / x;
        CHECK(std::fabs(lhs - rhs) <= 1e-12 * std::max(1.0, std::fabs(lhs)));
    }
}

TEST_CASE("digamma at integers reproduces harmonic numbers") {
    for (long long n : {0LL, 1LL, 7LL, 64LL, 999LL, 10000LL}) {
        CHECK(std::fabs(digamma(static_cast<double>(n) + 1.0) - (harmonic(n) - kEulerGamma)) <=
              1e-12);
    }
}

TEST_CASE("integral representation agrees with the recurrence evaluation") {
    for (double x : {0.5, 1.0, 1.5, 2.0, 8.0, 31.25, 64.0, 300.75}) {
        CHECK(std::fabs(digamma_binet(x, 1e-10) - digamma(x)) <= 1e-9);
    }
    CHECK_THROWS_AS(digamma_binet(0.0, 1e-10), std::domain_error);
    CHECK_THROWS_AS(digamma(0.0), std::domain_error);
}

TEST_CASE("even Bernoulli numbers match the frozen table") {
    const std::vector<Rational> b = bernoulli_even(10);
    REQUIRE(b.size() == 10);
    const Rational expected[10] = {Rational(1, 6),       Rational(-1, 30),
                                   Rational(1, 42),      Rational(-1, 30),
                                   Rational(5, 66),      Rational(-691, 2730),
                                   Rational(7, 6),       Rational(-3617, 510),
                                   Rational(43867, 798), Rational(-174611, 330)};
    for (int k = 1; k <= 10; ++k) CHECK(b[k - 1] == expected[k - 1]);
    CHECK_THROWS_AS(bernoulli_even(0), std::domain_error);
    CHECK_THROWS_AS(bernoulli_even(65), std::domain_error);
}

TEST_CASE("Bernoulli table satisfies the defining recurrence") {
    // sum_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1, with B_1 = -1/2 and all
    // other odd entries zero.
    const std::vector<Rational> evens = bernoulli_even(20);
    auto bernoulli = [&](int j) -> Rational {
        if (j == 0) return 1;
        if (j == 1) return Rational(-1, 2);
        if (j % 2 == 1) return 0;
        return evens[j / 2 - 1];
    };
    for (int m = 1; m <= 40; ++m) {
        Rational sum = 0;
        for (int j = 0; j <= m; ++j) sum += Rational(oracle::binomial(m + 1, j)) * bernoulli(j);
        CHECK(sum == 0);
    }
}

TEST_CASE("negative odd zeta values match -B_2k/(2k) exactly") {
    CHECK(zeta_negative_odd(1) == Rational(-1, 12));
    CHECK(zeta_negative_odd(2) == Rational(1, 120));
    CHECK(zeta_negative_odd(3) == Rational(-1, 252));
    const std::vector<Rational> b = bernoulli_even(10);
    for (int k = 1; k <= 10; ++k) {
        CHECK(zeta_negative_odd(k) == -b[k - 1] / Rational(2 * k));
    }
}

TEST_CASE("log beta agrees with the exact value at integer shapes") {
    // B(6,6) = 120*120/11! = 1/2772.
    CHECK(std::fabs(std::exp(log_beta(6.0, 6.0)) - 1.0 / 2772.0) <= 1e-15);
    CHECK(std::fabs(log_beta(1.0, 1.0)) <= 1e-15);
    CHECK(std::fabs(log_beta(2.5, 3.5) - log_beta(3.5, 2.5)) == 0.0);
}

TEST_CASE("regularized incomplete beta matches the binomial-sum oracle") {
    for (auto [a, b] : {std::pair{6, 6}, {3, 9}, {12, 2}, {1, 1}, {2, 24}}) {
        for (double x : {0.05, 0.2, 0.35, 0.5, 0.65, 0.8, 0.95}) {
            const double lib = reg_incomplete_beta(x, a, b);
            const double ref = oracle::incomplete_beta_integer(x, a, b);
            CHECK(std::fabs(lib - ref) <= 1e-10 * std::max(ref, 1e-30) + 1e-15);
        }
    }
}

TEST_CASE("incomplete beta boundary and symmetry behavior") {
    CHECK(reg_incomplete_beta(0.0, 6.0, 6.0) == 0.0);
    CHECK(reg_incomplete_beta(1.0, 6.0, 6.0) == 1.0);
    CounterRng rng(2024, 0);
    for (int i = 0; i < 200; ++i) {
        const double x = 0.999 * rng.uniform() + 0.0005;
        const double a = 0.5 + 8.0 * rng.uniform();
        const double b = 0.5 + 8.0 * rng.uniform();
        const double direct = reg_incomplete_beta(x, a, b);
        const double mirrored = 1.0 - reg_incomplete_beta(1.0 - x, b, a);
        CHECK(std::fabs(direct - mirrored) <= 1e-13);
        CHECK(direct >= 0.0);
        CHECK(direct <= 1.0);
    }
    CHECK_THROWS_AS(reg_incomplete_beta(-0.1, 2.0, 2.0), std::domain_error);
    CHECK_THROWS_AS(reg_incomplete_beta(1.1, 2.0, 2.0), std::domain_error);
    CHECK_THROWS_AS(reg_incomplete_beta(0.5, -1.0, 2.0), std::domain_error);
}

TEST_CASE("incomplete beta is monotone in x") {
    double previous = -1.0;
    for (int i = 0; i <= 100; ++i) {
        const double x = static_cast<double>(i) / 100.0;
        const double value = reg_incomplete_beta(x, 6.0, 6.0);
        CHECK(value >= previous);
        previous = value;
    }
}

TEST_CASE("upper tail at the reference threshold") {
    // P(P_1 > 0.95) for the Beta(6,6) occupancy law.
    const double tail = 1.0 - reg_incomplete_beta(0.95, 6.0, 6.0);
    const double ref = 1.0 - oracle::incomplete_beta_integer(0.95, 6, 6);
    CHECK(std::fabs(tail - ref) <= 1e-12 * ref);
    CHECK(tail > 5.7e-6);
    CHECK(tail < 5.9e-6);
}
