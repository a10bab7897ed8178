#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "typicality/quadrature.hpp"

using namespace typicality;

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

TEST_CASE("polynomial and smooth integrands on finite panels") {
    const QuadResult sq = integrate_finite([](double x) { return x * x; }, 0.0, 1.0);
    CHECK(std::fabs(sq.value - 1.0 / 3.0) <= 1e-14);
    CHECK(std::fabs(sq.value - 1.0 / 3.0) <= sq.abs_error_estimate + 1e-16);

    const QuadResult sine = integrate_finite([](double x) { return std::sin(x); }, 0.0, kPi);
    CHECK(std::fabs(sine.value - 2.0) <= 1e-13);

    const QuadResult root = integrate_finite([](double x) { return std::sqrt(x); }, 0.0, 1.0);
    CHECK(std::fabs(root.value - 2.0 / 3.0) <= 1e-11);
    CHECK(std::fabs(root.value - 2.0 / 3.0) <= root.abs_error_estimate + 1e-14);
}

TEST_CASE("evaluation count is a whole number of 15-point panels") {
    const QuadResult r = integrate_finite([](double x) { return std::exp(-x * x); }, -2.0, 2.0);
    CHECK(r.evaluations > 0);
    CHECK(r.evaluations % 15 == 0);
}

TEST_CASE("interval orientation and degenerate intervals") {
    CHECK_THROWS_AS(integrate_finite([](double x) { return x; }, 2.0, 0.0), std::domain_error);
    const QuadResult zero = integrate_finite([](double x) { return x; }, 1.5, 1.5);
    CHECK(zero.value == 0.0);
    CHECK(zero.evaluations == 0);
}

TEST_CASE("subdivision exhaustion raises and still carries the best estimate") {
    QuadConfig cfg;
    cfg.abs_tol = 1e-15;
    cfg.max_subdivisions = 1;
    bool threw = false;
    try {
        integrate_finite([](double x) { return std::sin(40.0 * x); }, 0.0, 20.0 * kPi, cfg);
    } catch (const QuadratureError& e) {
        threw = true;
        // Exact value is 0; the unconverged estimate must still be sane.
        CHECK(std::isfinite(e.best_estimate.value));
        CHECK(e.best_estimate.evaluations > 0);
        CHECK(e.best_estimate.abs_error_estimate > cfg.abs_tol);
    }
    CHECK(threw);
}

TEST_CASE("repeat calls are bitwise identical") {
    auto f = [](double x) { return std::cos(3.0 * x) * std::exp(-x); };
    const QuadResult a = integrate_finite(f, 0.0, 5.0);
    const QuadResult b = integrate_finite(f, 0.0, 5.0);
    CHECK(a.value == b.value);
    CHECK(a.abs_error_estimate == b.abs_error_estimate);
    CHECK(a.evaluations == b.evaluations);
}

TEST_CASE("decaying integrals reach the true semi-infinite value") {
    const QuadResult expo = integrate_decaying([](double t) { return std::exp(-t); }, 0.0, 1.0);
    CHECK(std::fabs(expo.value - 1.0) <= 1e-11);
    CHECK(std::fabs(expo.value - 1.0) <= expo.abs_error_estimate + 1e-14);

    // int_0^inf t/(e^{2 pi t} - 1) dt = 1/24; the t=0 limit of the integrand
    // is 1/(2 pi).
    auto planck1 = [](double t) {
        if (t == 0.0) return 1.0 / (2.0 * kPi);
        return t / std::expm1(2.0 * kPi * t);
    };
    const QuadResult p1 = integrate_decaying(planck1, 0.0, 2.0 * kPi);
    CHECK(std::fabs(p1.value - 1.0 / 24.0) <= 1e-12);

    // int_0^inf t^3/(e^t - 1) dt = pi^4/15.
    auto planck3 = [](double t) {
        if (t == 0.0) return 0.0;
        return t * t * t / std::expm1(t);
    };
    const QuadResult p3 = integrate_decaying(planck3, 0.0, 1.0);
    const double truth = kPi * kPi * kPi * kPi / 15.0;
    CHECK(std::fabs(p3.value - truth) <= 1e-10 * truth);
    CHECK(std::fabs(p3.value - truth) <= p3.abs_error_estimate + 1e-12);
}

TEST_CASE("error estimates are honest on a mildly oscillatory integrand") {
    // int_0^1 cos(10 x) dx = sin(10)/10.
    const QuadResult r = integrate_finite([](double x) { return std::cos(10.0 * x); }, 0.0, 1.0);
    const double truth = std::sin(10.0) / 10.0;
    CHECK(std::fabs(r.value - truth) <= r.abs_error_estimate + 1e-15);
    CHECK(std::fabs(r.value - truth) <= 1e-12);
}
