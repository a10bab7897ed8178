#include "typicality/special_functions.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>

#include "typicality/quadrature.hpp"

namespace typicality {

double harmonic(long long n) {
    if (n < 0) throw std::domain_error("harmonic: n must be >= 0");
    if (n > 10'000'000) return digamma(static_cast<double>(n) + 1.0) + kEulerGamma;
    // Kahan summation, smallest terms first.
    double sum = 0.0, c = 0.0;
    for (long long j = n; j >= 1; --j) {
        double y = 1.0 / static_cast<double>(j) - c;
        double t = sum + y;
        c = (t - sum) - y;
        sum = t;
    }
    return sum;
}

double digamma(double x) {
    if (!(x > 0.0)) throw std::domain_error("digamma: x must be > 0");
    double result = 0.0;
    while (x < 8.0) {
        result -= 1.0 / x;
        x += 1.0;
    }
    // Asymptotic tail, coefficients B_{2k}/(2k) for k = 1..7. At x >= 8 the
    // first omitted term is below 2e-15.
    static constexpr double kTail[7] = {
        1.0 / 12.0,     -1.0 / 120.0,      1.0 / 252.0, -1.0 / 240.0,
        1.0 / 132.0, -691.0 / 32760.0, 1.0 / 12.0,
    };
    const double inv2 = 1.0 / (x * x);
    double tail = 0.0, p = inv2;
    for (double k : kTail) {
        tail += k * p;
        p *= inv2;
    }
    return result + std::log(x) - 0.5 / x - tail;
}

double digamma_binet(double x, double tol) {
    if (!(x > 0.0)) throw std::domain_error("digamma_binet: x must be > 0");
    if (!(tol > 0.0)) throw std::domain_error("digamma_binet: tol must be > 0");
    double shift = 0.0;
    if (x <= 1.0) {  // keep z = x-1 positive
        shift = -1.0 / x;
        x += 1.0;
    }
    const double z = x - 1.0;
    QuadConfig cfg;
    cfg.abs_tol = tol;
    auto kernel = [z](double t) {
        // t/(e^{2 pi t}-1) -> 1/(2 pi) as t -> 0; expm1 keeps the small-t
        // ratio accurate.
        const double ratio = t == 0.0 ? 1.0 / (2.0 * M_PI) : t / std::expm1(2.0 * M_PI * t);
        return ratio / (t * t + z * z);
    };
    QuadResult integral = integrate_decaying(kernel, 0.0, 2.0 * M_PI, cfg);
    return shift + std::log(z) + 0.5 / z - 2.0 * integral.value;
}

namespace {

// B_0..B_m as exact rationals (B_1 = -1/2 convention); grows a shared table
// under a lock so repeated series evaluations do not re-run the recurrence.
const Rational& bernoulli_at(int idx_2k) {
    static std::mutex mu;
    static std::vector<Rational> table = {Rational(1), Rational(-1, 2)};
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<int>(table.size()) <= idx_2k) {
        const int m = static_cast<int>(table.size());
        // sum_{j=0}^{m} C(m+1,j) B_j = 0  =>  B_m = -(1/(m+1)) sum_{j<m} C(m+1,j) B_j
        Rational acc = 0;
        BigInt binom = 1;  // C(m+1, 0)
        for (int j = 0; j < m; ++j) {
            acc += Rational(binom) * table[j];
            binom = binom * (m + 1 - j) / (j + 1);
        }
        table.push_back(acc / Rational(-(m + 1)));
    }
    return table[idx_2k];
}

}  // namespace

namespace detail {

// Internal access without the public k_max cap (series remainders need one
// index past it).
Rational bernoulli_2k(int k) {
    if (k < 1) throw std::domain_error("bernoulli_2k: k must be >= 1");
    return bernoulli_at(2 * k);
}

}  // namespace detail

std::vector<Rational> bernoulli_even(int k_max) {
    if (k_max < 1 || k_max > 64) throw std::domain_error("bernoulli_even: require 1 <= k_max <= 64");
    std::vector<Rational> out;
    out.reserve(k_max);
    for (int k = 1; k <= k_max; ++k) out.push_back(detail::bernoulli_2k(k));
    return out;
}

Rational zeta_negative_odd(int k) {
    if (k < 1) throw std::domain_error("zeta_negative_odd: k must be >= 1");
    return detail::bernoulli_2k(k) / Rational(-2 * k);
}

double log_beta(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0)) throw std::domain_error("log_beta: a,b must be > 0");
    return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
}

namespace {

// Continued fraction for I_x(a,b), modified Lentz.
double beta_cf(double a, double b, double x) {
    constexpr int kMaxIter = 300;
    constexpr double kEps = 1e-15;
    constexpr double kTiny = 1e-300;
    const double qab = a + b, qap = a + 1.0, qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < kTiny) d = kTiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= kMaxIter; ++m) {
        const int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < kEps) return h;
    }
    throw std::runtime_error("reg_incomplete_beta: continued fraction did not converge in 300 iterations");
}

}  // namespace

double reg_incomplete_beta(double x, double a, double b) {
    if (!(a > 0.0) || !(b > 0.0)) throw std::domain_error("reg_incomplete_beta: a,b must be > 0");
    if (x < 0.0 || x > 1.0) throw std::domain_error("reg_incomplete_beta: x must be in [0,1]");
    if (x == 0.0) return 0.0;
    if (x == 1.0) return 1.0;
    const double front =
        std::exp(std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) + a * std::log(x) + b * std::log1p(-x));
    if (x < (a + 1.0) / (a + b + 2.0)) return front * beta_cf(a, b, x) / a;
    return 1.0 - front * beta_cf(b, a, 1.0 - x) / b;
}

}  // namespace typicality
