#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>
#include <vector>

#include "typicality/rational.hpp"

// Independent oracles: every routine here recomputes a quantity through a
// different algorithm than the library path it is used to check.
namespace typicality::testing {

inline Rational harmonic_rational(long long n) {
    Rational sum = 0;
    for (long long j = 1; j <= n; ++j) sum += Rational(1, j);
    return sum;
}

inline BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    BigInt result = 1;
    for (int j = 0; j < k; ++j) {
        result *= n - j;
        result /= j + 1;
    }
    return result;
}

// Regularized incomplete beta for integer shapes via the binomial-sum
// identity I_x(a, b) = sum_{j=a}^{a+b-1} C(a+b-1, j) x^j (1-x)^{a+b-1-j}.
inline double incomplete_beta_integer(double x, int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("integer shapes required");
    const int n = a + b - 1;
    double sum = 0.0;
    for (int j = a; j <= n; ++j) {
        sum += to_double(Rational(binomial(n, j))) * std::pow(x, j) * std::pow(1.0 - x, n - j);
    }
    return sum;
}

// Composite Simpson with n panels (n even).
inline double simpson(const std::function<double(double)>& f, double a, double b, int n) {
    const double h = (b - a) / n;
    double sum = f(a) + f(b);
    for (int i = 1; i < n; ++i) sum += f(a + i * h) * (i % 2 == 1 ? 4.0 : 2.0);
    return sum * h / 3.0;
}

// Eigenvalues of a 3x3 Hermitian matrix (row-major, 9 entries) from the
// characteristic polynomial in trigonometric form, sorted descending.
inline std::vector<double> hermitian3_eigenvalues(const std::vector<std::complex<double>>& m) {
    if (m.size() != 9) throw std::invalid_argument("expected 9 entries");
    const double q = (m[0].real() + m[4].real() + m[8].real()) / 3.0;
    const double p1 = std::norm(m[1]) + std::norm(m[2]) + std::norm(m[5]);
    const double p2 = (m[0].real() - q) * (m[0].real() - q) +
                      (m[4].real() - q) * (m[4].real() - q) +
                      (m[8].real() - q) * (m[8].real() - q) + 2.0 * p1;
    if (p2 <= 1e-300) return {q, q, q};
    const double p = std::sqrt(p2 / 6.0);
    std::vector<std::complex<double>> b(9);
    for (int i = 0; i < 9; ++i) b[i] = m[i] / p;
    b[0] -= q / p;
    b[4] -= q / p;
    b[8] -= q / p;
    const std::complex<double> det = b[0] * (b[4] * b[8] - b[5] * b[7]) -
                                     b[1] * (b[3] * b[8] - b[5] * b[6]) +
                                     b[2] * (b[3] * b[7] - b[4] * b[6]);
    double r = det.real() / 2.0;
    r = std::min(1.0, std::max(-1.0, r));
    const double phi = std::acos(r) / 3.0;
    const double e1 = q + 2.0 * p * std::cos(phi);
    const double e3 = q + 2.0 * p * std::cos(phi + 2.0 * M_PI / 3.0);
    const double e2 = 3.0 * q - e1 - e3;
    return {e1, e2, e3};
}

}  // namespace typicality::testing
