#pragma once

#include <vector>

#include "typicality/rational.hpp"

namespace typicality {

// Euler-Mascheroni constant, 20 significant digits.
inline constexpr double kEulerGamma = 0.57721566490153286061;

// n-th harmonic number, compensated summation, harmonic(0) == 0.
double harmonic(long long n);

// Digamma for x > 0: upward recurrence to x >= 8, then the even-order
// asymptotic tail. Throws std::domain_error for x <= 0.
double digamma(double x);

// Digamma evaluated through Binet's second formula
//   psi(z+1) = ln z + 1/(2z) - 2*Int_0^inf t/((t^2+z^2)(e^{2 pi t}-1)) dt
// with z = x-1 (one upward recurrence step is applied first when x <= 1 so
// that z stays positive). Quadrature absolute error <= tol.
double digamma_binet(double x, double tol = 1e-10);

// Even-index Bernoulli numbers B_2,...,B_{2*k_max}, exact rationals via the
// defining recurrence sum_{j=0}^{m} C(m+1,j) B_j = 0. 1 <= k_max <= 64.
std::vector<Rational> bernoulli_even(int k_max);

// zeta(1-2k) = -B_{2k}/(2k), exact. k >= 1.
Rational zeta_negative_odd(int k);

// ln B(a,b) for a,b > 0.
double log_beta(double a, double b);

// Regularized incomplete beta I_x(a,b), continued fraction with modified
// Lentz evaluation; the reflection I_x(a,b) = 1 - I_{1-x}(b,a) keeps the
// fraction in its fast-converging region. 0 <= x <= 1, a,b > 0.
double reg_incomplete_beta(double x, double a, double b);

}  // namespace typicality
