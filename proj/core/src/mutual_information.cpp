#include "typicality/mutual_information.hpp"

#include <cmath>
#include <stdexcept>

#include "typicality/special_functions.hpp"

namespace typicality {

namespace detail {
Rational bernoulli_2k(int k);  // special_functions.cpp, no public k cap
}

namespace {

void check_dims(const TripartiteDims& dims) {
    if (dims.d_a < 1 || dims.d_b < 1 || dims.d_e < 1) {
        throw std::domain_error("TripartiteDims: dimensions must be >= 1");
    }
}

void require_page_regime(const TripartiteDims& dims, const char* op) {
    if (!dims.page_regime()) {
        throw RegimeError(std::string(op) + ": requires d_a*d_b <= d_e");
    }
}

Rational coherence_rational(const TripartiteDims& dims) {
    const BigInt a2 = BigInt(dims.d_a) * dims.d_a - 1;
    const BigInt b2 = BigInt(dims.d_b) * dims.d_b - 1;
    return Rational(a2 * b2) / Rational(2 * dims.n());
}

Rational cartan_rational(const TripartiteDims& dims) {
    return Rational(BigInt(dims.d_a - 1) * (dims.d_b - 1)) / Rational(2 * dims.n());
}

// Page average entropy of one side of a bipartition of N, auto-ordered so the
// smaller factor is the subsystem.
double page_vn(long long d_x, long long n_total) {
    const long long d_other = n_total / d_x;
    const long long small = std::min(d_x, d_other);
    const long long large = std::max(d_x, d_other);
    return (harmonic(n_total) - harmonic(large)) -
           static_cast<double>(small - 1) / (2.0 * static_cast<double>(large));
}

// Harmonic-number combination H_N - H_{N/d_a} - H_{N/d_b} + H_{N/(d_a d_b)},
// grouped so the value is bitwise symmetric under A <-> B.
double diagonal_combination(const TripartiteDims& dims) {
    const long long n = dims.n();
    const double h_n = harmonic(n);
    const double h_a = harmonic(n / dims.d_a);
    const double h_b = harmonic(n / dims.d_b);
    const double h_ab = harmonic(n / (static_cast<long long>(dims.d_a) * dims.d_b));
    return (h_n + h_ab) - (h_a + h_b);
}

Rational rational_harmonic(long long n) {
    if (n > 100000) {
        throw std::domain_error("rational_harmonic: n too large for exact evaluation");
    }
    Rational sum = 0;
    for (long long j = 1; j <= n; ++j) sum += Rational(1, j);
    return sum;
}

}  // namespace

MIDecomposition mi_exact(const TripartiteDims& dims) {
    check_dims(dims);
    MIDecomposition out;
    out.diagonal_mi = diagonal_combination(dims);
    out.coherence_term = to_double(coherence_rational(dims));
    out.cartan_term = to_double(cartan_rational(dims));
    if (dims.page_regime()) {
        out.eigenvalue_correction = to_double(coherence_rational(dims) - cartan_rational(dims));
        out.total = out.diagonal_mi + out.eigenvalue_correction;
    } else {
        const long long n = dims.n();
        const double s_a = page_vn(dims.d_a, n);
        const double s_b = page_vn(dims.d_b, n);
        const double s_ab = page_vn(static_cast<long long>(dims.d_a) * dims.d_b, n);
        out.total = (s_a + s_b) - s_ab;
        out.eigenvalue_correction = out.total - out.diagonal_mi;
    }
    return out;
}

Rational mi_exact_rational(const TripartiteDims& dims) {
    check_dims(dims);
    require_page_regime(dims, "mi_exact_rational");
    const long long n = dims.n();
    const Rational diag = rational_harmonic(n) + rational_harmonic(n / (static_cast<long long>(dims.d_a) * dims.d_b)) -
                          rational_harmonic(n / dims.d_a) - rational_harmonic(n / dims.d_b);
    return diag + coherence_rational(dims) - cartan_rational(dims);
}

double mi_naive_factorized(const TripartiteDims& dims) {
    check_dims(dims);
    return diagonal_combination(dims) +
           to_double(coherence_rational(dims) - cartan_rational(dims));
}

double mi_leading(const TripartiteDims& dims) {
    check_dims(dims);
    require_page_regime(dims, "mi_leading");
    return to_double(coherence_rational(dims));
}

namespace {

enum class SeriesRoute { kBernoulli, kZeta };

SeriesEvaluation mi_series_impl(const TripartiteDims& dims, int k_terms, SeriesRoute route) {
    check_dims(dims);
    require_page_regime(dims, "mi series");
    if (k_terms < 0 || k_terms > 64) {
        throw std::domain_error("mi series: require 0 <= k_terms <= 64");
    }
    const long long n = dims.n();
    SeriesEvaluation out;
    out.order_k = k_terms;
    out.leading_exact = coherence_rational(dims);
    double value = to_double(out.leading_exact);

    const BigInt n_sq = BigInt(n) * n;
    BigInt n_pow = 1;  // N^{2k}
    for (int k = 1; k <= k_terms + 1; ++k) {
        n_pow *= n_sq;
        const BigInt f_k = (int_pow(dims.d_a, 2 * k) - 1) * (int_pow(dims.d_b, 2 * k) - 1);
        // zeta(1-2k) = -B_{2k}/(2k); both routes land on the same canonical
        // rational, so the emitted terms are bit-identical.
        const Rational signed_coeff = route == SeriesRoute::kZeta
                                          ? zeta_negative_odd(k)
                                          : -detail::bernoulli_2k(k) / Rational(2 * k);
        const Rational term = signed_coeff * Rational(f_k, n_pow);
        if (k <= k_terms) {
            out.terms_exact.push_back(term);
            out.coefficients.push_back(rational_abs(signed_coeff));
            const double t = to_double(term);
            out.terms.push_back(t);
            value += t;
        } else {
            out.truncation_exact = rational_abs(term);
            out.truncation_estimate = to_double(out.truncation_exact);
        }
    }
    out.value = value;
    return out;
}

}  // namespace

SeriesEvaluation mi_bernoulli_series(const TripartiteDims& dims, int k_terms) {
    return mi_series_impl(dims, k_terms, SeriesRoute::kBernoulli);
}

SeriesEvaluation mi_zeta_series(const TripartiteDims& dims, int k_terms) {
    return mi_series_impl(dims, k_terms, SeriesRoute::kZeta);
}

int optimal_truncation_order(const TripartiteDims& dims, int k_cap) {
    if (k_cap < 1 || k_cap > 64) {
        throw std::domain_error("optimal_truncation_order: require 1 <= k_cap <= 64");
    }
    const SeriesEvaluation series = mi_bernoulli_series(dims, k_cap);
    int best = 1;
    Rational best_abs = rational_abs(series.terms_exact[0]);
    for (int k = 2; k <= k_cap; ++k) {
        const Rational mag = rational_abs(series.terms_exact[k - 1]);
        if (mag < best_abs) {
            best_abs = mag;
            best = k;
        }
    }
    return best;
}

BigInt collapse_identity(int d_a, int d_b, int k) {
    if (d_a < 1 || d_b < 1 || k < 1) {
        throw std::domain_error("collapse_identity: require d_a,d_b,k >= 1");
    }
    const BigInt a = int_pow(d_a, 2 * k);
    const BigInt b = int_pow(d_b, 2 * k);
    const BigInt ab = int_pow(BigInt(d_a) * d_b, 2 * k);
    return (a - 1) + (b - 1) - (ab - 1);
}

RationalDelta rational_delta(int d_a, int d_b, long long n_total) {
    if (d_a < 1 || d_b < 1) throw std::domain_error("rational_delta: dims must be >= 1");
    const long long d_ab = static_cast<long long>(d_a) * d_b;
    if (n_total < d_ab || n_total % d_ab != 0) {
        throw std::invalid_argument("rational_delta: N must be a multiple of d_a*d_b");
    }
    RationalDelta out;
    const BigInt per_block = -BigInt(d_a) * (d_a - 1) - BigInt(d_b) * (d_b - 1) +
                             BigInt(d_ab) * (d_ab - 1);
    out.assembled = Rational(per_block) / Rational(2 * n_total);
    const TripartiteDims dims{d_a, d_b, static_cast<int>(n_total / d_ab)};
    out.coherence = coherence_rational(dims);
    out.cartan = cartan_rational(dims);
    return out;
}

namespace {

// Rational factor R(u) of the closed-form integrand.
double rational_factor(int d_a, int d_b, double u) {
    const double c = static_cast<double>(d_a) * d_b;
    const double u2 = u * u;
    const double num = u * (c * c - u2 * u2);
    const double den = (u2 + 1.0) * (u2 + static_cast<double>(d_a) * d_a) *
                       (u2 + static_cast<double>(d_b) * d_b) * (u2 + c * c);
    return num / den;
}

}  // namespace

double bose_einstein_integrand(const TripartiteDims& dims, double u) {
    check_dims(dims);
    const double c = static_cast<double>(dims.d_a) * dims.d_b;
    const double rate = 2.0 * M_PI * dims.d_e;
    // u/(e^{rate*u}-1) -> 1/rate as u -> 0.
    const double ratio = u == 0.0 ? 1.0 / rate : u / std::expm1(rate * u);
    const double u2 = u * u;
    const double den = (u2 + 1.0) * (u2 + static_cast<double>(dims.d_a) * dims.d_a) *
                       (u2 + static_cast<double>(dims.d_b) * dims.d_b) * (u2 + c * c);
    return ratio * (c * c - u2 * u2) / den;
}

double bose_einstein_folded_integrand(const TripartiteDims& dims, double u) {
    check_dims(dims);
    const double c = static_cast<double>(dims.d_a) * dims.d_b;
    const double rate = 2.0 * M_PI * dims.d_e;
    // Support is [0, sqrt(C)]; at the fold point the bracket cancels by
    // symmetry, but C/u does not round back to u, so clamp explicitly.
    if (u >= std::sqrt(c)) return 0.0;
    const double direct = bose_einstein_integrand(dims, u);
    // Reflected piece R(u) f(C/u); vanishes with R(u) at u == 0 and the
    // exponential underflows long before the division could misbehave.
    const double reflected =
        u == 0.0 ? 0.0 : rational_factor(dims.d_a, dims.d_b, u) / std::expm1(rate * (c / u));
    return direct - reflected;
}

QuadResult bose_einstein_j(const TripartiteDims& dims, double tol) {
    check_dims(dims);
    if (!(tol > 0.0)) throw std::domain_error("bose_einstein_j: tol must be > 0");
    const double c = static_cast<double>(dims.d_a) * dims.d_b;
    const double rate = 2.0 * M_PI * dims.d_e;
    // Beyond u_max the kernel alone is under e^{-40} ~ 4e-18.
    const double u_max = 40.0 / rate + std::sqrt(c);
    QuadConfig cfg;
    cfg.abs_tol = tol;
    QuadResult out = integrate_finite([&dims](double u) { return bose_einstein_integrand(dims, u); },
                                      0.0, u_max, cfg);
    out.abs_error_estimate += std::exp(-rate * u_max);
    return out;
}

QuadResult bose_einstein_j_folded(const TripartiteDims& dims, double tol) {
    check_dims(dims);
    if (!(tol > 0.0)) throw std::domain_error("bose_einstein_j_folded: tol must be > 0");
    const double c = static_cast<double>(dims.d_a) * dims.d_b;
    QuadConfig cfg;
    cfg.abs_tol = tol;
    return integrate_finite(
        [&dims](double u) { return bose_einstein_folded_integrand(dims, u); }, 0.0, std::sqrt(c),
        cfg);
}

QuadResult mi_closed_form(const TripartiteDims& dims, double tol) {
    check_dims(dims);
    require_page_regime(dims, "mi_closed_form");
    if (!(tol > 0.0)) throw std::domain_error("mi_closed_form: tol must be > 0");
    const double prefactor = (static_cast<double>(dims.d_a) * dims.d_a - 1.0) *
                             (static_cast<double>(dims.d_b) * dims.d_b - 1.0);
    const double j_tol = std::max(tol / (4.0 * std::max(prefactor, 1.0)), 1e-16);
    const QuadResult j = bose_einstein_j_folded(dims, j_tol);
    QuadResult out;
    out.value = prefactor * (0.5 / static_cast<double>(dims.n()) - 2.0 * j.value);
    out.abs_error_estimate = 2.0 * prefactor * j.abs_error_estimate + 1e-15 * std::fabs(out.value);
    out.evaluations = j.evaluations;
    return out;
}

PartialFractionPair partial_fraction_check(int d_a, int d_b, double u) {
    if (d_a < 2 || d_b < 2) {
        throw std::domain_error("partial_fraction_check: require d_a,d_b >= 2");
    }
    const double c = static_cast<double>(d_a) * d_b;
    const double u2 = u * u;
    PartialFractionPair out;
    out.lhs = rational_factor(d_a, d_b, u);
    const double pole_sum = u / (u2 + 1.0) - u / (u2 + static_cast<double>(d_a) * d_a) -
                            u / (u2 + static_cast<double>(d_b) * d_b) + u / (u2 + c * c);
    out.rhs = pole_sum / ((static_cast<double>(d_a) * d_a - 1.0) *
                          (static_cast<double>(d_b) * d_b - 1.0));
    return out;
}

double factor_g(const TripartiteDims& dims, double tol) {
    check_dims(dims);
    require_page_regime(dims, "factor_g");
    const QuadResult j = bose_einstein_j_folded(dims, tol);
    return 0.5 / static_cast<double>(dims.n()) - 2.0 * j.value;
}

}  // namespace typicality
