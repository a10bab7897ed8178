#pragma once

#include <stdexcept>
#include <vector>

#include "typicality/quadrature.hpp"
#include "typicality/rational.hpp"

namespace typicality {

// Requested evaluation is only valid when d_a*d_b <= d_e.
class RegimeError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A x B x E split of an N-dimensional Haar state, N = d_a*d_b*d_e.
struct TripartiteDims {
    int d_a = 1;
    int d_b = 1;
    int d_e = 1;
    long long n() const { return static_cast<long long>(d_a) * d_b * d_e; }
    // Both marginals and the joint AB block are the smaller side of their
    // bipartition; outside this regime the AB entropy swaps roles with E.
    bool page_regime() const { return static_cast<long long>(d_a) * d_b <= d_e; }
};

struct MIDecomposition {
    double diagonal_mi = 0.0;             // harmonic-number combination
    double eigenvalue_correction = 0.0;   // total - diagonal_mi
    double total = 0.0;
    double coherence_term = 0.0;          // (d_a^2-1)(d_b^2-1)/(2N)
    double cartan_term = 0.0;             // (d_a-1)(d_b-1)/(2N)
};

struct SeriesEvaluation {
    int order_k = 0;
    double value = 0.0;
    std::vector<double> terms;            // signed term k at index k-1
    double truncation_estimate = 0.0;     // |term_{order_k+1}|
    // Exact-rational mirrors of the floating data; the only floating step in
    // a term is the final rational-to-double conversion.
    std::vector<Rational> terms_exact;
    std::vector<Rational> coefficients;   // |B_{2k}/(2k)|
    Rational leading_exact;
    Rational truncation_exact;
};

struct RationalDelta {
    Rational assembled;   // -sum of the three per-block corrections
    Rational coherence;   // (d_a^2-1)(d_b^2-1)/(2N)
    Rational cartan;      // (d_a-1)(d_b-1)/(2N)
};

struct PartialFractionPair {
    double lhs = 0.0;
    double rhs = 0.0;
};

// Ensemble-averaged mutual information <S(A)> + <S(B)> - <S(AB)> with every
// entropy taken from the Page split (arguments auto-ordered so the smaller
// side is the subsystem). Valid in both regimes; exactly symmetric in A,B
// and exactly zero when d_a == 1 or d_b == 1.
MIDecomposition mi_exact(const TripartiteDims& dims);

// mi_exact.total as an exact rational (page regime only).
Rational mi_exact_rational(const TripartiteDims& dims);

// Harmonic combination plus (coherence - cartan)/(2N) applied verbatim, i.e.
// assuming the AB block is the smaller side; overestimates the answer when
// the regime fails.
double mi_naive_factorized(const TripartiteDims& dims);

// Leading large-N term (d_a^2-1)(d_b^2-1)/(2N). Throws RegimeError outside
// the page regime.
double mi_leading(const TripartiteDims& dims);

// Asymptotic series: leading - sum_{k=1}^{K} B_{2k}/(2k N^{2k}) *
// (d_a^{2k}-1)(d_b^{2k}-1). 0 <= k_terms <= 64; page regime only.
SeriesEvaluation mi_bernoulli_series(const TripartiteDims& dims, int k_terms);

// Same series written through zeta(1-2k) = -B_{2k}/(2k); terms are
// bit-identical to mi_bernoulli_series.
SeriesEvaluation mi_zeta_series(const TripartiteDims& dims, int k_terms);

// Index k in [1, k_cap] minimizing |term_k| (optimal asymptotic truncation).
int optimal_truncation_order(const TripartiteDims& dims, int k_cap);

// (d_a^{2k}-1) + (d_b^{2k}-1) - (d_a^{2k} d_b^{2k}-1), exactly
// -(d_a^{2k}-1)(d_b^{2k}-1); exposed for exact-integer property testing.
BigInt collapse_identity(int d_a, int d_b, int k);

// The three rational 1/(2N) corrections assembled from the per-block Page
// corrections; exactly assembled == coherence - cartan.
RationalDelta rational_delta(int d_a, int d_b, long long n_total);

// Closed-form evaluation (d_a^2-1)(d_b^2-1) * (1/(2N) - 2J) with J from the
// folded Bose-Einstein integral. Page regime only.
QuadResult mi_closed_form(const TripartiteDims& dims, double tol = 1e-12);

// J as a semi-infinite integral of
//   u (C^2-u^4) / ((e^{2 pi u d_e}-1)(u^2+1)(u^2+d_a^2)(u^2+d_b^2)(u^2+C^2)),
// C = d_a*d_b, truncated where the kernel is below 1e-18.
QuadResult bose_einstein_j(const TripartiteDims& dims, double tol = 1e-12);

// Same J folded onto [0, sqrt(C)]: R(u) (f(u) - f(C/u)) with
// f(x) = 1/(e^{2 pi x d_e}-1); strictly positive integrand on the open
// interval and exactly 0 from the fold point on, the production path for
// mi_closed_form.
QuadResult bose_einstein_j_folded(const TripartiteDims& dims, double tol = 1e-12);

// Pointwise integrands, exposed for positivity and node-level checks.
double bose_einstein_integrand(const TripartiteDims& dims, double u);
double bose_einstein_folded_integrand(const TripartiteDims& dims, double u);

// Rational factor R(u) of the integrand against its partial-fraction
// expansion; the two must agree to ~1e-13 relative. d_a, d_b >= 2.
PartialFractionPair partial_fraction_check(int d_a, int d_b, double u);

// Dimension-free factor G = 1/(2N) - 2J; multiplied by
// (d_a^2-1)(d_b^2-1) this is the mutual information. Page regime only.
double factor_g(const TripartiteDims& dims, double tol = 1e-12);

}  // namespace typicality
