#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "typicality/complex_matrix.hpp"
#include "typicality/counter_rng.hpp"
#include "typicality/mutual_information.hpp"
#include "typicality/pclt.hpp"

namespace typicality {

inline constexpr int kP1Bins = 512;
inline constexpr std::uint64_t kP1ReservoirCap = 100000;

// Fixed accumulation granularity: statistics are gathered per block of
// sample indices and merged in block order, so results are bitwise
// independent of the worker count.
inline constexpr std::uint64_t kEnsembleBlock = 1024;

struct PureState {
    SubsystemDims dims;
    std::vector<std::complex<double>> coefficients;  // index k*d_e + j, unit norm
};

struct ReducedDensity {
    SubsystemDims dims;
    CMatrix rho;  // d_s x d_s, Hermitian, unit trace
};

// Generalized Gell-Mann generators, Tr(g_a g_b) = 2 delta_ab: d-1 diagonal
// (cartan) generators and d(d-1) off-diagonal symmetric/antisymmetric pairs.
struct GellMannBasis {
    int d = 0;
    std::vector<CMatrix> cartan;
    std::vector<CMatrix> offdiag;
    int total_count() const { return static_cast<int>(cartan.size() + offdiag.size()); }
};

struct EntropyRecord {
    double von_neumann = 0.0;
    double diagonal = 0.0;
    double purity = 0.0;
};

// Welford accumulator with the parallel merge rule.
struct StreamingMoments {
    std::uint64_t n = 0;
    double mean = 0.0;
    double m2 = 0.0;

    void add(double x) {
        ++n;
        const double delta = x - mean;
        mean += delta / static_cast<double>(n);
        m2 += delta * (x - mean);
    }
    void merge(const StreamingMoments& o) {
        if (o.n == 0) return;
        if (n == 0) {
            *this = o;
            return;
        }
        const double na = static_cast<double>(n), nb = static_cast<double>(o.n);
        const double delta = o.mean - mean;
        mean += delta * nb / (na + nb);
        m2 += o.m2 + delta * delta * na * nb / (na + nb);
        n += o.n;
    }
    double variance() const { return n > 1 ? m2 / static_cast<double>(n - 1) : 0.0; }
    double stderr_of_mean() const {
        return n > 0 ? std::sqrt(variance() / static_cast<double>(n)) : 0.0;
    }
};

struct EnsembleStats {
    SubsystemDims dims;
    std::uint64_t count = 0;
    std::vector<StreamingMoments> pk;      // occupancy k, k = 0..d_s-1
    StreamingMoments purity;
    StreamingMoments von_neumann;
    StreamingMoments diagonal_entropy;
    StreamingMoments plogp;                // (1/d_s) sum_k P_k ln P_k
    StreamingMoments cross_moment;         // |c_{0,0}|^2 |c_{1,m}|^2, distinct pair
    std::vector<StreamingMoments> bloch_sq;  // r_a^2; cartan family first
    std::vector<std::uint64_t> p1_histogram = std::vector<std::uint64_t>(kP1Bins, 0);
    std::vector<double> p1_samples;        // first kP1ReservoirCap values of P_1
    std::uint64_t majorization_violations = 0;

    void merge(const EnsembleStats& other);
};

struct MiEnsembleResult {
    TripartiteDims dims;
    std::uint64_t count = 0;
    StreamingMoments mi;
    double mean() const { return mi.mean; }
    double stderr_mean() const { return mi.stderr_of_mean(); }
};

// Haar-uniform pure state: 2N standard normals (Box-Muller on the counter
// stream), normalized.
PureState sample_state(const SubsystemDims& dims, CounterRng& rng);

// Reduced density over the environment factor.
ReducedDensity partial_trace(const PureState& state);

std::vector<double> hermitian_eigenvalues(const ReducedDensity& rho);

// Von Neumann and diagonal (occupancy) Shannon entropies plus purity;
// eigenvalues at or below 1e-15 contribute zero.
EntropyRecord entropies(const ReducedDensity& rho);

GellMannBasis gellmann_basis(int d);

// r_a = Re Tr(rho g_a), cartan components first; throws if an imaginary
// residue above 1e-12 survives.
std::vector<double> bloch_components(const ReducedDensity& rho, const GellMannBasis& basis);

// samples Haar draws on (d_s, d_e); reproducible for fixed seed and
// independent of workers.
EnsembleStats run_ensemble(const SubsystemDims& dims, std::uint64_t samples, std::uint64_t seed,
                           int workers = 1);

// Per-sample I = S(A) + S(B) - S(AB) on tripartite Haar draws.
MiEnsembleResult mi_ensemble(const TripartiteDims& dims, std::uint64_t samples,
                             std::uint64_t seed, int workers = 1);

// Kolmogorov-Smirnov distance between retained P_1 samples and the analytic
// occupancy law of dims. Requires at least 1000 samples; when the reservoir
// is truncated the statistic falls back to histogram edges plus a
// conservative per-bin mass bound.
double ks_statistic(const EnsembleStats& stats, const SubsystemDims& dims);

}  // namespace typicality
