#include "typicality/pclt.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "typicality/special_functions.hpp"

namespace typicality {

namespace {

void check_dims(const SubsystemDims& dims) {
    if (dims.d_s < 2) throw std::domain_error("SubsystemDims: d_s must be >= 2");
    if (dims.d_e < 1) throw std::domain_error("SubsystemDims: d_e must be >= 1");
}

double beta_density(const BetaLaw& law, double p) {
    if (p < 0.0 || p > 1.0) throw std::domain_error("beta density: p must be in [0,1]");
    // Boundary values by the sign of the vanishing exponent; alpha,beta >= 1
    // for every admissible dims, so no divergent endpoints arise here.
    if (p == 0.0) {
        if (law.alpha > 1.0) return 0.0;
        return std::exp((law.beta - 1.0) * std::log1p(-p) - log_beta(law.alpha, law.beta));
    }
    if (p == 1.0) {
        if (law.beta > 1.0) return 0.0;
        return std::exp((law.alpha - 1.0) * std::log(p) - log_beta(law.alpha, law.beta));
    }
    return std::exp((law.alpha - 1.0) * std::log(p) + (law.beta - 1.0) * std::log1p(-p) -
                    log_beta(law.alpha, law.beta));
}

}  // namespace

double projected_density(const ProjectionGeometry& geom, std::span<const double> x) {
    if (geom.m < 1 || geom.n - geom.m < 1) {
        throw std::domain_error("projected_density: require 1 <= m <= n-1");
    }
    if (static_cast<int>(x.size()) != geom.m) {
        throw std::invalid_argument("projected_density: x.size() must equal geom.m");
    }
    const double r2 = std::inner_product(x.begin(), x.end(), x.begin(), 0.0);
    const double exponent = 0.5 * (geom.n - geom.m - 2);
    const double log_norm = std::lgamma(0.5 * geom.n) - 0.5 * geom.m * std::log(M_PI) -
                            std::lgamma(0.5 * (geom.n - geom.m));
    if (r2 > 1.0) return 0.0;
    if (r2 == 1.0) {
        if (exponent > 0.0) return 0.0;
        if (exponent == 0.0) return std::exp(log_norm);
        return INFINITY;  // n-m == 1: integrable edge divergence
    }
    return std::exp(log_norm + exponent * std::log1p(-r2));
}

BetaLaw radial_squared_law(const ProjectionGeometry& geom) {
    if (geom.m < 1 || geom.n - geom.m < 1) {
        throw std::domain_error("radial_squared_law: require 1 <= m <= n-1");
    }
    return BetaLaw{0.5 * geom.m, 0.5 * (geom.n - geom.m)};
}

BetaLaw pk_law(const SubsystemDims& dims) {
    check_dims(dims);
    return BetaLaw{static_cast<double>(dims.d_e),
                   static_cast<double>(dims.d_e) * (dims.d_s - 1)};
}

PkMoments pk_moments(const SubsystemDims& dims) {
    check_dims(dims);
    const double ds = dims.d_s;
    const double n = static_cast<double>(dims.n());
    const BetaLaw law = pk_law(dims);
    const double a = law.alpha, b = law.beta, s = a + b;
    PkMoments out;
    out.mean = 1.0 / ds;
    out.variance = (ds - 1.0) / (ds * ds * (n + 1.0));
    out.excess_kurtosis = 6.0 * ((a - b) * (a - b) * (s + 1.0) - a * b * (s + 2.0)) /
                          (a * b * (s + 2.0) * (s + 3.0));
    return out;
}

double pk_density(const SubsystemDims& dims, double p) {
    check_dims(dims);
    return beta_density(pk_law(dims), p);
}

double gaussian_matched_density(const SubsystemDims& dims, double p) {
    const PkMoments mom = pk_moments(dims);
    const double sigma = std::sqrt(mom.variance);
    const double z = (p - mom.mean) / sigma;
    return std::exp(-0.5 * z * z) / (sigma * std::sqrt(2.0 * M_PI));
}

TailComparison tail_comparison(const SubsystemDims& dims, double threshold) {
    check_dims(dims);
    if (!(threshold > 0.0) || threshold > 1.0) {
        throw std::domain_error("tail_comparison: threshold must be in (0,1]");
    }
    const BetaLaw law = pk_law(dims);
    const PkMoments mom = pk_moments(dims);
    TailComparison out;
    out.threshold = threshold;
    out.exact_density = pk_density(dims, threshold);
    out.gaussian_density = gaussian_matched_density(dims, threshold);
    out.exact_tail =
        threshold == 1.0 ? 0.0 : 1.0 - reg_incomplete_beta(threshold, law.alpha, law.beta);
    const double sigma = std::sqrt(mom.variance);
    out.gaussian_tail = 0.5 * std::erfc((threshold - mom.mean) / (sigma * std::sqrt(2.0)));
    return out;
}

std::vector<DensityGridRow> density_grid(const SubsystemDims& dims, int grid_points) {
    check_dims(dims);
    if (grid_points < 2) throw std::domain_error("density_grid: grid_points must be >= 2");
    const BetaLaw law = pk_law(dims);
    const PkMoments mom = pk_moments(dims);
    const double sigma = std::sqrt(mom.variance);
    std::vector<DensityGridRow> rows;
    rows.reserve(grid_points);
    for (int i = 0; i < grid_points; ++i) {
        const double p = 1.05 * i / (grid_points - 1);
        DensityGridRow row;
        row.p = p;
        row.exact_density = p <= 1.0 ? pk_density(dims, p) : 0.0;
        row.gaussian_density = gaussian_matched_density(dims, p);
        row.exact_tail = p >= 1.0 ? 0.0 : 1.0 - reg_incomplete_beta(p, law.alpha, law.beta);
        row.gaussian_tail = 0.5 * std::erfc((p - mom.mean) / (sigma * std::sqrt(2.0)));
        rows.push_back(row);
    }
    return rows;
}

}  // namespace typicality
