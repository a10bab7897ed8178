#pragma once

#include <span>
#include <vector>

namespace typicality {

// Uniform point on S^{n-1} projected onto m coordinates.
struct ProjectionGeometry {
    int n = 2;  // ambient real dimension
    int m = 1;  // projected coordinates, 1 <= m <= n-1
};

struct BetaLaw {
    double alpha = 1.0;
    double beta = 1.0;
};

// Bipartite split: subsystem dimension d_s, environment dimension d_e.
struct SubsystemDims {
    int d_s = 2;
    int d_e = 1;
    long long n() const { return static_cast<long long>(d_s) * d_e; }
};

struct PkMoments {
    double mean = 0.0;
    double variance = 0.0;
    double excess_kurtosis = 0.0;
};

struct TailComparison {
    double threshold = 0.0;
    double exact_density = 0.0;
    double gaussian_density = 0.0;
    double exact_tail = 0.0;
    double gaussian_tail = 0.0;
};

struct DensityGridRow {
    double p = 0.0;
    double exact_density = 0.0;
    double gaussian_density = 0.0;
    double exact_tail = 0.0;
    double gaussian_tail = 0.0;
};

// Joint density of the m projected coordinates at the point x:
//   Gamma(n/2) / (pi^{m/2} Gamma((n-m)/2)) * (1-|x|^2)^{(n-m-2)/2}
// and 0 outside the unit ball. Requires n-m >= 1 and x.size() == m.
double projected_density(const ProjectionGeometry& geom, std::span<const double> x);

// |X|^2 of the m-coordinate projection: Beta(m/2, (n-m)/2).
BetaLaw radial_squared_law(const ProjectionGeometry& geom);

// Law of a single diagonal occupancy P_k of the reduced state:
// Beta(d_e, d_e*(d_s-1)). Requires d_s >= 2, d_e >= 1.
BetaLaw pk_law(const SubsystemDims& dims);

// Mean 1/d_s, variance (d_s-1)/(d_s^2 (N+1)), and the excess kurtosis of
// pk_law. The excess kurtosis is negative exactly when d_s <= 3: for
// d_s >= 4 the law is leptokurtic for every d_e, since
// (d_s-2)^2 (N+1) > (d_s-1)(N+2) already at d_e = 1.
PkMoments pk_moments(const SubsystemDims& dims);

// Density of pk_law at p in [0,1], evaluated in log space.
double pk_density(const SubsystemDims& dims, double p);

// Normal density with the same mean and variance as pk_law.
double gaussian_matched_density(const SubsystemDims& dims, double p);

// Exact vs matched-Gaussian density and upper (one-sided) tail weight at a
// threshold in (0,1].
TailComparison tail_comparison(const SubsystemDims& dims, double threshold);

// Uniform grid on [0, 1.05]: exact quantities are 0 beyond the support.
std::vector<DensityGridRow> density_grid(const SubsystemDims& dims, int grid_points);

}  // namespace typicality
