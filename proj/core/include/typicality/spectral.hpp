#pragma once

#include "typicality/pclt.hpp"
#include "typicality/rational.hpp"

namespace typicality {

struct PuritySplit {
    double diagonal = 0.0;
    double off_diagonal = 0.0;
    double total = 0.0;
};

struct PuritySplitExact {
    Rational diagonal;
    Rational off_diagonal;
    Rational total;
};

struct EntropySplit {
    double diagonal_entropy = 0.0;
    double eigenvalue_correction = 0.0;  // always <= 0
    double von_neumann = 0.0;            // sum of the two
};

struct BlochVariancePrediction {
    double per_generator = 0.0;  // identical for every generator
    double cartan_total = 0.0;
    double offdiag_total = 0.0;
    int cartan_count = 0;
    int offdiag_count = 0;
};

// Ensemble-averaged purity of the reduced state, split into the diagonal
// (occupancy) and off-diagonal (coherence) contributions:
//   diagonal (d_e+1)/(N+1), off-diagonal (d_s-1)/(N+1), total (d_s+d_e)/(N+1).
PuritySplit lubkin_purity(const SubsystemDims& dims);
PuritySplitExact lubkin_purity_exact(const SubsystemDims& dims);

// <P_k P_l> for distinct occupancies of a flat Dirichlet on N outcomes.
Rational dirichlet_cross_moment(long long n_total);

// Ensemble-averaged von Neumann entropy of the smaller part of a bipartite
// Haar state, split as
//   diagonal_entropy       = psi(N+1) - psi(d_env+1)
//   eigenvalue_correction  = -(d_sub-1)/(2 d_env)
// Requires 1 <= d_sub <= d_env.
EntropySplit page_entropy(int d_sub, int d_env);

// <P_k ln P_k> for one occupancy: (1/d_s)(psi(d_e+1) - psi(N+1)).
double dirichlet_plogp(const SubsystemDims& dims);

// Large-N form ln d_s - (d_s^2-1)/(2N); requires d_s <= d_e.
double entropy_leading(const SubsystemDims& dims);

// Predicted ensemble variance of generalized Bloch components: every
// generator carries 2/(d(N+1)); totals split by family. Requires d | N.
BlochVariancePrediction bloch_variance_prediction(int d, long long n_total);

}  // namespace typicality
