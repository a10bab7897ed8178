#include "typicality/spectral.hpp"

#include <cmath>
#include <stdexcept>

#include "typicality/special_functions.hpp"

namespace typicality {

namespace {

void check_dims(const SubsystemDims& dims) {
    if (dims.d_s < 2) throw std::domain_error("SubsystemDims: d_s must be >= 2");
    if (dims.d_e < 1) throw std::domain_error("SubsystemDims: d_e must be >= 1");
}

}  // namespace

PuritySplitExact lubkin_purity_exact(const SubsystemDims& dims) {
    check_dims(dims);
    const Rational np1 = Rational(dims.n() + 1);
    PuritySplitExact out;
    out.diagonal = Rational(dims.d_e + 1) / np1;
    out.off_diagonal = Rational(dims.d_s - 1) / np1;
    out.total = Rational(dims.d_s + dims.d_e) / np1;
    return out;
}

PuritySplit lubkin_purity(const SubsystemDims& dims) {
    const PuritySplitExact exact = lubkin_purity_exact(dims);
    return PuritySplit{to_double(exact.diagonal), to_double(exact.off_diagonal),
                       to_double(exact.total)};
}

Rational dirichlet_cross_moment(long long n_total) {
    if (n_total < 2) throw std::domain_error("dirichlet_cross_moment: need at least 2 outcomes");
    return Rational(1) / (Rational(n_total) * Rational(n_total + 1));
}

EntropySplit page_entropy(int d_sub, int d_env) {
    if (d_sub < 1 || d_env < 1) throw std::domain_error("page_entropy: dims must be >= 1");
    if (d_sub > d_env) throw std::invalid_argument("page_entropy: subsystem exceeds environment");
    const long long n = static_cast<long long>(d_sub) * d_env;
    EntropySplit out;
    // psi at integer arguments evaluated through harmonic numbers; the
    // Euler-Mascheroni terms cancel in the difference.
    out.diagonal_entropy = harmonic(n) - harmonic(d_env);
    out.eigenvalue_correction = -static_cast<double>(d_sub - 1) / (2.0 * d_env);
    out.von_neumann = out.diagonal_entropy + out.eigenvalue_correction;
    return out;
}

double dirichlet_plogp(const SubsystemDims& dims) {
    check_dims(dims);
    return (harmonic(dims.d_e) - harmonic(dims.n())) / dims.d_s;
}

double entropy_leading(const SubsystemDims& dims) {
    check_dims(dims);
    if (dims.d_s > dims.d_e) {
        throw std::invalid_argument("entropy_leading: subsystem exceeds environment");
    }
    const double ds = dims.d_s;
    return std::log(ds) - (ds * ds - 1.0) / (2.0 * static_cast<double>(dims.n()));
}

BlochVariancePrediction bloch_variance_prediction(int d, long long n_total) {
    if (d < 2) throw std::domain_error("bloch_variance_prediction: d must be >= 2");
    if (n_total < d || n_total % d != 0) {
        throw std::invalid_argument("bloch_variance_prediction: d must divide N");
    }
    BlochVariancePrediction out;
    out.per_generator = 2.0 / (d * (static_cast<double>(n_total) + 1.0));
    out.cartan_count = d - 1;
    out.offdiag_count = d * (d - 1);
    out.cartan_total = out.per_generator * out.cartan_count;
    out.offdiag_total = out.per_generator * out.offdiag_count;
    return out;
}

}  // namespace typicality
