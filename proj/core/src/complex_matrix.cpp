#include "typicality/complex_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace typicality {

namespace {

double offdiag_norm(const CMatrix& a) {
    double sum = 0.0;
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) {
            if (i != j) sum += std::norm(a(i, j));
        }
    }
    return std::sqrt(sum);
}

double frobenius_norm(const CMatrix& a) {
    double sum = 0.0;
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) sum += std::norm(a(i, j));
    }
    return std::sqrt(sum);
}

}  // namespace

std::vector<double> hermitian_eigenvalues(const CMatrix& input) {
    const int d = input.rows();
    if (d != input.cols()) throw std::invalid_argument("hermitian_eigenvalues: matrix not square");
    if (d == 0) return {};

    // Tolerate (and average away) hermiticity error up to 1e-12.
    CMatrix a(d, d);
    double scale = 0.0;
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) scale = std::max(scale, std::abs(input(i, j)));
    }
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            const std::complex<double> herm_err = input(i, j) - std::conj(input(j, i));
            if (std::abs(herm_err) > 1e-12 * std::max(1.0, scale)) {
                throw std::invalid_argument("hermitian_eigenvalues: matrix not Hermitian");
            }
            a(i, j) = 0.5 * (input(i, j) + std::conj(input(j, i)));
        }
    }

    const double frob = frobenius_norm(a);
    if (frob == 0.0) return std::vector<double>(d, 0.0);

    constexpr int kMaxSweeps = 100;
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        if (offdiag_norm(a) <= 1e-14 * frob) break;
        if (sweep == kMaxSweeps - 1) {
            throw std::runtime_error("hermitian_eigenvalues: Jacobi did not converge in 100 sweeps");
        }
        for (int p = 0; p < d - 1; ++p) {
            for (int q = p + 1; q < d; ++q) {
                const double b = std::abs(a(p, q));
                if (b <= 1e-300) continue;
                const std::complex<double> phase = a(p, q) / b;
                const double alpha = a(p, p).real();
                const double delta = a(q, q).real();
                const double tau = (delta - alpha) / (2.0 * b);
                const double t = tau >= 0.0 ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                            : -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const std::complex<double> s_phase = s * phase;

                // A <- A U with U = [[c, s e^{i phi}], [-s e^{-i phi}, c]]
                // on columns (p,q), then A <- U^dagger A on rows (p,q).
                for (int k = 0; k < d; ++k) {
                    const std::complex<double> akp = a(k, p);
                    const std::complex<double> akq = a(k, q);
                    a(k, p) = c * akp - std::conj(s_phase) * akq;
                    a(k, q) = s_phase * akp + c * akq;
                }
                for (int k = 0; k < d; ++k) {
                    const std::complex<double> apk = a(p, k);
                    const std::complex<double> aqk = a(q, k);
                    a(p, k) = c * apk - s_phase * aqk;
                    a(q, k) = std::conj(s_phase) * apk + c * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
            }
        }
    }

    std::vector<double> eig(d);
    for (int i = 0; i < d; ++i) eig[i] = a(i, i).real();
    std::sort(eig.begin(), eig.end(), std::greater<double>());
    return eig;
}

}  // namespace typicality
