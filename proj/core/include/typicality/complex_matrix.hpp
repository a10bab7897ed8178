#pragma once

#include <complex>
#include <vector>

namespace typicality {

// Minimal dense complex matrix, row-major; sized for reduced states of a few
// dozen dimensions, not for large-scale linear algebra.
class CMatrix {
public:
    CMatrix() = default;
    CMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

    static CMatrix identity(int d) {
        CMatrix m(d, d);
        for (int i = 0; i < d; ++i) m(i, i) = 1.0;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    std::complex<double>& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const std::complex<double>& operator()(int i, int j) const {
        return a_[static_cast<std::size_t>(i) * cols_ + j];
    }

    const std::vector<std::complex<double>>& data() const { return a_; }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<std::complex<double>> a_;
};

// Eigenvalues of a Hermitian matrix by cyclic complex Jacobi rotations,
// sorted descending. Converged when the off-diagonal Frobenius norm falls
// below 1e-14 * ||A||_F; throws std::runtime_error after 100 sweeps.
std::vector<double> hermitian_eigenvalues(const CMatrix& a);

}  // namespace typicality
