#include "buresgeom/matcore.hpp"

#include <cmath>
#include <string>

namespace buresgeom {

namespace {
constexpr double kHermTol = 1e-12;
}

HermMatrix HermMatrix::make(const Matrix& entries, Field field) {
    std::vector<std::string> violations;
    if (entries.rows() != entries.cols() || entries.rows() < 1) {
        violations.push_back("matrix must be square and nonempty");
        throw ValidationError(std::move(violations));
    }
    const double herm_dev = (entries - entries.adjoint()).cwiseAbs().maxCoeff();
    if (herm_dev > kHermTol) {
        violations.push_back("not Hermitian: max |A - A^dagger| = " + std::to_string(herm_dev));
    }
    if (field == Field::Real && entries.imag().cwiseAbs().maxCoeff() != 0.0) {
        violations.push_back("Field::Real requires exactly zero imaginary parts");
    }
    if (!violations.empty()) {
        throw ValidationError(std::move(violations));
    }
    // Symmetrize roundoff away so downstream solvers see an exact Hermitian.
    Matrix sym = 0.5 * (entries + entries.adjoint());
    if (field == Field::Real) {
        sym.imag().setZero();
    }
    return HermMatrix(std::move(sym), field);
}

EigenDecomposition eigh(const HermMatrix& m) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(m.entries());
    if (solver.info() != Eigen::Success) {
        throw DomainError("eigendecomposition failed to converge");
    }
    EigenDecomposition d;
    d.values = solver.eigenvalues(); // nondecreasing
    d.vectors = solver.eigenvectors();
    return d;
}

HermMatrix sqrt_psd(const HermMatrix& m, double tol) {
    EigenDecomposition d = eigh(m);
    if (tol < 0.0) {
        tol = 1e-10 * d.values.cwiseAbs().maxCoeff();
    }
    Vector roots(d.values.size());
    for (Eigen::Index i = 0; i < d.values.size(); ++i) {
        const double v = d.values[i];
        if (v < -tol) {
            throw DomainError("not positive semidefinite: eigenvalue " + std::to_string(v) +
                              " below -tol = " + std::to_string(-tol));
        }
        // clamp the whole [-tol, tol] band: sqrt of eigenvalue roundoff on a
        // rank-deficient input would otherwise surface as sqrt(1e-16) = 1e-8
        roots[i] = v > tol ? std::sqrt(v) : 0.0;
    }
    Matrix root = d.vectors * roots.asDiagonal() * d.vectors.adjoint();
    return HermMatrix::make(enforce_field(0.5 * (root + root.adjoint()), m.field()), m.field());
}

Matrix haar_random(int n, Field field, RngStream& rng) {
    if (n < 1) {
        throw DomainError("haar_random: dimension must be >= 1");
    }
    Matrix g(n, n);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            if (field == Field::Complex) {
                g(i, j) = Complex(rng.normal(), rng.normal()) / std::sqrt(2.0);
            } else {
                g(i, j) = Complex(rng.normal(), 0.0);
            }
        }
    }
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ();
    const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < n; ++j) {
        const Complex rjj = r(j, j);
        const double mag = std::abs(rjj);
        const Complex phase = mag > 0.0 ? rjj / mag : Complex(1.0, 0.0);
        q.col(j) *= phase;
    }
    if (field == Field::Real) {
        q.imag().setZero();
    }
    return q;
}

double log_gamma(double x) {
    if (!(x > 0.0)) {
        throw DomainError("log_gamma: argument must be positive, got " + std::to_string(x));
    }
    int sign = 0;
    return lgamma_r(x, &sign);
}

} // namespace buresgeom
