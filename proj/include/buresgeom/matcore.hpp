#pragma once

#include <Eigen/Dense>
#include <complex>

#include "buresgeom/errors.hpp"
#include "buresgeom/rng.hpp"

namespace buresgeom {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXd;

/// Field tag: numeric value is the repulsion exponent beta.
enum class Field : int { Real = 1, Complex = 2 };

inline int beta_of(Field f) { return static_cast<int>(f); }

/// Validated square matrix equal to its conjugate transpose.
/// Field::Real additionally requires exactly zero imaginary parts.
class HermMatrix {
public:
    static HermMatrix make(const Matrix& entries, Field field);

    int dim() const { return static_cast<int>(entries_.rows()); }
    Field field() const { return field_; }
    int beta() const { return beta_of(field_); }
    const Matrix& entries() const { return entries_; }

    double trace() const { return entries_.trace().real(); }

private:
    HermMatrix(Matrix entries, Field field) : entries_(std::move(entries)), field_(field) {}

    Matrix entries_;
    Field field_;
};

/// values nondecreasing; vectors' columns orthonormal
/// (unitary for Field::Complex, orthogonal for Field::Real).
struct EigenDecomposition {
    Vector values;
    Matrix vectors;
};

/// Spectral decomposition of a Hermitian matrix. Deterministic for fixed input;
/// reconstruction V diag(values) V^dagger matches the input to 1e-10.
EigenDecomposition eigh(const HermMatrix& m);

/// PSD square root. Eigenvalues in [-tol, 0) are clamped to zero before the
/// root; an eigenvalue below -tol raises DomainError naming it.
/// tol < 0 selects the default 1e-10 * max|eigenvalue|.
HermMatrix sqrt_psd(const HermMatrix& m, double tol = -1.0);

/// Haar-distributed unitary (Field::Complex) or orthogonal (Field::Real)
/// matrix: Gaussian matrix orthonormalized with the triangular factor's
/// diagonal made positive. Without that phase fix the QR output is not Haar.
Matrix haar_random(int n, Field field, RngStream& rng);

/// log Gamma(x) for x > 0.
double log_gamma(double x);

/// Zero out imaginary roundoff noise for Field::Real values so the
/// exact-zero-imag invariant survives complex intermediate arithmetic.
inline Matrix enforce_field(Matrix m, Field field) {
    if (field == Field::Real) {
        m.imag().setZero();
    }
    return m;
}

} // namespace buresgeom
