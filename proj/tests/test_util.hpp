#pragma once

#include <Eigen/Dense>
#include <initializer_list>

#include "buresgeom/states.hpp"

namespace buresgeom::test {

/// Density matrix from real diagonal entries.
inline DensityMatrix diag_state(std::initializer_list<double> diag,
                                Field field = Field::Complex) {
    Eigen::VectorXd v(static_cast<Eigen::Index>(diag.size()));
    Eigen::Index i = 0;
    for (double d : diag) {
        v[i++] = d;
    }
    Matrix m = v.cast<Complex>().asDiagonal();
    return DensityMatrix::make(HermMatrix::make(m, field));
}

inline HermMatrix herm(const Matrix& m, Field field = Field::Complex) {
    return HermMatrix::make(m, field);
}

/// Random Hermitian with entries O(1).
inline Matrix random_hermitian(int n, Field field, RngStream& rng) {
    Matrix g(n, n);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            g(i, j) = field == Field::Complex ? Complex(rng.normal(), rng.normal())
                                              : Complex(rng.normal(), 0.0);
        }
    }
    return enforce_field(0.5 * (g + g.adjoint()), field);
}

} // namespace buresgeom::test
