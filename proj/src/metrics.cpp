#include "buresgeom/metrics.hpp"

#include <cmath>
#include <string>

namespace buresgeom {

namespace {

void require_compatible(const DensityMatrix& a, const DensityMatrix& b) {
    if (a.dim() != b.dim()) {
        throw DomainError("dimension mismatch: " + std::to_string(a.dim()) + " vs " +
                          std::to_string(b.dim()));
    }
}

Vector difference_spectrum(const DensityMatrix& a, const DensityMatrix& b) {
    const Matrix d = a.entries() - b.entries();
    Eigen::SelfAdjointEigenSolver<Matrix> solver(d);
    return solver.eigenvalues();
}

constexpr double kPurityTol = 1e-10;
constexpr double kProbTol = 1e-12;

} // namespace

double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
    require_compatible(rho, sigma);
    return difference_spectrum(rho, sigma).cwiseAbs().sum();
}

double hs_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
    require_compatible(rho, sigma);
    const Matrix d = rho.entries() - sigma.entries();
    return std::sqrt(std::max(0.0, (d * d).trace().real()));
}

double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
    require_compatible(rho, sigma);
    // the trace-norm form || sqrt(rho) sqrt(sigma) ||_1^2 of the fidelity:
    // singular values of the product carry absolute (not square-rooted)
    // roundoff, which keeps rank-deficient states accurate to ~1e-14
    const Matrix a = sqrt_psd(rho.herm()).entries() * sqrt_psd(sigma.herm()).entries();
    Eigen::JacobiSVD<Matrix> svd(a);
    const double sum = svd.singularValues().sum();
    // roundoff can push f past 1 by ~1e-10; clamp to [0, 1]
    const double f = sum * sum;
    return std::min(1.0, std::max(0.0, f));
}

double bures_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
    const double f = fidelity(rho, sigma);
    return std::sqrt(std::max(0.0, 2.0 - 2.0 * std::sqrt(f)));
}

double bures_angle(const DensityMatrix& rho, const DensityMatrix& sigma) {
    const double f = fidelity(rho, sigma);
    return std::acos(std::min(1.0, std::sqrt(f)));
}

double fubini_study(const DensityMatrix& psi_a, const DensityMatrix& psi_b) {
    require_compatible(psi_a, psi_b);
    if (std::abs(psi_a.purity() - 1.0) > kPurityTol || std::abs(psi_b.purity() - 1.0) > kPurityTol) {
        throw DomainError("fubini_study requires pure states (Tr rho^2 = 1)");
    }
    const double kappa = (psi_a.entries() * psi_b.entries()).trace().real();
    const double root = std::sqrt(std::min(1.0, std::max(0.0, kappa)));
    return 2.0 * std::acos(root);
}

namespace {
void require_probability(const Vector& p, const char* name) {
    if (p.minCoeff() < 0.0) {
        throw DomainError(std::string(name) + ": negative entry");
    }
    if (std::abs(p.sum() - 1.0) > kProbTol) {
        throw DomainError(std::string(name) + ": entries sum to " + std::to_string(p.sum()));
    }
}
} // namespace

double bhattacharyya(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) {
        throw DomainError("bhattacharyya: length mismatch");
    }
    require_probability(a, "a");
    require_probability(b, "b");
    double sum = 0.0;
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        sum += std::sqrt(a[i] * b[i]);
    }
    return std::min(1.0, sum);
}

double hellinger(const Vector& a, const Vector& b) {
    return std::sqrt(std::max(0.0, 2.0 - 2.0 * bhattacharyya(a, b)));
}

double hubner_line_element(const DensityMatrix& rho, const HermMatrix& delta, double tol) {
    if (rho.dim() != delta.dim()) {
        throw DomainError("hubner_line_element: dimension mismatch");
    }
    const double dtrace = delta.trace();
    if (std::abs(dtrace) > 1e-12) {
        throw DomainError("hubner_line_element: delta has trace " + std::to_string(dtrace));
    }
    if (tol < 0.0) {
        tol = 1e-12 * rho.herm().trace();
    }
    const EigenDecomposition d = eigh(rho.herm());
    const Matrix e = d.vectors.adjoint() * delta.entries() * d.vectors;
    double sum = 0.0;
    for (Eigen::Index nu = 0; nu < e.rows(); ++nu) {
        for (Eigen::Index mu = 0; mu < e.cols(); ++mu) {
            const double denom = d.values[nu] + d.values[mu];
            if (denom < tol) {
                continue;
            }
            sum += std::norm(e(nu, mu)) / denom;
        }
    }
    return 0.5 * sum;
}

double mc_function(MCFunctionKind kind, double t) {
    if (t < 0.0) {
        throw DomainError("mc_function: t must be nonnegative");
    }
    switch (kind) {
    case MCFunctionKind::Min:
        return 2.0 * t / (t + 1.0);
    case MCFunctionKind::KuboMori: {
        if (t == 0.0) {
            return 0.0;
        }
        const double l = std::log(t);
        if (std::abs(t - 1.0) < 1e-8) {
            // series of (t-1)/log t about t = 1
            const double u = t - 1.0;
            return 1.0 + u / 2.0 - u * u / 12.0;
        }
        return (t - 1.0) / l;
    }
    case MCFunctionKind::Max:
        return 0.5 * (1.0 + t);
    }
    throw DomainError("mc_function: unknown kind");
}

double mc_c(MCFunctionKind kind, double x, double y) {
    if (!(x > 0.0) || !(y > 0.0)) {
        throw DomainError("mc_c: arguments must be positive");
    }
    return mc_function(kind, x / y) / y;
}

double monotone_squared_length(const Vector& a, const HermMatrix& b, MCFunctionKind kind) {
    if (a.size() != b.dim()) {
        throw DomainError("monotone_squared_length: dimension mismatch");
    }
    for (Eigen::Index j = 0; j < a.size(); ++j) {
        if (!(a[j] > 0.0)) {
            throw DomainError("monotone_squared_length: eigenvalues must be strictly positive");
        }
    }
    const Matrix& m = b.entries();
    double sum = 0.0;
    for (Eigen::Index j = 0; j < a.size(); ++j) {
        const double diag = m(j, j).real();
        sum += diag * diag / a[j];
    }
    for (Eigen::Index j = 0; j < a.size(); ++j) {
        for (Eigen::Index k = j + 1; k < a.size(); ++k) {
            sum += 2.0 * mc_c(kind, a[j], a[k]) * std::norm(m(j, k));
        }
    }
    return sum;
}

RadialSplit qubit_radial_split(double r, MCFunctionKind kind) {
    if (!(r >= 0.0) || r >= 1.0) {
        throw DomainError("qubit_radial_split: r must lie in [0, 1)");
    }
    RadialSplit split;
    split.radial = 1.0 / (1.0 - r * r);
    const double t = (1.0 - r) / (1.0 + r);
    split.tangential = 1.0 / (mc_function(kind, t) * (1.0 + r));
    split.divergent_at_boundary = mc_function(kind, 0.0) == 0.0;
    return split;
}

} // namespace buresgeom
