#include "buresgeom/states.hpp"

#include <cmath>
#include <string>

namespace buresgeom {

namespace {
constexpr double kTraceTol = 1e-12;
constexpr double kPsdTol = 1e-10;
constexpr double kCompletenessTol = 1e-10;
} // namespace

DensityMatrix DensityMatrix::make(const HermMatrix& m) {
    std::vector<std::string> violations;
    const double tr = m.trace();
    if (std::abs(tr - 1.0) > kTraceTol) {
        violations.push_back("trace is " + std::to_string(tr) + ", expected 1");
    }
    const Vector evals = eigh(m).values;
    if (evals[0] < -kPsdTol) {
        violations.push_back("negative eigenvalue " + std::to_string(evals[0]));
    }
    if (!violations.empty()) {
        throw ValidationError(std::move(violations));
    }
    return DensityMatrix(m);
}

double BlochVector::norm() const { return std::sqrt(x * x + y * y + z * z); }

double UhlmannPoint::norm() const { return std::sqrt(x * x + y * y + z * z + u * u); }

KrausChannel KrausChannel::make(std::vector<Matrix> kraus_ops, Field field) {
    std::vector<std::string> violations;
    if (kraus_ops.empty()) {
        violations.push_back("channel needs at least one Kraus operator");
        throw ValidationError(std::move(violations));
    }
    const Eigen::Index n = kraus_ops.front().rows();
    Matrix sum = Matrix::Zero(n, n);
    for (const auto& k : kraus_ops) {
        if (k.rows() != n || k.cols() != n) {
            violations.push_back("Kraus operators must all be square of equal size");
            throw ValidationError(std::move(violations));
        }
        sum += k.adjoint() * k;
    }
    const double residual = (sum - Matrix::Identity(n, n)).cwiseAbs().maxCoeff();
    if (residual > kCompletenessTol) {
        violations.push_back("completeness residual " + std::to_string(residual));
        throw ValidationError(std::move(violations));
    }
    return KrausChannel(std::move(kraus_ops), field);
}

DensityMatrix maximally_mixed(int n, Field field) {
    if (n < 1) {
        throw DomainError("maximally_mixed: dimension must be >= 1");
    }
    Matrix m = Matrix::Identity(n, n) / static_cast<double>(n);
    return DensityMatrix::make(HermMatrix::make(m, field));
}

DensityMatrix random_pure(int n, Field field, RngStream& rng) {
    const Matrix u = haar_random(n, field, rng);
    const Eigen::VectorXcd psi = u.col(0);
    Matrix proj = psi * psi.adjoint();
    return DensityMatrix::make(HermMatrix::make(enforce_field(std::move(proj), field), field));
}

DensityMatrix qubit_from_bloch(const BlochVector& v) {
    const double r = v.norm();
    if (r > 1.0 + 1e-12) {
        throw DomainError("Bloch vector norm " + std::to_string(r) + " exceeds 1");
    }
    Matrix m(2, 2);
    m << Complex(1.0 + v.z, 0.0), Complex(v.x, -v.y),
         Complex(v.x, v.y),       Complex(1.0 - v.z, 0.0);
    m *= 0.5;
    return DensityMatrix::make(HermMatrix::make(m, Field::Complex));
}

BlochVector bloch_from_qubit(const DensityMatrix& rho) {
    if (rho.dim() != 2) {
        throw DomainError("Bloch coordinates require a qubit (N = 2)");
    }
    const Matrix& m = rho.entries();
    BlochVector v;
    v.x = 2.0 * m(1, 0).real();
    v.y = 2.0 * m(1, 0).imag();
    v.z = (m(0, 0) - m(1, 1)).real();
    return v;
}

UhlmannPoint uhlmann_embed(const DensityMatrix& rho) {
    const BlochVector v = bloch_from_qubit(rho);
    const double r2 = v.x * v.x + v.y * v.y + v.z * v.z;
    // sqrt would blow 1e-15 roundoff of a pure state up to 1e-8; pure states
    // must land on the hyper-equator u = 0 exactly
    double s = 1.0 - r2;
    if (s < 1e-13) {
        s = 0.0;
    }
    const double u = std::sqrt(s);
    return UhlmannPoint{0.5 * v.x, 0.5 * v.y, 0.5 * v.z, 0.5 * u};
}

DensityMatrix apply_channel(const DensityMatrix& rho, const KrausChannel& channel) {
    if (rho.dim() != channel.dim()) {
        throw DomainError("apply_channel: dimension mismatch");
    }
    const Eigen::Index n = rho.dim();
    Matrix out = Matrix::Zero(n, n);
    for (const auto& k : channel.kraus_ops()) {
        out += k * rho.entries() * k.adjoint();
    }
    out = 0.5 * (out + out.adjoint());
    const Field field =
        (rho.field() == Field::Real && channel.field() == Field::Real) ? Field::Real : Field::Complex;
    return DensityMatrix::make(HermMatrix::make(enforce_field(std::move(out), field), field));
}

KrausChannel random_channel(int n, int k, Field field, RngStream& rng) {
    if (n < 1 || k < 1) {
        throw DomainError("random_channel: n and k must be >= 1");
    }
    const Matrix big = haar_random(n * k, field, rng);
    std::vector<Matrix> ops;
    ops.reserve(k);
    // The first n columns of a Haar unitary, cut into k row blocks: the block
    // stack is an isometry, so sum K^dagger K = I exactly up to roundoff.
    for (int i = 0; i < k; ++i) {
        ops.push_back(big.block(i * n, 0, n, n));
    }
    return KrausChannel::make(std::move(ops), field);
}

} // namespace buresgeom
