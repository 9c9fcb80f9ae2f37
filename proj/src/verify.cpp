#include "buresgeom/verify.hpp"

#include <cmath>
#include <sstream>

namespace buresgeom {

namespace {

const double kPi = std::acos(-1.0);

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

CheckResult band_check(const std::string& name, double observed, double lo, double hi) {
    CheckResult c;
    c.name = name;
    c.observed = observed;
    c.pass = observed >= lo && observed <= hi;
    c.band = "[" + fmt(lo) + ", " + fmt(hi) + "]";
    return c;
}

CheckResult max_check(const std::string& name, double observed, double bound) {
    CheckResult c;
    c.name = name;
    c.observed = observed;
    c.pass = observed <= bound;
    c.band = "<= " + fmt(bound);
    return c;
}

Eigen::VectorXd draw_probability(RngStream& rng, int n) {
    Eigen::VectorXd v(n);
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
        v[i] = -std::log(1.0 - rng.uniform());
        sum += v[i];
    }
    return v / sum;
}

} // namespace

DensityMatrix random_mixed_state(int n, Field field, RngStream& rng) {
    Matrix g(n, n);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            if (field == Field::Complex) {
                g(i, j) = Complex(rng.normal(), rng.normal());
            } else {
                g(i, j) = Complex(rng.normal(), 0.0);
            }
        }
    }
    Matrix rho = g * g.adjoint();
    rho /= rho.trace().real();
    rho = 0.5 * (rho + rho.adjoint());
    return DensityMatrix::make(HermMatrix::make(enforce_field(std::move(rho), field), field));
}

HermMatrix random_traceless_direction(int n, Field field, RngStream& rng) {
    Matrix g(n, n);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            if (field == Field::Complex) {
                g(i, j) = Complex(rng.normal(), rng.normal());
            } else {
                g(i, j) = Complex(rng.normal(), 0.0);
            }
        }
    }
    Matrix h = 0.5 * (g + g.adjoint());
    h -= (h.trace() / static_cast<double>(n)) * Matrix::Identity(n, n);
    const double norm = std::sqrt((h * h).trace().real());
    h /= norm;
    return HermMatrix::make(enforce_field(std::move(h), field), field);
}

double qubit_max_eigenvalue_cdf(double x) {
    if (x <= 0.5) {
        return 0.0;
    }
    if (x >= 1.0) {
        return 1.0;
    }
    const double s = 2.0 * x - 1.0;
    const double u = std::asin(s);
    return (2.0 / kPi) * (u - s * std::sqrt(1.0 - s * s));
}

QubitPathLengths qubit_bures_path_lengths(const BlochVector& a, const BlochVector& b, int steps) {
    if (steps < 2 || steps % 2 != 0) {
        throw DomainError("qubit_bures_path_lengths: steps must be even and >= 2");
    }
    const double dx = b.x - a.x;
    const double dy = b.y - a.y;
    const double dz = b.z - a.z;
    const double dd = dx * dx + dy * dy + dz * dz;

    auto point = [&](double t) {
        return BlochVector{a.x + t * dx, a.y + t * dy, a.z + t * dz};
    };
    // speed of the path in the round metric of the Uhlmann hemisphere
    auto speed = [&](double t) {
        const BlochVector p = point(t);
        const double r2 = p.x * p.x + p.y * p.y + p.z * p.z;
        const double radial = p.x * dx + p.y * dy + p.z * dz;
        return 0.5 * std::sqrt(dd + radial * radial / (1.0 - r2));
    };

    QubitPathLengths out;
    // Simpson rule over [0, 1]
    const double h = 1.0 / steps;
    double sum = speed(0.0) + speed(1.0);
    for (int i = 1; i < steps; ++i) {
        sum += speed(i * h) * (i % 2 == 1 ? 4.0 : 2.0);
    }
    out.metric_length = sum * h / 3.0;

    DensityMatrix prev = qubit_from_bloch(a);
    double chord = 0.0;
    for (int i = 1; i <= steps; ++i) {
        DensityMatrix next = qubit_from_bloch(point(i * h));
        chord += bures_distance(prev, next);
        prev = next;
    }
    out.chord_length = chord;
    return out;
}

VerifyReport verify_constants(const std::vector<int>& ns, const std::vector<double>& betas,
                              std::int64_t samples, std::uint64_t seed, int workers) {
    VerifyReport report;
    std::uint64_t combo = 0;
    for (int n : ns) {
        for (double beta : betas) {
            for (double alpha : {1.0, 1.0 + 0.5 * beta, 1.0 + beta}) {
                EnsembleParams params{n, alpha, beta, false};
                MCConfig cfg;
                cfg.samples = samples;
                cfg.seed = seed + combo++;
                cfg.workers = workers;
                const MCEstimate est = mc_simplex_integral(params, cfg);
                const double target = std::exp(-generalized_constant_log(params));
                std::ostringstream name;
                name << "constants N=" << n << " beta=" << beta << " alpha=" << alpha;
                const double slack = 3.0 * est.std_error + 1e-15;
                report.checks.push_back(
                    band_check(name.str(), est.mean, target - slack, target + slack));
            }
        }
    }
    return report;
}

VerifyReport verify_volume_identity(int max_n) {
    VerifyReport report;
    for (int n = 1; n <= std::min(max_n, 8); ++n) {
        const double vol = bures_volume(n, 2.0).value();
        const double hemi = hemisphere_volume(static_cast<long>(n) * n - 1, 0.5);
        report.checks.push_back(
            max_check("hemisphere identity N=" + std::to_string(n),
                      std::abs(vol / hemi - 1.0), 1e-12));
    }
    for (double beta : {1.0, 2.0}) {
        for (int n = 1; n <= std::min(max_n, 6); ++n) {
            for (int k = 0; k < n; ++k) {
                const ExactValue explicit_route = submanifold_volume(n, k, beta);
                const ExactValue compact_route = submanifold_volume_compact(n, k, beta);
                const bool exact_equal = explicit_route == compact_route;
                const double rel =
                    std::abs(explicit_route.value() / compact_route.value() - 1.0);
                CheckResult c = max_check("two-route volume N=" + std::to_string(n) +
                                              " k=" + std::to_string(k) +
                                              " beta=" + fmt(beta),
                                          rel, 1e-12);
                c.pass = c.pass && exact_equal;
                report.checks.push_back(c);
            }
        }
    }
    for (int n = 2; n <= std::min(max_n, 8); ++n) {
        const ExactValue lhs = surface_to_volume_ratio(n) * bures_volume(n, 2.0);
        const ExactValue rhs = submanifold_volume(n, 1, 2.0);
        CheckResult c = max_check("gamma_B relation N=" + std::to_string(n),
                                  std::abs(lhs.value() / rhs.value() - 1.0), 1e-12);
        c.pass = c.pass && lhs == rhs;
        report.checks.push_back(c);
    }
    for (double beta : {1.0, 2.0}) {
        for (int n = 1; n <= std::min(max_n, 8); ++n) {
            const ExactValue direct = pure_state_volume(n, beta);
            const ExactValue via_submanifold = submanifold_volume(n, n - 1, beta);
            CheckResult c;
            c.name = "pure-state volume N=" + std::to_string(n) + " beta=" + fmt(beta);
            c.observed = direct.value();
            c.pass = direct == via_submanifold;
            c.band = "exact";
            report.checks.push_back(c);
        }
    }
    return report;
}

VerifyReport verify_metric(const std::vector<int>& ns, int trials, std::uint64_t seed) {
    VerifyReport report;
    using Distance = double (*)(const DensityMatrix&, const DensityMatrix&);
    const std::pair<const char*, Distance> distances[] = {
        {"trace", &trace_distance},
        {"hs", &hs_distance},
        {"bures", &bures_distance},
        {"angle", &bures_angle},
    };

    for (int n : ns) {
        RngStream rng = RngStream::split(seed, static_cast<std::uint64_t>(n));
        double worst_sym = 0.0;
        double worst_identity = 0.0;
        double worst_triangle = 0.0;
        double worst_unitary = 0.0;
        double worst_fid_sym = 0.0;
        double worst_concavity = 0.0;
        for (int t = 0; t < trials; ++t) {
            const DensityMatrix rho = random_mixed_state(n, Field::Complex, rng);
            const DensityMatrix sigma = random_mixed_state(n, Field::Complex, rng);
            const DensityMatrix tau = random_mixed_state(n, Field::Complex, rng);
            for (const auto& [dname, dist] : distances) {
                (void)dname;
                worst_sym = std::max(worst_sym, std::abs(dist(rho, sigma) - dist(sigma, rho)));
                worst_identity = std::max(worst_identity, dist(rho, rho));
                worst_triangle = std::max(
                    worst_triangle, dist(rho, sigma) - dist(rho, tau) - dist(tau, sigma));
            }
            const Matrix u = haar_random(n, Field::Complex, rng);
            auto rotate = [&](const DensityMatrix& s) {
                Matrix m = u * s.entries() * u.adjoint();
                m = 0.5 * (m + m.adjoint());
                return DensityMatrix::make(HermMatrix::make(m, Field::Complex));
            };
            const DensityMatrix rho_u = rotate(rho);
            const DensityMatrix sigma_u = rotate(sigma);
            for (const auto& [dname, dist] : distances) {
                (void)dname;
                worst_unitary = std::max(
                    worst_unitary, std::abs(dist(rho_u, sigma_u) - dist(rho, sigma)));
            }
            worst_fid_sym =
                std::max(worst_fid_sym, std::abs(fidelity(rho, sigma) - fidelity(sigma, rho)));
            const double lambda = rng.uniform();
            Matrix mix = lambda * rho.entries() + (1.0 - lambda) * sigma.entries();
            const DensityMatrix mixed =
                DensityMatrix::make(HermMatrix::make(0.5 * (mix + mix.adjoint()), Field::Complex));
            const double concave = lambda * fidelity(rho, tau) +
                                   (1.0 - lambda) * fidelity(sigma, tau) - fidelity(mixed, tau);
            worst_concavity = std::max(worst_concavity, concave);
        }
        const std::string suffix = " N=" + std::to_string(n);
        report.checks.push_back(max_check("distance symmetry" + suffix, worst_sym, 1e-12));
        report.checks.push_back(max_check("distance identity" + suffix, worst_identity, 1e-12));
        report.checks.push_back(max_check("triangle inequality" + suffix, worst_triangle, 1e-10));
        report.checks.push_back(max_check("unitary invariance" + suffix, worst_unitary, 1e-10));
        report.checks.push_back(max_check("fidelity symmetry" + suffix, worst_fid_sym, 1e-10));
        report.checks.push_back(max_check("fidelity concavity" + suffix, worst_concavity, 1e-10));
    }

    // diagonal pairs collapse to classical coefficients
    {
        RngStream rng = RngStream::split(seed, 0xD1A6);
        double worst_fid = 0.0;
        double worst_dist = 0.0;
        for (int t = 0; t < trials; ++t) {
            const int n = 2 + static_cast<int>(rng.uniform() * 3.0);
            const Eigen::VectorXd a = draw_probability(rng, n);
            const Eigen::VectorXd b = draw_probability(rng, n);
            Matrix ma = a.cast<Complex>().asDiagonal();
            Matrix mb = b.cast<Complex>().asDiagonal();
            const DensityMatrix rho = DensityMatrix::make(HermMatrix::make(ma, Field::Complex));
            const DensityMatrix sigma = DensityMatrix::make(HermMatrix::make(mb, Field::Complex));
            const double bh = bhattacharyya(a, b);
            worst_fid = std::max(worst_fid, std::abs(fidelity(rho, sigma) - bh * bh));
            worst_dist =
                std::max(worst_dist, std::abs(bures_distance(rho, sigma) - hellinger(a, b)));
        }
        report.checks.push_back(max_check("diagonal fidelity = B^2", worst_fid, 1e-12));
        report.checks.push_back(max_check("diagonal bures = hellinger", worst_dist, 1e-12));
    }
    return report;
}

VerifyReport verify_marginal(std::int64_t kept_samples, std::uint64_t seed) {
    VerifyReport report;
    EnsembleParams params{2, 1.0, 2.0, false};
    MCConfig cfg;
    cfg.samples = kept_samples;
    cfg.seed = seed;
    const McmcResult chain = mcmc_eigenvalues(params, cfg);
    std::vector<double> maxima;
    maxima.reserve(chain.samples.size());
    for (const auto& s : chain.samples) {
        maxima.push_back(s.lambdas.maxCoeff());
    }
    const double ks = ks_statistic(std::move(maxima), qubit_max_eigenvalue_cdf);
    report.checks.push_back(max_check("qubit marginal KS", ks, 0.02));
    report.checks.push_back(
        band_check("mcmc acceptance rate", chain.acceptance_rate, 0.1, 0.9));
    report.checks.push_back(max_check("gelman-rubin", chain.gelman_rubin, 1.05));
    return report;
}

VerifyReport verify_normalization_suite(const std::vector<int>& ns,
                                        const std::vector<double>& betas, std::int64_t samples,
                                        std::uint64_t seed, int workers) {
    VerifyReport report;
    std::uint64_t combo = 0;
    for (int n : ns) {
        for (double beta : betas) {
            EnsembleParams params{n, 1.0, beta, false};
            MCConfig cfg;
            cfg.samples = samples;
            cfg.seed = seed + combo++;
            cfg.workers = workers;
            const MCEstimate est = verify_normalization(params, cfg);
            const double slack = 3.0 * est.std_error + 1e-15;
            report.checks.push_back(band_check("normalization N=" + std::to_string(n) +
                                                   " beta=" + fmt(beta),
                                               est.mean, 1.0 - slack, 1.0 + slack));
        }
    }
    return report;
}

namespace {

/// Orthonormal basis of traceless Hermitian matrices (HS inner product).
std::vector<Matrix> traceless_hermitian_basis(int n) {
    std::vector<Matrix> basis;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            Matrix s = Matrix::Zero(n, n);
            s(i, j) = s(j, i) = Complex(1.0 / std::sqrt(2.0), 0.0);
            basis.push_back(s);
            Matrix a = Matrix::Zero(n, n);
            a(i, j) = Complex(0.0, -1.0 / std::sqrt(2.0));
            a(j, i) = Complex(0.0, 1.0 / std::sqrt(2.0));
            basis.push_back(a);
        }
    }
    for (int l = 1; l < n; ++l) {
        Matrix d = Matrix::Zero(n, n);
        const double norm = std::sqrt(static_cast<double>(l) * (l + 1));
        for (int i = 0; i < l; ++i) {
            d(i, i) = Complex(1.0 / norm, 0.0);
        }
        d(l, l) = Complex(-static_cast<double>(l) / norm, 0.0);
        basis.push_back(d);
    }
    return basis;
}

/// Search for a channel expanding the HS norm on the traceless subspace and
/// turn its leading singular direction into a concrete state pair.
bool find_hs_increase(int n, RngStream& rng, int attempts, double& before, double& after) {
    const std::vector<Matrix> basis = traceless_hermitian_basis(n);
    const int d = static_cast<int>(basis.size());
    for (int attempt = 0; attempt < attempts; ++attempt) {
        const int k = 2 + static_cast<int>(rng.uniform() * 3.0);
        const KrausChannel channel = random_channel(n, k, Field::Complex, rng);
        Eigen::MatrixXd super(d, d);
        for (int b = 0; b < d; ++b) {
            Matrix image = Matrix::Zero(n, n);
            for (const auto& kop : channel.kraus_ops()) {
                image += kop * basis[b] * kop.adjoint();
            }
            // project out any trace component picked up numerically
            image -= (image.trace() / static_cast<double>(n)) * Matrix::Identity(n, n);
            for (int a = 0; a < d; ++a) {
                super(a, b) = (basis[a].adjoint() * image).trace().real();
            }
        }
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(super, Eigen::ComputeFullV);
        if (svd.singularValues()[0] <= 1.0 + 1e-9) {
            continue;
        }
        const Eigen::VectorXd v = svd.matrixV().col(0);
        Matrix delta = Matrix::Zero(n, n);
        for (int b = 0; b < d; ++b) {
            delta += v[b] * basis[b];
        }
        Eigen::SelfAdjointEigenSolver<Matrix> es(delta);
        const double extreme = es.eigenvalues().cwiseAbs().maxCoeff();
        const double eps = 0.9 / (n * extreme);
        const Matrix id = Matrix::Identity(n, n) / static_cast<double>(n);
        const DensityMatrix rho =
            DensityMatrix::make(HermMatrix::make(id + eps * delta, Field::Complex));
        const DensityMatrix sigma =
            DensityMatrix::make(HermMatrix::make(id - eps * delta, Field::Complex));
        before = hs_distance(rho, sigma);
        after = hs_distance(apply_channel(rho, channel), apply_channel(sigma, channel));
        if (after > before + 1e-12) {
            return true;
        }
    }
    return false;
}

} // namespace

VerifyReport verify_monotonicity(const std::vector<int>& ns, int trials, std::uint64_t seed) {
    VerifyReport report;
    for (int n : ns) {
        RngStream rng = RngStream::split(seed, 0xC0FFEE + static_cast<std::uint64_t>(n));
        double worst_bures = 0.0;
        double worst_trace = 0.0;
        bool hs_increase_seen = false;
        for (int t = 0; t < trials; ++t) {
            const DensityMatrix rho = random_mixed_state(n, Field::Complex, rng);
            const DensityMatrix sigma = random_mixed_state(n, Field::Complex, rng);
            const int k = 1 + static_cast<int>(rng.uniform() * 4.0);
            const KrausChannel channel = random_channel(n, k, Field::Complex, rng);
            const DensityMatrix rho_out = apply_channel(rho, channel);
            const DensityMatrix sigma_out = apply_channel(sigma, channel);
            worst_bures = std::max(
                worst_bures, bures_distance(rho_out, sigma_out) - bures_distance(rho, sigma));
            worst_trace = std::max(
                worst_trace, trace_distance(rho_out, sigma_out) - trace_distance(rho, sigma));
            if (hs_distance(rho_out, sigma_out) > hs_distance(rho, sigma) + 1e-12) {
                hs_increase_seen = true;
            }
        }
        const std::string suffix = " N=" + std::to_string(n);
        report.checks.push_back(
            max_check("bures monotone" + suffix, worst_bures, 1e-9));
        report.checks.push_back(
            max_check("trace monotone" + suffix, worst_trace, 1e-9));
        if (n >= 3) {
            double before = 0.0;
            double after = 0.0;
            if (!hs_increase_seen) {
                hs_increase_seen = find_hs_increase(n, rng, 200, before, after);
            }
            CheckResult c;
            c.name = "hs increase found" + suffix;
            c.pass = hs_increase_seen;
            c.observed = hs_increase_seen ? 1.0 : 0.0;
            c.band = "= 1 (witness exists)";
            report.checks.push_back(c);
        }
    }
    return report;
}

} // namespace buresgeom
