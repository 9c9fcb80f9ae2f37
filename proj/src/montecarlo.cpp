#include "buresgeom/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>

#include "buresgeom/matcore.hpp"

namespace buresgeom {

namespace {

const double kInf = std::numeric_limits<double>::infinity();

/// Vandermonde repulsion ratio prod_{n<m} |x_n - x_m|^beta / (x_n + x_m)^{beta/2};
/// bounded by 1 on the simplex.
double repulsion_weight(const Eigen::VectorXd& x, double beta) {
    double w = 1.0;
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        for (Eigen::Index j = i + 1; j < x.size(); ++j) {
            const double d = x[i] - x[j];
            const double s = x[i] + x[j];
            if (beta == 2.0) {
                w *= d * d / s;
            } else if (beta == 1.0) {
                w *= std::abs(d) / std::sqrt(s);
            } else {
                w *= std::pow(std::abs(d), beta) / std::pow(s, 0.5 * beta);
            }
        }
    }
    return w;
}

struct WorkerMoments {
    double sum = 0.0;
    double sumsq = 0.0;
    std::int64_t count = 0;
};

/// Runs `total` draws of `sample_weight` split over cfg.workers streams and
/// merges moments in worker order; deterministic for fixed (seed, workers).
MCEstimate run_iid(const MCConfig& cfg, double prefactor,
                   const std::function<double(RngStream&)>& sample_weight) {
    if (cfg.samples < 1) {
        throw DomainError("MCConfig: samples must be >= 1");
    }
    const int workers = std::max(1, cfg.workers);
    const std::int64_t base = cfg.samples / workers;
    const std::int64_t rem = cfg.samples % workers;

    std::vector<WorkerMoments> moments(workers);
    auto run_worker = [&](int w) {
        RngStream stream = RngStream::split(cfg.seed, static_cast<std::uint64_t>(w));
        const std::int64_t n = base + (w < rem ? 1 : 0);
        WorkerMoments m;
        for (std::int64_t i = 0; i < n; ++i) {
            const double v = sample_weight(stream);
            m.sum += v;
            m.sumsq += v * v;
        }
        m.count = n;
        moments[w] = m;
    };

    if (workers == 1) {
        run_worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back(run_worker, w);
        }
        for (auto& t : pool) {
            t.join();
        }
    }

    double sum = 0.0;
    double sumsq = 0.0;
    std::int64_t n = 0;
    for (const auto& m : moments) { // fixed reduction order
        sum += m.sum;
        sumsq += m.sumsq;
        n += m.count;
    }
    const double mean = sum / static_cast<double>(n);
    double se = 0.0;
    if (n > 1) {
        const double var = std::max(0.0, sumsq / static_cast<double>(n) - mean * mean);
        se = std::sqrt(var / static_cast<double>(n - 1));
    }
    MCEstimate est;
    est.mean = prefactor * mean;
    est.std_error = prefactor * se;
    est.samples = n;
    est.seed = cfg.seed;
    return est;
}

Eigen::VectorXd draw_dirichlet(RngStream& rng, const Eigen::VectorXd& shape) {
    Eigen::VectorXd g(shape.size());
    double total = 0.0;
    for (Eigen::Index i = 0; i < shape.size(); ++i) {
        g[i] = rng.gamma(shape[i]);
        total += g[i];
    }
    if (total <= 0.0) {
        g.setConstant(1.0 / static_cast<double>(shape.size()));
        return g;
    }
    return g / total;
}

double log_dirichlet_density(const Eigen::VectorXd& shape, const Eigen::VectorXd& x) {
    double sum = log_gamma(shape.sum());
    for (Eigen::Index i = 0; i < shape.size(); ++i) {
        if (x[i] <= 0.0) {
            return -kInf;
        }
        sum -= log_gamma(shape[i]);
        sum += (shape[i] - 1.0) * std::log(x[i]);
    }
    return sum;
}

/// Unnormalized log target on the interior of the simplex; -inf on the
/// boundary or at eigenvalue ties.
double log_target(const Eigen::VectorXd& l, double alpha, double beta) {
    double sum = 0.0;
    for (Eigen::Index i = 0; i < l.size(); ++i) {
        if (l[i] <= 0.0) {
            return -kInf;
        }
        sum += (alpha - 1.5) * std::log(l[i]);
    }
    for (Eigen::Index i = 0; i < l.size(); ++i) {
        for (Eigen::Index j = i + 1; j < l.size(); ++j) {
            const double d = std::abs(l[i] - l[j]);
            if (d == 0.0) {
                return -kInf;
            }
            sum += beta * std::log(d) - 0.5 * beta * std::log(l[i] + l[j]);
        }
    }
    return sum;
}

} // namespace

MCEstimate mc_simplex_integral(const EnsembleParams& params, const MCConfig& cfg) {
    validate_params(params);
    const double a = params.alpha - 0.5;
    if (!(a > 0.0)) {
        throw DomainError("mc_simplex_integral: unsupported alpha <= 1/2");
    }
    if (params.n == 1) {
        // one-point simplex, empty repulsion product: the integral is exactly 1
        return MCEstimate{1.0, 0.0, cfg.samples, cfg.seed};
    }
    const int n = params.n;
    const double beta = params.beta;
    const double prefactor = std::exp(n * log_gamma(a) - log_gamma(n * a));
    const Eigen::VectorXd shape = Eigen::VectorXd::Constant(n, a);
    return run_iid(cfg, prefactor, [beta, &shape](RngStream& rng) {
        return repulsion_weight(draw_dirichlet(rng, shape), beta);
    });
}

MCEstimate mc_gamma_trick_integral(const EnsembleParams& params, const MCConfig& cfg) {
    validate_params(params);
    const double a = params.alpha - 0.5;
    if (!(a > 0.0)) {
        throw DomainError("mc_gamma_trick_integral: unsupported alpha <= 1/2");
    }
    const int n = params.n;
    const double beta = params.beta;
    const double prefactor = std::exp(n * log_gamma(a));
    return run_iid(cfg, prefactor, [n, beta, a](RngStream& rng) {
        Eigen::VectorXd rho(n);
        for (int i = 0; i < n; ++i) {
            rho[i] = rng.gamma(a);
        }
        return repulsion_weight(rho, beta);
    });
}

MCEstimate mc_lorentz_integral(double gamma, double beta, int n, const MCConfig& cfg) {
    if (n < 1) {
        throw DomainError("mc_lorentz_integral: n must be >= 1");
    }
    if (!(2.0 * gamma - (n - 1) * beta - 1.0 > 0.0)) {
        throw DomainError("mc_lorentz_integral: divergent integral");
    }
    const double kPi = std::acos(-1.0);
    const double prefactor = std::pow(kPi, n);
    return run_iid(cfg, prefactor, [n, gamma, beta](RngStream& rng) {
        Eigen::VectorXd x(n);
        for (int i = 0; i < n; ++i) {
            x[i] = rng.cauchy();
        }
        double w = 1.0;
        for (int i = 0; i < n; ++i) {
            w *= std::pow(1.0 + x[i] * x[i], 1.0 - gamma);
        }
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                w *= std::pow(std::abs(x[i] - x[j]), beta);
            }
        }
        return w;
    });
}

McmcResult mcmc_eigenvalues(const EnsembleParams& params, const MCConfig& cfg) {
    validate_params(params);
    if (cfg.samples < 1) {
        throw DomainError("MCConfig: samples must be >= 1");
    }
    McmcResult result;
    result.seed = cfg.seed;
    result.samples.reserve(cfg.samples);

    if (params.n == 1) {
        Eigen::VectorXd one(1);
        one[0] = 1.0;
        for (std::int64_t i = 0; i < cfg.samples; ++i) {
            result.samples.push_back(SimplexPoint{one});
        }
        result.proposal_conc = cfg.proposal_conc;
        return result;
    }

    const int n = params.n;
    const double alpha = params.alpha;
    const double beta = params.beta;
    RngStream rng = RngStream::split(cfg.seed, 0);

    double conc = std::max(1.0, cfg.proposal_conc);
    Eigen::VectorXd current = draw_dirichlet(rng, Eigen::VectorXd::Constant(n, 1.0));
    double current_lp = log_target(current, alpha, beta);

    auto proposal_shape = [&](const Eigen::VectorXd& l) {
        return Eigen::VectorXd((conc * l).array() + 0.5);
    };

    std::int64_t window_accepts = 0;
    std::int64_t window_steps = 0;
    std::int64_t kept_accepts = 0;
    constexpr std::int64_t kTuneWindow = 200;

    const std::int64_t total = cfg.burn_in + cfg.samples;
    for (std::int64_t step = 0; step < total; ++step) {
        const Eigen::VectorXd shape_fwd = proposal_shape(current);
        const Eigen::VectorXd proposal = draw_dirichlet(rng, shape_fwd);
        const double proposal_lp = log_target(proposal, alpha, beta);
        bool accept = false;
        if (proposal_lp > -kInf) {
            if (current_lp == -kInf) {
                accept = true;
            } else {
                const Eigen::VectorXd shape_rev = proposal_shape(proposal);
                const double log_ratio = proposal_lp - current_lp +
                                         log_dirichlet_density(shape_rev, current) -
                                         log_dirichlet_density(shape_fwd, proposal);
                accept = std::log(rng.uniform()) < log_ratio;
            }
        } else {
            rng.uniform(); // keep the stream advance uniform across branches
        }
        if (accept) {
            current = proposal;
            current_lp = proposal_lp;
        }

        if (step < cfg.burn_in) {
            window_accepts += accept ? 1 : 0;
            if (++window_steps == kTuneWindow) {
                const double rate = static_cast<double>(window_accepts) / kTuneWindow;
                if (rate < 0.25) {
                    conc *= 1.5; // tighter proposals accept more
                } else if (rate > 0.35) {
                    conc /= 1.5;
                }
                conc = std::clamp(conc, 2.0, 1e7);
                window_accepts = 0;
                window_steps = 0;
            }
        } else {
            kept_accepts += accept ? 1 : 0;
            result.samples.push_back(SimplexPoint{current});
        }
    }

    result.acceptance_rate = static_cast<double>(kept_accepts) / static_cast<double>(cfg.samples);
    result.proposal_conc = conc;
    std::vector<double> trace;
    trace.reserve(result.samples.size());
    for (const auto& s : result.samples) {
        trace.push_back(s.lambdas.maxCoeff());
    }
    result.gelman_rubin = gelman_rubin_split(trace);
    return result;
}

std::vector<DensityMatrix> sample_states(int n, double beta, int count, const MCConfig& cfg,
                                         McmcResult* diag) {
    if (count < 1) {
        throw DomainError("sample_states: count must be >= 1");
    }
    if (beta != 1.0 && beta != 2.0) {
        throw DomainError("sample_states: beta must be 1 or 2");
    }
    const Field field = beta == 1.0 ? Field::Real : Field::Complex;
    constexpr int kThin = 5;

    EnsembleParams params;
    params.n = n;
    params.beta = beta;
    MCConfig chain_cfg = cfg;
    chain_cfg.samples = static_cast<std::int64_t>(count) * kThin;
    McmcResult chain = mcmc_eigenvalues(params, chain_cfg);

    // Eigenvector rotations come from a stream disjoint from the chain's.
    RngStream haar_stream = RngStream::split(cfg.seed, 0x68616172ULL);
    std::vector<DensityMatrix> states;
    states.reserve(count);
    for (int i = 0; i < count; ++i) {
        const Eigen::VectorXd& l = chain.samples[static_cast<std::size_t>(i) * kThin + kThin - 1].lambdas;
        const Matrix w = haar_random(n, field, haar_stream);
        Matrix rho = w * l.cast<Complex>().asDiagonal() * w.adjoint();
        rho = 0.5 * (rho + rho.adjoint());
        states.push_back(DensityMatrix::make(HermMatrix::make(enforce_field(std::move(rho), field), field)));
    }
    if (diag != nullptr) {
        *diag = std::move(chain);
        diag->samples.clear(); // keep only the diagnostics
    }
    return states;
}

MCEstimate verify_normalization(const EnsembleParams& params, const MCConfig& cfg) {
    const MCEstimate inv = mc_simplex_integral(params, cfg);
    const double c = std::exp(generalized_constant_log(params));
    MCEstimate est = inv;
    est.mean = c * inv.mean;
    est.std_error = c * inv.std_error;
    return est;
}

double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf) {
    if (samples.empty()) {
        throw DomainError("ks_statistic: no samples");
    }
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double d = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double f = cdf(samples[i]);
        const double hi = (static_cast<double>(i) + 1.0) / n - f;
        const double lo = f - static_cast<double>(i) / n;
        d = std::max(d, std::max(hi, lo));
    }
    return d;
}

double gelman_rubin_split(const std::vector<double>& trace, int segments) {
    if (segments < 2) {
        throw DomainError("gelman_rubin_split: need at least 2 segments");
    }
    const std::size_t len = trace.size() / segments;
    if (len < 2) {
        return 1.0;
    }
    std::vector<double> means(segments), vars(segments);
    for (int s = 0; s < segments; ++s) {
        double sum = 0.0;
        for (std::size_t i = 0; i < len; ++i) {
            sum += trace[s * len + i];
        }
        means[s] = sum / static_cast<double>(len);
        double sq = 0.0;
        for (std::size_t i = 0; i < len; ++i) {
            const double d = trace[s * len + i] - means[s];
            sq += d * d;
        }
        vars[s] = sq / static_cast<double>(len - 1);
    }
    double grand = 0.0;
    for (double m : means) {
        grand += m;
    }
    grand /= segments;
    double b = 0.0;
    for (double m : means) {
        b += (m - grand) * (m - grand);
    }
    b *= static_cast<double>(len) / (segments - 1);
    double w = 0.0;
    for (double v : vars) {
        w += v;
    }
    w /= segments;
    if (w <= 0.0) {
        return 1.0;
    }
    const double nd = static_cast<double>(len);
    const double vhat = (nd - 1.0) / nd * w + b / nd;
    return std::sqrt(vhat / w);
}

} // namespace buresgeom
