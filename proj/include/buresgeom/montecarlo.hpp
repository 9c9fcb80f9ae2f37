#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "buresgeom/measures.hpp"
#include "buresgeom/states.hpp"

namespace buresgeom {

struct MCConfig {
    std::int64_t samples = 100000;
    std::uint64_t seed = 1;
    int workers = 1;
    /// MCMC only: discarded prefix during which the proposal is tuned.
    std::int64_t burn_in = 2000;
    /// MCMC only: initial Dirichlet proposal concentration; auto-tuned
    /// during burn-in towards 0.3 acceptance, then frozen.
    double proposal_conc = 50.0;
};

/// mean +/- std_error from a seeded run. Identical (params, cfg) reproduce
/// the estimate bit for bit: per-worker streams are derived by
/// RngStream::split(seed, worker) and merged in worker order.
struct MCEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    std::int64_t samples = 0;
    std::uint64_t seed = 0;
};

/// Importance-sampled estimate of the defining integral 1/C_N(alpha, beta)
/// over the eigenvalue simplex. A Dirichlet(alpha - 1/2) proposal absorbs
/// the prod rho^{alpha-3/2} singular factor exactly, leaving the bounded
/// Vandermonde ratio as the weight.
MCEstimate mc_simplex_integral(const EnsembleParams& params, const MCConfig& cfg);

/// Estimate of Gamma[N(2 alpha + (N-1) beta/2 - 1)/2] / C_N(alpha, beta):
/// the simplex delta-constraint replaced by independent Gamma(alpha - 1/2)
/// radial weights.
MCEstimate mc_gamma_trick_integral(const EnsembleParams& params, const MCConfig& cfg);

/// Estimate of the Lorentz-ensemble integral
/// int prod dx_i (1 + x_i^2)^{-gamma} prod_{j<k} |x_j - x_k|^beta
/// with iid standard-Cauchy proposals.
MCEstimate mc_lorentz_integral(double gamma, double beta, int n, const MCConfig& cfg);

struct McmcResult {
    std::vector<SimplexPoint> samples;
    double acceptance_rate = 1.0;
    /// Proposal concentration after burn-in tuning.
    double proposal_conc = 0.0;
    /// Split-chain Gelman-Rubin statistic of the max-eigenvalue trace.
    double gelman_rubin = 1.0;
    std::uint64_t seed = 0;
};

/// Metropolis-Hastings chain targeting the joint eigenvalue density on the
/// simplex; proposals lambda' ~ Dirichlet(conc * lambda + 1/2). Boundary
/// proposals have density -inf and are rejected. cfg.samples kept draws.
McmcResult mcmc_eigenvalues(const EnsembleParams& params, const MCConfig& cfg);

/// Random density matrices: eigenvalues from the (thinned) MCMC chain,
/// eigenvectors an independent Haar rotation, matching the product
/// structure of the measure. Diagnostics of the underlying chain are
/// written to *diag when given.
std::vector<DensityMatrix> sample_states(int n, double beta, int count, const MCConfig& cfg,
                                         McmcResult* diag = nullptr);

/// MC estimate of the full-simplex integral of the density
/// (generalized_constant times mc_simplex_integral); brackets 1 for a
/// correct constant.
MCEstimate verify_normalization(const EnsembleParams& params, const MCConfig& cfg);

/// Kolmogorov-Smirnov statistic of samples against a CDF.
double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf);

/// Split-chain Gelman-Rubin statistic of a scalar trace.
double gelman_rubin_split(const std::vector<double>& trace, int segments = 4);

} // namespace buresgeom
