#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "buresgeom/metrics.hpp"
#include "buresgeom/montecarlo.hpp"
#include "buresgeom/verify.hpp"

using namespace buresgeom;

namespace {
const double kPi = std::acos(-1.0);

MCConfig cfg_with(std::int64_t samples, std::uint64_t seed, int workers = 1) {
    MCConfig cfg;
    cfg.samples = samples;
    cfg.seed = seed;
    cfg.workers = workers;
    return cfg;
}

bool brackets(const MCEstimate& est, double target, double n_se = 3.0) {
    return std::abs(est.mean - target) <= n_se * est.std_error + 1e-15;
}
} // namespace

TEST_CASE("simplex integral against the 1-d analytic oracle") {
    // N = 2, beta = 2: int_0^1 (2x-1)^2 / sqrt(x(1-x)) dx = pi/2
    const MCEstimate est = mc_simplex_integral({2, 1.0, 2.0, false}, cfg_with(200000, 91));
    CHECK(brackets(est, kPi / 2.0));
    CHECK(est.std_error < 0.01);
}

TEST_CASE("simplex integral trivial and error cases") {
    const MCEstimate one = mc_simplex_integral({1, 1.0, 2.0, false}, cfg_with(10, 5));
    CHECK(one.mean == 1.0);
    CHECK(one.std_error == 0.0);
    CHECK_THROWS_AS(mc_simplex_integral({2, 0.5, 2.0, false}, cfg_with(10, 5)), DomainError);
}

TEST_CASE("simplex integral brackets the closed forms") {
    // C_3 = 35/pi so the integral is pi/35
    const MCEstimate est3 = mc_simplex_integral({3, 1.0, 2.0, false}, cfg_with(400000, 17));
    CHECK(brackets(est3, kPi / 35.0));

    // beta = 1 case against the generalized constant
    const MCEstimate est21 = mc_simplex_integral({2, 1.0, 1.0, false}, cfg_with(200000, 23));
    CHECK(brackets(est21, 2.0)); // 1/C_2(1,1) = 2

    for (double alpha : {1.5, 2.0}) {
        const EnsembleParams p{3, alpha, 1.0, false};
        const MCEstimate est = mc_simplex_integral(p, cfg_with(200000, 29));
        CHECK(brackets(est, std::exp(-generalized_constant_log(p))));
    }
}

TEST_CASE("estimates are deterministic and worker-invariant in distribution") {
    const EnsembleParams p{3, 1.0, 2.0, false};
    const MCEstimate a = mc_simplex_integral(p, cfg_with(50000, 7, 3));
    const MCEstimate b = mc_simplex_integral(p, cfg_with(50000, 7, 3));
    CHECK(a.mean == b.mean);
    CHECK(a.std_error == b.std_error);

    const MCEstimate serial = mc_simplex_integral(p, cfg_with(50000, 7, 1));
    CHECK(std::abs(a.mean - serial.mean) <= 3.0 * (a.std_error + serial.std_error));
    CHECK(a.samples == serial.samples);
}

TEST_CASE("gamma trick integral") {
    // N = 1: weight is identically 1 and the estimate is Gamma(1/2) exactly
    const MCEstimate root_pi = mc_gamma_trick_integral({1, 1.0, 2.0, false}, cfg_with(1000, 3));
    CHECK(root_pi.mean == doctest::Approx(std::sqrt(kPi)).epsilon(1e-15));
    CHECK(root_pi.std_error == 0.0);

    const MCEstimate est = mc_gamma_trick_integral({2, 1.0, 2.0, false}, cfg_with(400000, 37));
    CHECK(brackets(est, kPi / 2.0)); // Gamma(2) * pi/2

    // the ratio of the two routes is the stated Gamma factor
    struct Combo {
        int n;
        double beta;
    };
    for (const Combo c : {Combo{2, 1.0}, Combo{2, 2.0}, Combo{3, 2.0}}) {
        const EnsembleParams p{c.n, 1.0, c.beta, false};
        const MCEstimate simplex = mc_simplex_integral(p, cfg_with(400000, 41));
        const MCEstimate gamma = mc_gamma_trick_integral(p, cfg_with(400000, 43));
        const double factor =
            std::exp(log_gamma(0.5 * c.n * (2.0 + 0.5 * (c.n - 1) * c.beta - 1.0)));
        const double ratio = gamma.mean / simplex.mean;
        const double rel_se = gamma.std_error / gamma.mean + simplex.std_error / simplex.mean;
        CHECK(std::abs(ratio - factor) <= 3.0 * factor * rel_se);
    }
}

TEST_CASE("lorentz integral matches the Selberg closed form") {
    const MCEstimate est = mc_lorentz_integral(1.5, 1.0, 2, cfg_with(400000, 53));
    CHECK(brackets(est, 2.0 * kPi));
    const MCEstimate est2 = mc_lorentz_integral(2.5, 1.0, 2, cfg_with(400000, 59));
    CHECK(brackets(est2, selberg_lorentz(2.5, 1.0, 2)));
    CHECK_THROWS_AS(mc_lorentz_integral(0.75, 1.0, 2, cfg_with(10, 1)), DomainError);
}

TEST_CASE("mcmc chain for N = 1 is constant") {
    const McmcResult chain = mcmc_eigenvalues({1, 1.0, 2.0, false}, cfg_with(50, 1));
    CHECK(chain.samples.size() == 50);
    for (const auto& s : chain.samples) {
        CHECK(s.lambdas[0] == 1.0);
    }
    CHECK(chain.acceptance_rate == 1.0);
    CHECK(chain.gelman_rubin == 1.0);
}

TEST_CASE("mcmc marginal, acceptance and stationarity") {
    MCConfig cfg = cfg_with(20000, 101);
    cfg.burn_in = 2000;
    const McmcResult chain = mcmc_eigenvalues({2, 1.0, 2.0, false}, cfg);
    CHECK(chain.samples.size() == 20000);
    CHECK(chain.acceptance_rate >= 0.1);
    CHECK(chain.acceptance_rate <= 0.9);
    CHECK(chain.gelman_rubin < 1.05);

    std::vector<double> maxima;
    for (const auto& s : chain.samples) {
        maxima.push_back(s.lambdas.maxCoeff());
        CHECK(std::abs(s.lambdas.sum() - 1.0) < 1e-12);
    }
    CHECK(ks_statistic(std::move(maxima), qubit_max_eigenvalue_cdf) < 0.03);

    // reproducibility from the seed
    const McmcResult again = mcmc_eigenvalues({2, 1.0, 2.0, false}, cfg);
    CHECK((again.samples.back().lambdas - chain.samples.back().lambdas).cwiseAbs().maxCoeff() ==
          0.0);
    CHECK(again.proposal_conc == chain.proposal_conc);
}

TEST_CASE("mcmc stationarity at N = 3 and 4") {
    for (int n : {3, 4}) {
        MCConfig cfg = cfg_with(20000, 300 + n);
        const McmcResult chain = mcmc_eigenvalues({n, 1.0, 2.0, false}, cfg);
        CHECK(chain.acceptance_rate >= 0.1);
        CHECK(chain.acceptance_rate <= 0.9);
        CHECK(chain.gelman_rubin < 1.05);
    }
}

TEST_CASE("sampled states are valid and consistent across routes") {
    for (double beta : {1.0, 2.0}) {
        MCConfig cfg = cfg_with(0, 71);
        cfg.burn_in = 1000;
        const std::vector<DensityMatrix> states = sample_states(3, beta, 100, cfg);
        CHECK(states.size() == 100);
        for (const auto& rho : states) {
            CHECK(std::abs(rho.herm().trace() - 1.0) < 1e-12);
            CHECK(eigh(rho.herm()).values.minCoeff() > -1e-10);
            if (beta == 1.0) {
                CHECK(rho.entries().imag().cwiseAbs().maxCoeff() == 0.0);
            }
        }
    }

    // fidelity to the maximally mixed state depends only on the spectrum:
    // computing it from the full state must equal the eigenvalue route
    MCConfig cfg = cfg_with(0, 73);
    const std::vector<DensityMatrix> qubits = sample_states(2, 2.0, 200, cfg);
    const DensityMatrix star = maximally_mixed(2, Field::Complex);
    for (const auto& rho : qubits) {
        const Eigen::VectorXd l = eigh(rho.herm()).values;
        const double via_spectrum =
            0.5 * std::pow(std::sqrt(std::max(0.0, l[0])) + std::sqrt(l[1]), 2.0);
        CHECK(fidelity(rho, star) == doctest::Approx(via_spectrum).epsilon(1e-9));
    }
}

TEST_CASE("sampled qubits have Haar-uniform Bloch directions") {
    MCConfig cfg = cfg_with(0, 79);
    const std::vector<DensityMatrix> states = sample_states(2, 2.0, 4000, cfg);
    std::vector<double> zdir;
    for (const auto& rho : states) {
        const BlochVector v = bloch_from_qubit(rho);
        zdir.push_back(v.z / v.norm());
    }
    CHECK(ks_statistic(std::move(zdir), [](double z) { return 0.5 * (z + 1.0); }) < 0.04);
}

TEST_CASE("normalization verification") {
    const MCEstimate exact = verify_normalization({1, 1.0, 2.0, false}, cfg_with(100, 3));
    CHECK(exact.mean == 1.0);

    const MCEstimate n2 = verify_normalization({2, 1.0, 2.0, false}, cfg_with(200000, 83));
    CHECK(brackets(n2, 1.0));
    const MCEstimate n31 = verify_normalization({3, 1.0, 1.0, false}, cfg_with(200000, 89));
    CHECK(brackets(n31, 1.0));
}

TEST_CASE("ks statistic and gelman-rubin sanity") {
    RngStream rng(997);
    std::vector<double> uniform;
    for (int i = 0; i < 5000; ++i) {
        uniform.push_back(rng.uniform());
    }
    CHECK(ks_statistic(std::move(uniform), [](double x) { return x; }) < 0.03);

    std::vector<double> iid;
    for (int i = 0; i < 4000; ++i) {
        iid.push_back(rng.normal());
    }
    CHECK(gelman_rubin_split(iid) < 1.02);
    CHECK_THROWS_AS(ks_statistic({}, [](double x) { return x; }), DomainError);
}
