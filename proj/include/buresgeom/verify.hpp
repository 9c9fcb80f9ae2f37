#pragma once

#include <string>
#include <vector>

#include "buresgeom/metrics.hpp"
#include "buresgeom/montecarlo.hpp"

namespace buresgeom {

struct CheckResult {
    std::string name;
    bool pass = false;
    double observed = 0.0;
    std::string band; // human-readable acceptance band
};

struct VerifyReport {
    std::vector<CheckResult> checks;

    bool all_pass() const {
        for (const auto& c : checks) {
            if (!c.pass) {
                return false;
            }
        }
        return true;
    }
};

/// Full-rank random state G G^dagger / Tr (test fuel, not the Bures measure).
DensityMatrix random_mixed_state(int n, Field field, RngStream& rng);

/// Random traceless Hermitian direction with unit Frobenius norm.
HermMatrix random_traceless_direction(int n, Field field, RngStream& rng);

/// CDF of the larger eigenvalue of a Bures-distributed qubit:
/// F(x) = (2/pi)(u - sin u cos u), u = arcsin(2x - 1), x in [1/2, 1].
double qubit_max_eigenvalue_cdf(double x);

struct QubitPathLengths {
    double metric_length = 0.0; // line element integrated along the path
    double chord_length = 0.0;  // accumulated small-step Bures distances
};

/// Bures length of the straight Bloch segment between two qubits, computed
/// twice: from the closed-form line element and from chord sums of the
/// fidelity-based distance.
QubitPathLengths qubit_bures_path_lengths(const BlochVector& a, const BlochVector& b, int steps);

/// MC oracle vs closed-form constants: for each (n, beta) and
/// alpha in {1, 1 + beta/2, 1 + beta}, the simplex integral must bracket
/// 1/C_N(alpha, beta) within 3 standard errors.
VerifyReport verify_constants(const std::vector<int>& ns, const std::vector<double>& betas,
                              std::int64_t samples, std::uint64_t seed, int workers);

/// Closed-form identities: hemisphere equality, two-route submanifold
/// volumes, surface-to-volume ratio, pure-state volumes.
VerifyReport verify_volume_identity(int max_n);

/// Distance axioms and cross-identities on random states.
VerifyReport verify_metric(const std::vector<int>& ns, int trials, std::uint64_t seed);

/// N = 2 MCMC marginal against the analytic CDF of the larger eigenvalue.
VerifyReport verify_marginal(std::int64_t kept_samples, std::uint64_t seed);

/// Normalization of the joint eigenvalue density against the closed-form
/// constant.
VerifyReport verify_normalization_suite(const std::vector<int>& ns,
                                        const std::vector<double>& betas, std::int64_t samples,
                                        std::uint64_t seed, int workers);

/// Bures and trace distances never grow under random channels; the
/// Hilbert-Schmidt distance must be caught growing at least once at N >= 3.
VerifyReport verify_monotonicity(const std::vector<int>& ns, int trials, std::uint64_t seed);

} // namespace buresgeom
