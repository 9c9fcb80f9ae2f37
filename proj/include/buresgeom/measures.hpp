#pragma once

#include <Eigen/Dense>

#include "buresgeom/errors.hpp"
#include "buresgeom/exact.hpp"

namespace buresgeom {

/// Ensemble parameters (N, alpha, beta). The closed forms are proven for
/// beta in {1, 2}; any other positive beta is accepted only with the
/// conjectural flag set.
struct EnsembleParams {
    int n = 1;
    double alpha = 1.0;
    double beta = 2.0;
    bool conjectural = false;
};

void validate_params(const EnsembleParams& params);

/// Eigenvalue vector on the probability simplex: nonnegative, sums to 1.
struct SimplexPoint {
    Eigen::VectorXd lambdas;

    static SimplexPoint make(Eigen::VectorXd lambdas);
    int size() const { return static_cast<int>(lambdas.size()); }
};

/// Volume of the flag manifold U(N)/U(1)^N (beta = 2) or O(N)/O(1)^N
/// (beta = 1): prod_{j=1..N} (2 pi)^{(j-1) beta/2} Gamma(beta/2)/Gamma(j beta/2).
ExactValue flag_volume(int n, double beta, bool conjectural = false);

/// Bures-Hall normalization constant
/// C_N = 2^{N^2-N} Gamma(N^2/2) / (pi^{N/2} Gamma(1)...Gamma(N+1)).
ExactValue hall_constant(int n);

/// Generalized constant C_N(alpha, beta); C_N(1, 2) is the Hall constant.
ExactValue generalized_constant(const EnsembleParams& params);

/// log C_N(alpha, beta); immune to overflow at large N.
double generalized_constant_log(const EnsembleParams& params);

/// Dimension of the submanifold of states with rank defect k:
/// d_k = (N-k)(1 + (N+k-1) beta/2) - 1; for beta = 2 this is N^2 - k^2 - 1.
long dim_submanifold(int n, int rank_defect, double beta);

/// Volume of the rank-(N-k) submanifold, explicit product form.
ExactValue submanifold_volume(int n, int rank_defect, double beta, bool conjectural = false);

/// Same volume through the generalized-constant/flag-volume route;
/// the two routes agreeing guards the explicit product form.
ExactValue submanifold_volume_compact(int n, int rank_defect, double beta,
                                      bool conjectural = false);

/// Bures volume of the full set of density matrices (rank defect 0).
ExactValue bures_volume(int n, double beta, bool conjectural = false);

/// Volume of a d-dimensional hemisphere of radius r:
/// (1/2) S_d r^d with S_d = 2 pi^{(d+1)/2} / Gamma((d+1)/2).
double hemisphere_volume(long d, double r);

/// gamma_B = (2/sqrt(pi)) Gamma(N^2/2)/Gamma(N^2/2 - 1/2) N, the
/// boundary-surface to volume ratio; grows like N^2.
ExactValue surface_to_volume_ratio(int n);

/// Volume of the pure-state manifold:
/// pi^{(N-1) beta/2} Gamma(beta/2)/Gamma(N beta/2); the projective space
/// CP^{N-1} for beta = 2, RP^{N-1} for beta = 1.
ExactValue pure_state_volume(int n, double beta, bool conjectural = false);

/// Log of the joint eigenvalue density
/// C_N(alpha,beta) prod rho_i^{alpha-3/2} prod_{n<m} |d|^beta / s^{beta/2}
/// on the simplex. Boundary points return +/- infinity classified by the
/// total vanishing order of the singular factors.
double joint_logdensity(const SimplexPoint& point, const EnsembleParams& params);

/// Selberg-type integral J(1,1,gamma,gamma,beta/2,N) over the Lorentz
/// ensemble: int prod dx_i (1+x_i^2)^{-gamma} prod_{j<k} |x_j-x_k|^beta.
double selberg_lorentz(double gamma, double beta, int n);

} // namespace buresgeom
