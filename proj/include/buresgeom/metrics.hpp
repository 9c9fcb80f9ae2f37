#pragma once

#include "buresgeom/states.hpp"

namespace buresgeom {

/// Tr |rho - sigma|, in [0, 2].
double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma);

/// sqrt(Tr[(rho - sigma)^2]).
double hs_distance(const DensityMatrix& rho, const DensityMatrix& sigma);

/// Uhlmann fidelity [Tr (sqrt(rho) sigma sqrt(rho))^{1/2}]^2, clamped to [0,1].
double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);

/// sqrt(2 - 2 sqrt(F)), in [0, sqrt(2)].
double bures_distance(const DensityMatrix& rho, const DensityMatrix& sigma);

/// arccos sqrt(F), in [0, pi/2].
double bures_angle(const DensityMatrix& rho, const DensityMatrix& sigma);

/// 2 arccos sqrt(kappa) with kappa = Tr(rho_a rho_b); both inputs must be
/// pure to 1e-10. Equals twice the Bures angle on pure pairs.
double fubini_study(const DensityMatrix& psi_a, const DensityMatrix& psi_b);

/// Bhattacharyya coefficient sum sqrt(a_i b_i) of two probability vectors.
double bhattacharyya(const Vector& a, const Vector& b);

/// sqrt(2 - 2 B(a, b)).
double hellinger(const Vector& a, const Vector& b);

/// Bures line element (ds)^2 = 1/2 sum |drho_nm|^2 / (rho_n + rho_m) in the
/// eigenbasis of rho; terms with rho_n + rho_m < tol are excluded.
/// tol < 0 selects the default 1e-12 * Tr(rho). delta must be traceless.
double hubner_line_element(const DensityMatrix& rho, const HermMatrix& delta, double tol = -1.0);

/// Morozova-Chentsov function selector. Max is the maximal function
/// (1 + t)/2 and induces the Bures metric; Min the minimal 2t/(1 + t);
/// KuboMori the logarithmic-mean function (t - 1)/ln t.
enum class MCFunctionKind { Min, KuboMori, Max };

/// f(t) for t >= 0; KuboMori at t = 1 by continuous extension (= 1).
double mc_function(MCFunctionKind kind, double t);

/// c(x, y) = f(x/y)/y for x, y > 0; 1/c is the harmonic, logarithmic or
/// arithmetic mean for Min, KuboMori, Max respectively.
double mc_c(MCFunctionKind kind, double x, double y);

/// Squared length of B at the diagonal point diag(a):
/// sum_j B_jj^2 / a_j + 2 sum_{j<k} c(a_j, a_k) |B_jk|^2.
double monotone_squared_length(const Vector& a, const HermMatrix& b, MCFunctionKind kind);

struct RadialSplit {
    double radial = 0.0;
    double tangential = 0.0;
    /// True when the kind has f(0) = 0, so the tangential part diverges
    /// at the pure-state boundary r -> 1 (Min and KuboMori).
    bool divergent_at_boundary = false;
};

/// Qubit metric split at Bloch radius r in [0, 1):
/// radial = 1/(1 - r^2), tangential = g((1-r)/(1+r))/(1+r) with g = 1/f.
RadialSplit qubit_radial_split(double r, MCFunctionKind kind);

} // namespace buresgeom
