#pragma once

#include <vector>

#include "buresgeom/matcore.hpp"

namespace buresgeom {

/// Trace-one, positive-semidefinite Hermitian (or real symmetric) matrix.
class DensityMatrix {
public:
    /// Validates trace = 1 (1e-12) and min eigenvalue >= -1e-10; the error
    /// lists every violated invariant.
    static DensityMatrix make(const HermMatrix& m);

    int dim() const { return herm_.dim(); }
    Field field() const { return herm_.field(); }
    int beta() const { return herm_.beta(); }
    const HermMatrix& herm() const { return herm_; }
    const Matrix& entries() const { return herm_.entries(); }

    double purity() const { return (entries() * entries()).trace().real(); }

private:
    explicit DensityMatrix(HermMatrix m) : herm_(std::move(m)) {}

    HermMatrix herm_;
};

/// new_density in the public API: validate-or-reject constructor.
inline DensityMatrix new_density(const HermMatrix& m) { return DensityMatrix::make(m); }

struct BlochVector {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    double norm() const;
};

/// Point on the radius-1/2 Uhlmann hyper-hemisphere: (x,y,z,u)/2 with
/// u = sqrt(1 - x^2 - y^2 - z^2) >= 0 computed from the Bloch vector.
struct UhlmannPoint {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
    double u = 0.0;

    double norm() const; // always 1/2
};

/// Completely positive trace-preserving map given by Kraus operators.
class KrausChannel {
public:
    /// Validates the completeness relation sum K_i^dagger K_i = I to 1e-10.
    static KrausChannel make(std::vector<Matrix> kraus_ops, Field field);

    int dim() const { return static_cast<int>(ops_.front().rows()); }
    Field field() const { return field_; }
    const std::vector<Matrix>& kraus_ops() const { return ops_; }

private:
    KrausChannel(std::vector<Matrix> ops, Field field) : ops_(std::move(ops)), field_(field) {}

    std::vector<Matrix> ops_;
    Field field_;
};

DensityMatrix maximally_mixed(int n, Field field);

/// Rank-1 projector onto the first column of a Haar random matrix.
DensityMatrix random_pure(int n, Field field, RngStream& rng);

/// rho = (I + tau . sigma)/2; pure states sit at |tau| = 1.
DensityMatrix qubit_from_bloch(const BlochVector& v);
BlochVector bloch_from_qubit(const DensityMatrix& rho);

/// Blow the Bloch ball up onto the Uhlmann hemisphere: the maximally mixed
/// state maps to the hyper-pole, pure states to the hyper-equator u = 0.
UhlmannPoint uhlmann_embed(const DensityMatrix& rho);

DensityMatrix apply_channel(const DensityMatrix& rho, const KrausChannel& channel);

/// Stinespring truncation of a Haar unitary of size n*k: the completeness
/// relation holds by construction, up to roundoff.
KrausChannel random_channel(int n, int k, Field field, RngStream& rng);

} // namespace buresgeom
