#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "buresgeom/montecarlo.hpp"
#include "buresgeom/states.hpp"
#include "test_util.hpp"

using namespace buresgeom;
using test::diag_state;
using test::herm;

TEST_CASE("new_density accepts valid states") {
    const DensityMatrix mixed = diag_state({0.5, 0.5});
    CHECK(mixed.dim() == 2);
    const DensityMatrix pure = diag_state({1.0, 0.0}); // (I + sigma_z)/2
    CHECK(pure.purity() == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("new_density rejects and lists violations") {
    Matrix neg(2, 2);
    neg << Complex(1.1, 0), Complex(0, 0), Complex(0, 0), Complex(-0.1, 0);
    CHECK_THROWS_WITH_AS(new_density(herm(neg)), doctest::Contains("negative eigenvalue"),
                         ValidationError);

    Matrix both(2, 2);
    both << Complex(1.5, 0), Complex(0, 0), Complex(0, 0), Complex(-0.2, 0);
    try {
        new_density(herm(both));
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(e.violations().size() == 2);
    }
}

TEST_CASE("maximally_mixed") {
    for (int n : {2, 3, 7}) {
        const DensityMatrix rho = maximally_mixed(n, Field::Complex);
        const auto dec = eigh(rho.herm());
        for (int i = 0; i < n; ++i) {
            CHECK(dec.values[i] == doctest::Approx(1.0 / n).epsilon(1e-14));
        }
    }
}

TEST_CASE("random_pure is a rank-1 projector") {
    RngStream rng(17);
    for (Field field : {Field::Complex, Field::Real}) {
        for (int n : {2, 3, 5}) {
            const DensityMatrix rho = random_pure(n, field, rng);
            CHECK(std::abs(rho.purity() - 1.0) < 1e-12);
            const auto dec = eigh(rho.herm());
            CHECK(dec.values[n - 1] == doctest::Approx(1.0).epsilon(1e-12));
            for (int i = 0; i + 1 < n; ++i) {
                CHECK(std::abs(dec.values[i]) < 1e-12);
            }
        }
    }
}

TEST_CASE("random_pure qubits cover the Bloch sphere uniformly") {
    RngStream rng(99);
    std::vector<double> zs;
    for (int i = 0; i < 10000; ++i) {
        zs.push_back(bloch_from_qubit(random_pure(2, Field::Complex, rng)).z);
    }
    const double ks = ks_statistic(zs, [](double z) { return 0.5 * (z + 1.0); });
    CHECK(ks < 0.02);
}

TEST_CASE("bloch round trip and anchors") {
    const DensityMatrix center = qubit_from_bloch({0, 0, 0});
    CHECK((center.entries() - Matrix::Identity(2, 2) * 0.5).cwiseAbs().maxCoeff() < 1e-15);

    const DensityMatrix north = qubit_from_bloch({0, 0, 1});
    CHECK(north.entries()(0, 0).real() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(std::abs(north.entries()(1, 1)) < 1e-15);

    RngStream rng(31);
    for (int t = 0; t < 100; ++t) {
        double x = rng.normal(), y = rng.normal(), z = rng.normal();
        const double norm = std::sqrt(x * x + y * y + z * z);
        const double r = std::cbrt(rng.uniform());
        BlochVector v{x / norm * r, y / norm * r, z / norm * r};
        const BlochVector back = bloch_from_qubit(qubit_from_bloch(v));
        CHECK(std::abs(back.x - v.x) < 1e-14);
        CHECK(std::abs(back.y - v.y) < 1e-14);
        CHECK(std::abs(back.z - v.z) < 1e-14);
    }

    CHECK_THROWS_AS(qubit_from_bloch({1.01, 0, 0}), DomainError);
    CHECK_THROWS_AS(bloch_from_qubit(maximally_mixed(3, Field::Complex)), DomainError);
}

TEST_CASE("uhlmann embedding") {
    const UhlmannPoint pole = uhlmann_embed(maximally_mixed(2, Field::Complex));
    CHECK(pole.x == 0.0);
    CHECK(pole.y == 0.0);
    CHECK(pole.z == 0.0);
    CHECK(pole.u == doctest::Approx(0.5).epsilon(1e-15));

    const UhlmannPoint equator = uhlmann_embed(qubit_from_bloch({0, 0, 1}));
    CHECK(equator.z == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(equator.u == 0.0);

    RngStream rng(5);
    for (int t = 0; t < 50; ++t) {
        const DensityMatrix rho = random_pure(2, Field::Complex, rng);
        const UhlmannPoint p = uhlmann_embed(rho);
        CHECK(std::abs(p.norm() - 0.5) < 1e-12);
        CHECK(p.u < 1e-10); // pure states land on the hyper-equator
    }
    CHECK_THROWS_AS(uhlmann_embed(maximally_mixed(3, Field::Complex)), DomainError);
}

TEST_CASE("apply_channel basics") {
    const DensityMatrix rho = qubit_from_bloch({0.3, -0.2, 0.4});

    const KrausChannel identity =
        KrausChannel::make({Matrix::Identity(2, 2)}, Field::Complex);
    CHECK((apply_channel(rho, identity).entries() - rho.entries()).cwiseAbs().maxCoeff() < 1e-14);

    // fully depolarizing qubit channel
    Matrix sx(2, 2), sy(2, 2), sz(2, 2);
    sx << Complex(0, 0), Complex(1, 0), Complex(1, 0), Complex(0, 0);
    sy << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
    sz << Complex(1, 0), Complex(0, 0), Complex(0, 0), Complex(-1, 0);
    const KrausChannel depolarizing = KrausChannel::make(
        {0.5 * Matrix::Identity(2, 2), 0.5 * sx, 0.5 * sy, 0.5 * sz}, Field::Complex);
    const DensityMatrix out = apply_channel(rho, depolarizing);
    CHECK((out.entries() - Matrix::Identity(2, 2) * 0.5).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("random channels are trace preserving and positivity preserving") {
    RngStream rng(23);
    const KrausChannel wide = random_channel(3, 4, Field::Complex, rng);
    Matrix sum = Matrix::Zero(3, 3);
    for (const auto& k : wide.kraus_ops()) {
        sum += k.adjoint() * k;
    }
    CHECK((sum - Matrix::Identity(3, 3)).cwiseAbs().maxCoeff() < 1e-10);

    for (int t = 0; t < 1000; ++t) {
        const int n = 2 + static_cast<int>(rng.uniform() * 3.0);
        const int k = 1 + static_cast<int>(rng.uniform() * 3.0);
        const DensityMatrix rho =
            t % 2 == 0 ? random_pure(n, Field::Complex, rng)
                       : apply_channel(random_pure(n, Field::Complex, rng),
                                       random_channel(n, 2, Field::Complex, rng));
        // make() inside apply_channel revalidates trace and positivity
        const DensityMatrix out = apply_channel(rho, random_channel(n, k, Field::Complex, rng));
        CHECK(std::abs(out.herm().trace() - 1.0) < 1e-12);
    }
}

TEST_CASE("k = 1 channels are unitary") {
    RngStream rng(41);
    const KrausChannel u = random_channel(3, 1, Field::Complex, rng);
    CHECK(u.kraus_ops().size() == 1);
    const Matrix& k = u.kraus_ops().front();
    CHECK((k * k.adjoint() - Matrix::Identity(3, 3)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("real channels stay real") {
    RngStream rng(8);
    const KrausChannel channel = random_channel(3, 2, Field::Real, rng);
    RngStream rng2(9);
    const DensityMatrix rho = random_pure(3, Field::Real, rng2);
    const DensityMatrix out = apply_channel(rho, channel);
    CHECK(out.field() == Field::Real);
    CHECK(out.entries().imag().cwiseAbs().maxCoeff() == 0.0);
}
