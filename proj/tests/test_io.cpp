#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>

#include "buresgeom/io.hpp"
#include "buresgeom/verify.hpp"
#include "test_util.hpp"

using namespace buresgeom;
using nlohmann::json;

TEST_CASE("state json round trip") {
    RngStream rng(404);
    for (Field field : {Field::Complex, Field::Real}) {
        for (int n : {2, 3, 5}) {
            const DensityMatrix rho = random_mixed_state(n, field, rng);
            const json j = density_to_json(rho);
            CHECK(j.at("n") == n);
            CHECK(j.at("beta") == beta_of(field));
            CHECK(j.contains("im") == (field == Field::Complex));
            const DensityMatrix back = density_from_json(j);
            CHECK((back.entries() - rho.entries()).cwiseAbs().maxCoeff() < 1e-15);
            CHECK(back.field() == field);
        }
    }
}

TEST_CASE("state files round trip on disk") {
    const auto path = std::filesystem::temp_directory_path() / "buresgeom_state_test.json";
    const DensityMatrix rho = test::diag_state({0.25, 0.75});
    save_density(rho, path);
    const DensityMatrix back = load_density(path);
    CHECK((back.entries() - rho.entries()).cwiseAbs().maxCoeff() == 0.0);
    std::filesystem::remove(path);
}

TEST_CASE("state json rejects malformed input") {
    CHECK_THROWS_AS(density_from_json(json::array()), DomainError);
    CHECK_THROWS_AS(density_from_json(json{{"n", 2}, {"beta", 2}}), DomainError);
    CHECK_THROWS_AS(density_from_json(json{{"n", 2}, {"beta", 3}, {"re", {{1, 0}, {0, 0}}}}),
                    DomainError);
    // wrong shape
    CHECK_THROWS_AS(density_from_json(json{{"n", 2}, {"beta", 2}, {"re", {{1, 0}}}}),
                    DomainError);
    // im block forbidden for real states
    CHECK_THROWS_AS(density_from_json(json{{"n", 2},
                                           {"beta", 1},
                                           {"re", {{0.5, 0}, {0, 0.5}}},
                                           {"im", {{0, 0}, {0, 0}}}}),
                    DomainError);
    // valid json but not a state
    CHECK_THROWS_AS(density_from_json(json{{"n", 2}, {"beta", 2}, {"re", {{1.5, 0}, {0, 0.5}}}}),
                    ValidationError);
    CHECK_THROWS_AS(load_density("/nonexistent/state.json"), DomainError);
}
