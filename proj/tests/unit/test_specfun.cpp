#include <cmath>
#include <numbers>

#include "doctest.h"

#include "confract/specfun.hpp"
#include "oracles.hpp"

using namespace confract;

TEST_CASE("gamma at integers and one half")
{
    CHECK(confract::gamma(1.0) == doctest::Approx(1).epsilon(1e-15));
    CHECK(confract::gamma(5.0) == doctest::Approx(24).epsilon(1e-14));
    CHECK(confract::gamma(0.5) == doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-14));
}

TEST_CASE("gamma errors")
{
    CHECK_THROWS_AS(confract::gamma(0.0), PoleError);
    CHECK_THROWS_AS(confract::gamma(-3.0), PoleError);
    CHECK_THROWS_AS(confract::gamma(200.0), OverflowError);
    CHECK_THROWS_AS(confract::gamma(NAN), DomainError);
}

TEST_CASE("bessel_i at zero argument")
{
    CHECK(bessel_i(0.0, 0.0) == 1);
    CHECK(bessel_i(2.0, 0.0) == 0);
    CHECK_THROWS_AS(bessel_i(-0.5, 0.0), OverflowError);
}

TEST_CASE("bessel_i half order closed form")
{
    for (double z : {0.1, 1.0, 5.0, 20.0, 60.0}) {
        const double want = std::sqrt(2 / (std::numbers::pi * z)) * std::sinh(z);
        CHECK(bessel_i(0.5, z) == doctest::Approx(want).epsilon(1e-12));
    }
    for (double z : {0.1, 1.0, 5.0, 20.0}) {
        const double want = std::sqrt(2 / (std::numbers::pi * z)) * std::cosh(z);
        CHECK(bessel_i(-0.5, z) == doctest::Approx(want).epsilon(1e-12));
    }
}

TEST_CASE("series and asymptotic branches agree at the crossover")
{
    CHECK(bessel_i_series(1.3, 25.0) == doctest::Approx(bessel_i_asymptotic(1.3, 25.0)).epsilon(1e-12));
    for (double nu : {0.0, 0.5, 2.0, 3.7})
        CHECK(bessel_i_series(nu, 32.0) == doctest::Approx(bessel_i_asymptotic(nu, 32.0)).epsilon(1e-12));
}

TEST_CASE("bessel_i against the standard library")
{
    for (double nu : {-0.75, -0.2, 0.0, 0.4, 1.0, 2.5, 4.0})
        for (double z : {0.01, 0.3, 2.0, 9.0, 29.0, 31.0, 70.0}) {
            CAPTURE(nu);
            CAPTURE(z);
            CHECK(bessel_i(nu, z) == doctest::Approx(oracle::bessel_i(nu, z)).epsilon(1e-12));
        }
}

TEST_CASE("integer negative orders reflect")
{
    CHECK(bessel_i(-1.0, 2.3) == bessel_i(1.0, 2.3));
}

TEST_CASE("scaled bessel stays finite past overflow")
{
    CHECK_THROWS_AS(bessel_i(0.0, 800.0), OverflowError);
    const double s = bessel_i_scaled(0.0, 800.0);
    CHECK(std::isfinite(s));
    CHECK(s == doctest::Approx(1 / std::sqrt(2 * std::numbers::pi * 800)).epsilon(1e-3));
    CHECK(bessel_i_scaled(1.5, 3.0) == doctest::Approx(bessel_i(1.5, 3.0) * std::exp(-3.0)).epsilon(1e-14));
}

TEST_CASE("bessel argument checks")
{
    CHECK_THROWS_AS(bessel_i(-1.5, 1.0), DomainError);
    CHECK_THROWS_AS(bessel_i(0.0, -1.0), DomainError);
    CHECK_THROWS_AS(bessel_i(HUGE_VAL, 1.0), DomainError);
}

TEST_CASE("float instantiation")
{
    CHECK(bessel_i(0.5f, 1.0f) == doctest::Approx(std::sqrt(2 / std::numbers::pi) * std::sinh(1.0)).epsilon(1e-6));
}
