#include <cmath>

#include "doctest.h"

#include "confract/fundsol.hpp"
#include "confract/symmetry.hpp"
#include "oracles.hpp"

using namespace confract;

TEST_CASE("A at (1, 1, 1) for a = b = 1, alpha = 1")
{
    const KernelMatrix k = kernel_example31(1, 1, Order(1));
    const double want = 0.5 * std::exp(-2.0) * (oracle::bessel_i(0, 2) + oracle::bessel_i(2, 2));
    CHECK(k(1, 1, 1)(0, 0) == doctest::Approx(want).epsilon(1e-14));
}

TEST_CASE("structure of the example31 kernel")
{
    const KernelMatrix k = kernel_example31(2, 0.5, Order(0.6));
    const KernelMatrix sym = kernel_example31(1.5, 1.5, Order(0.6));
    for (double t : {0.01, 0.4, 2.0})
        for (double x : {0.2, 1.0, 3.0})
            for (double y : {0.5, 2.0}) {
                const Eigen::Matrix2d P = k(t, x, y);
                CHECK(P.allFinite());
                CHECK(P(0, 0) == P(1, 1));
                CHECK(P(1, 0) / P(0, 1) == doctest::Approx(0.5 / 2));
                const Eigen::Matrix2d S = sym(t, x, y);
                CHECK(S(0, 1) == doctest::Approx(S(1, 0)));
            }
}

TEST_CASE("structure of the eq3 kernel")
{
    const KernelMatrix k = kernel_eq3(1, 1, 4, Order(0.5));
    const KernelMatrix sym = kernel_eq3(1.5, 2, 2, Order(0.5));
    for (double t : {0.01, 0.4, 2.0})
        for (double x : {0.2, 1.0, 3.0})
            for (double y : {0.5, 2.0}) {
                const Eigen::Matrix2d P = k(t, x, y);
                CHECK(P.allFinite());
                CHECK(P(0, 0) == P(1, 1));
                CHECK(P(1, 0) / P(0, 1) == doctest::Approx(4.0 / 1));
                const Eigen::Matrix2d S = sym(t, x, y);
                CHECK(S(0, 1) == doctest::Approx(S(1, 0)));
            }
    // c = 1, m = n: the two Bessel orders coincide, so gamma2 vanishes at x = y
    const KernelParts parts = kernel_parts_eq3(0.7, 1.3, 1.3, {1, 2, 2}, Order(0.5));
    CHECK(std::abs(parts.gamma2) < 1e-15 * std::abs(parts.gamma1));
}

TEST_CASE("kernel at alpha = 1 matches the classical formulas")
{
    const KernelMatrix k31 = kernel_example31(4, 1, Order(1));
    const KernelMatrix k3 = kernel_eq3(2, 2, 2, Order(1));
    for (double t : {0.05, 0.5, 2.0})
        for (double x : {0.5, 1.1, 2.0})
            for (double y : {0.5, 1.0, 2.0}) {
                const Eigen::Matrix2d a = oracle::classical_kernel_example31(4, 1, t, x, y);
                CHECK((k31(t, x, y) - a).cwiseAbs().maxCoeff() <= 1e-12 * a.cwiseAbs().maxCoeff());
                const Eigen::Matrix2d b = oracle::classical_kernel_eq3(2, 2, 2, t, x, y);
                CHECK((k3(t, x, y) - b).cwiseAbs().maxCoeff() <= 1e-12 * b.cwiseAbs().maxCoeff());
            }
}

TEST_CASE("kernel columns solve their systems")
{
    const KernelMatrix k = kernel_example31(2, 0.5, Order(0.6));
    const SystemSpec s = make_example31(2, 0.5, Order(0.6));
    const KernelMatrix k3 = kernel_eq3(1, 1, 4, Order(0.5));
    const SystemSpec s3 = make_eq3(1, 1, 4, Order(0.5));
    for (int col = 0; col < 2; ++col)
        for (double x : {0.5, 1.2, 2.0})
            for (double t : {0.3, 1.0, 2.0}) {
                CHECK(residual_detail(s, kernel_column(k, col, 1.0), {x, t}).scaled() < 1e-5);
                CHECK(residual_detail(s3, kernel_column(k3, col, 1.0), {x, t}).scaled() < 1e-5);
            }
    CHECK_THROWS_AS(kernel_column(k, 2, 1.0), ParameterError);
}

TEST_CASE("kernel domain")
{
    const KernelMatrix k = kernel_example31(2, 0.5, Order(0.6));
    CHECK_THROWS_AS(k(kernel_t_min / 2, 1, 1), DomainError);
    CHECK_THROWS_AS(k(1, 0, 1), DomainError);
    CHECK_THROWS_AS(k(1, 1, -1), DomainError);
    // deep in the small-t regime the scaled Bessel path stays finite
    CHECK(k(kernel_t_min, 1, 1.01).allFinite());
    CHECK_THROWS_AS(kernel_eq3(1, 1, -1, Order(1)), ParameterError);
}

TEST_CASE("identity pushforward")
{
    const KernelMatrix k = kernel_eq3(1, 1, 4, Order(0.5));
    const KernelMatrix p = pushforward_kernel(k, identity_transformation());
    for (double y : {0.5, 2.0})
        CHECK((p(0.7, 1.2, y) - k(0.7, 1.2, y)).cwiseAbs().maxCoeff() <= 1e-12 * k(0.7, 1.2, y).cwiseAbs().maxCoeff());
}

TEST_CASE("example33 pushforward solves the transformed system")
{
    const TransformedSystem t = make_transformed_example33(0.5, 2, 1, 0.3, 1, 1, 4, Order(0.5));
    const KernelMatrix p = pushforward_kernel(kernel_eq3(1, 1, 4, Order(0.5)), t.td);
    for (int col = 0; col < 2; ++col)
        for (double x : {0.5, 1.2, 2.0})
            for (double tt : {0.3, 1.0, 2.0})
                CHECK(residual_detail(t.spec, kernel_column(p, col, 1.0), {x, tt}).scaled() < 1e-4);
}

TEST_CASE("pushforward and back")
{
    const KernelMatrix k = kernel_eq3(1, 1, 4, Order(0.5));
    const TransformedSystem t = make_transformed_example33(0.5, 2, 1, 0.3, 1, 1, 4, Order(0.5));
    const KernelMatrix there = pushforward_kernel(k, t.td);
    const KernelMatrix back = pushforward_kernel(there, inverse(t.td));
    const KernelMatrix pw = pushforward_kernel(kernel_example31(2, 0.5, Order(0.8)), power_transformation(0.5, Order(0.8)));
    const KernelMatrix pw_back = pushforward_kernel(pw, inverse(power_transformation(0.5, Order(0.8))));
    for (double x : {0.6, 1.4})
        for (double y : {0.5, 1.5}) {
            const Eigen::Matrix2d want = k(0.8, x, y);
            CHECK((back(0.8, x, y) - want).cwiseAbs().maxCoeff() <= 1e-8 * want.cwiseAbs().maxCoeff());
            const Eigen::Matrix2d w2 = kernel_example31(2, 0.5, Order(0.8))(0.8, x, y);
            CHECK((pw_back(0.8, x, y) - w2).cwiseAbs().maxCoeff() <= 1e-8 * w2.cwiseAbs().maxCoeff());
        }
}

TEST_CASE("the fractional kernel is the classical one in the time t^alpha / alpha")
{
    for (double al : {0.5, 0.6, 0.8}) {
        const KernelMatrix k = kernel_eq3(1, 1, 4, Order(al));
        const KernelMatrix k1 = kernel_eq3(1, 1, 4, Order(1));
        const KernelMatrix e = kernel_example31(2, 0.5, Order(al));
        const KernelMatrix e1 = kernel_example31(2, 0.5, Order(1));
        for (double t : {0.02, 0.3, 1.5}) {
            const double tau = std::pow(t, al) / al;
            const Eigen::Matrix2d a = k(t, 1.2, 0.9), b = k1(tau, 1.2, 0.9);
            CHECK((a - b).cwiseAbs().maxCoeff() <= 1e-13 * b.cwiseAbs().maxCoeff());
            const Eigen::Matrix2d c = e(t, 1.2, 0.9), d = e1(tau, 1.2, 0.9);
            CHECK((c - d).cwiseAbs().maxCoeff() <= 1e-13 * d.cwiseAbs().maxCoeff());
        }
    }
}
