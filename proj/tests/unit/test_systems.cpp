#include <cmath>

#include <Eigen/LU>

#include "doctest.h"

#include "confract/symmetry.hpp"
#include "confract/systems.hpp"
#include "oracles.hpp"

using namespace confract;

namespace {

double max_abs(const std::array<double, 6>& a)
{
    double m = 0;
    for (double v : a)
        m = std::max(m, std::abs(v));
    return m;
}

}  // namespace

TEST_CASE("example31 constructor")
{
    const SystemSpec s = make_example31(2, 0.5, Order(0.6));
    CHECK(s.h(1.5, 1) == 1.5);
    CHECK(s.g1(1, 1) == 2);
    CHECK(s.g2(1, 1) == 0.5);
    CHECK(s.f1(1, 1) == 0);
    CHECK_THROWS_AS(make_example31(1, -1, Order(0.5)), ParameterError);
    CHECK_THROWS_AS(make_example31(1, 1, Order(1.5)), ParameterError);
}

TEST_CASE("seeds solve their systems")
{
    const Example31Params p{2, 0.5};
    const SystemSpec s = make_example31(2, 0.5, Order(0.6));
    for (int i = 1; i <= 2; ++i)
        CHECK(residual_detail(s, steady_seed_example31(i, p), {1.3, 0.7}).scaled() < 1e-12);
}

TEST_CASE("eq2 with k = -1 is eq3")
{
    const SystemSpec a = make_eq2(1, 1, 1, -1, Order(1));
    const SystemSpec b = make_eq3(1, 1, 1, Order(1));
    for (double x : {0.5, 1.0, 3.0}) {
        CHECK(a.f1(x, 1) == b.f1(x, 1));
        CHECK(a.g1(x, 1) == doctest::Approx(b.g1(x, 1)));
        CHECK(a.g2(x, 1) == doctest::Approx(b.g2(x, 1)));
    }
    CHECK_THROWS_AS(make_eq2(1, 1, -1, -1, Order(1)), ParameterError);
}

TEST_CASE("eq2 seeds with (p - 1 + c)^2 = mn")
{
    // (2, 1, 4, -1, 0.5): steady pairs x^p (1, w) with p in {0, 1 + sqrt(mn) - c}
    const double c = 2, m = 1, n = 4, q = std::sqrt(m * n);
    const SystemSpec s = make_eq2(c, m, n, -1, Order(0.5));
    const double p = 1 + q - c;
    CHECK((p - 1 + c) * (p - 1 + c) == doctest::Approx(m * n));
    const SolutionPair seed = make_pair([=](double x, double) { return -q / n * std::pow(x, p); },
                                        [=](double x, double) { return std::pow(x, p); });
    CHECK(residual_detail(s, seed, {1.1, 0.8}).scaled() < 1e-6);
    const Eq3Params ep{c, m, n};
    CHECK(residual_detail(s, steady_seed_eq3(1, ep), {1.1, 0.8}).scaled() < 1e-12);
}

TEST_CASE("example33 coefficients at (1, 1, 1, -1)")
{
    const TransformedSystem t = make_transformed_example33(1, 1, 1, -1, 1, 1, 1, Order(0.7));
    for (double x : {0.5, 1.0, 2.5}) {
        CHECK(t.spec.f1(x, 1) == doctest::Approx(1 / x));
        CHECK(t.spec.f2(x, 1) == doctest::Approx(1 / x));
        CHECK(t.spec.g1(x, 1) == doctest::Approx(1 / x));
        CHECK(t.spec.g2(x, 1) == doctest::Approx(1 / x));
    }
}

TEST_CASE("example33 with a1 = 0")
{
    const double c = 1, m = 1, n = 4, q = 2;
    const TransformedSystem t = make_transformed_example33(0, 2, 1, 0.3, c, m, n, Order(0.5));
    CHECK(t.spec.g1(1.3, 1) == 0);
    // a1 = 0 forces B1 = B2
    CHECK(t.spec.f1(1.3, 1) == doctest::Approx(-(c - 2 - q) / 1.3));
    CHECK(t.spec.f2(1.3, 1) == doctest::Approx(-(c - 2 + q) / 1.3));
    CHECK_THROWS_AS(make_transformed_example33(1, 1, 1, 1, c, m, n, Order(0.5)), ParameterError);
}

TEST_CASE("F times F inverse")
{
    const TransformedSystem t = make_transformed_example33(0.5, 2, 1, 0.3, 1, 1, 4, Order(0.5));
    for (double x : {0.5, 1.0, 2.0}) {
        const Eigen::Matrix2d F = t.td.F(x, 0.4);
        CHECK((F * F.inverse() - Eigen::Matrix2d::Identity()).cwiseAbs().maxCoeff() < 1e-14);
        CHECK(t.td.kappa(x, 0.4) != 0);
    }
}

TEST_CASE("identity transformation leaves coefficients unchanged")
{
    const SystemSpec s = make_eq3(1, 1, 4, Order(0.5));
    for (double x : {0.6, 1.4})
        for (double t : {0.3, 1.7}) {
            const TransformedCoefficients c = transformed_coefficients_at(s, identity_transformation(), x, t);
            CHECK(c.h == doctest::Approx(1).epsilon(1e-9));
            CHECK(c.f1 == doctest::Approx(s.f1(x, t)).epsilon(1e-9));
            CHECK(c.g1 == doctest::Approx(s.g1(x, t)).epsilon(1e-9));
            CHECK(c.g2 == doctest::Approx(s.g2(x, t)).epsilon(1e-9));
            CHECK(c.f2 == doctest::Approx(s.f2(x, t)).epsilon(1e-9));
            CHECK(max_abs(constraint_residual(s, identity_transformation(), {x, t})) == 0);
        }
}

TEST_CASE("example33 coefficients against the closed form and the matrix form")
{
    const Order al(0.5);
    const SystemSpec src = make_eq3(1, 1, 4, al);
    const TransformedSystem t = make_transformed_example33(0.5, 2, 1, 0.3, 1, 1, 4, al);
    for (double x : {0.5, 0.9, 1.6, 2.0})
        for (double tt : {0.3, 1.0, 2.0}) {
            const TransformedCoefficients c = transformed_coefficients_at(src, t.td, x, tt);
            const auto m = oracle::transformed_matrix_form(src, t.td, x, tt);
            CHECK(c.h == doctest::Approx(1).epsilon(1e-8));
            CHECK(c.f1 == doctest::Approx(t.spec.f1(x, tt)).epsilon(1e-8));
            CHECK(c.g1 == doctest::Approx(t.spec.g1(x, tt)).epsilon(1e-8));
            CHECK(c.g2 == doctest::Approx(t.spec.g2(x, tt)).epsilon(1e-8));
            CHECK(c.f2 == doctest::Approx(t.spec.f2(x, tt)).epsilon(1e-8));
            CHECK(m[0] == doctest::Approx(c.h).epsilon(1e-7));
            CHECK(m[1] == doctest::Approx(c.f1).epsilon(1e-7));
            CHECK(m[2] == doctest::Approx(c.g1).epsilon(1e-7));
            CHECK(m[3] == doctest::Approx(c.g2).epsilon(1e-7));
            CHECK(m[4] == doctest::Approx(c.f2).epsilon(1e-7));
            CHECK(max_abs(constraint_residual(src, t.td, {x, tt})) < 1e-6);
        }
}

TEST_CASE("power transformation maps the power system to its closed-form image")
{
    const double q = 0.5, ap = 1, bp = 2;
    for (double alpha : {0.8, 1.0}) {
        const Order al(alpha);
        const SystemSpec src = make_general_power(q, ap, bp, al);
        const SystemSpec want = make_power_transformed(q, ap, bp, al);
        const TransformationData td = power_transformation(q, al);
        for (double y : {0.6, 1.2, 1.9})
            for (double tau : {0.4, 1.5}) {
                const TransformedCoefficients c = transformed_coefficients_at(src, td, y, tau);
                CHECK(c.h == doctest::Approx(want.h(y, tau)).epsilon(1e-8));
                CHECK(c.f1 == doctest::Approx(want.f1(y, tau)).epsilon(1e-7));
                CHECK(c.f2 == doctest::Approx(want.f2(y, tau)).epsilon(1e-7));
                CHECK(c.g1 == doctest::Approx(want.g1(y, tau)).epsilon(1e-8));
                CHECK(c.g2 == doctest::Approx(want.g2(y, tau)).epsilon(1e-8));
                const auto m = oracle::transformed_matrix_form(src, td, y, tau);
                CHECK(m[1] == doctest::Approx(c.f1).epsilon(1e-7));
            }
    }
    CHECK_THROWS_AS(power_transformation(2.5, Order(1)), ParameterError);
}

TEST_CASE("random smooth F breaks the constraints")
{
    const SystemSpec src = make_eq3(1, 1, 4, Order(0.5));
    TransformationData td = identity_transformation();
    td.r1 = [](double x, double t) { return 1 + 0.3 * std::sin(x) * t; };
    td.r2 = [](double x, double) { return 0.2 * x * x; };
    td.s2 = [](double x, double t) { return 0.1 * std::exp(-x) + t; };
    td.s1 = [](double x, double) { return 2 + std::cos(x); };
    CHECK(max_abs(constraint_residual(src, td, {1.0, 0.5})) > 1e-2);
}

TEST_CASE("inverses and composition")
{
    const TransformationData p = power_transformation(0.5, Order(0.8));
    for (double x : {0.5, 1.3}) {
        const double t = 0.7;
        CHECK(p.inverse_x(p.X(x, t), p.Y(t)) == doctest::Approx(x).epsilon(1e-14));
        CHECK(p.Y(0) == 0);
    }
    TransformationData bisected = p;
    bisected.Z = {};
    bisected.Yinv = {};
    CHECK(bisected.inverse_x(p.X(1.3, 0.7), p.Y(0.7)) == doctest::Approx(1.3).epsilon(1e-10));

    const TransformationData round = compose(p, inverse(p));
    for (double x : {0.5, 1.3}) {
        CHECK(round.X(x, 0.7) == doctest::Approx(x).epsilon(1e-10));
        CHECK(round.Y(0.7) == doctest::Approx(0.7).epsilon(1e-10));
    }

    const TransformedSystem t = make_transformed_example33(0.5, 2, 1, 0.3, 1, 1, 4, Order(0.5));
    const TransformationData back = compose(t.td, inverse(t.td));
    CHECK((back.F(1.2, 0.5) - Eigen::Matrix2d::Identity()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("singular transformation is reported")
{
    TransformationData td = identity_transformation();
    td.r1 = td.s1 = td.r2 = td.s2 = [](double, double) { return 1.0; };
    CHECK_THROWS_AS(transformed_coefficients_at(make_eq3(1, 1, 1, Order(1)), td, 1, 1), SingularityError);
}
