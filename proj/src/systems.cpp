#include "confract/systems.hpp"

#include <cmath>

#include <Eigen/LU>

#include "confract/fd.hpp"

namespace confract {

namespace {

ScalarField constant_field(double c)
{
    return [c](double, double) { return c; };
}

double bisect(const std::function<double(double)>& g, double target, double lo, double hi)
{
    double glo = g(lo) - target;
    double ghi = g(hi) - target;
    if (glo * ghi > 0)
        throw SingularityError("bisection inverse: target outside bracket");
    for (int i = 0; i < 400; ++i) {
        double mid = 0.5 * (lo + hi);
        double gm = g(mid) - target;
        if (gm == 0)
            return mid;
        if ((gm < 0) == (glo < 0)) {
            lo = mid;
            glo = gm;
        }
        else {
            hi = mid;
        }
        if (hi - lo <= 1e-12 * std::max(1.0, std::abs(mid)))
            break;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

Eigen::Matrix2d SystemSpec::first_order(double x, double t) const
{
    Eigen::Matrix2d m;
    m << f1(x, t), g1(x, t), g2(x, t), f2(x, t);
    return m;
}

double Example31Params::s() const { return std::sqrt(a * b); }
double Eq3Params::q() const { return std::sqrt(m * n); }

void validate(const Example31Params& p)
{
    if (!(p.a * p.b > 0))
        throw ParameterError("example31 requires a*b > 0");
}

void validate(const Eq3Params& p)
{
    if (!(p.m * p.n > 0))
        throw ParameterError("eq3 requires m*n > 0");
    if (!std::isfinite(p.c))
        throw ParameterError("eq3 requires finite c");
}

SystemSpec make_example31(double a, double b, Order alpha)
{
    validate(Example31Params{a, b});
    return SystemSpec{[](double x, double) { return x; },
                      constant_field(0),
                      constant_field(0),
                      constant_field(a),
                      constant_field(b),
                      alpha,
                      "example31"};
}

SystemSpec make_eq2(double c, double m, double n, double k, Order alpha)
{
    if (!(m * n > 0))
        throw ParameterError("eq2 requires m*n > 0");
    auto drift = [c](double x, double) { return c / x; };
    return SystemSpec{constant_field(1),
                      drift,
                      drift,
                      [m, k](double x, double) { return m * std::pow(x, k); },
                      [n, k](double x, double) { return n * std::pow(x, k); },
                      alpha,
                      "eq2"};
}

SystemSpec make_eq3(double c, double m, double n, Order alpha)
{
    validate(Eq3Params{c, m, n});
    auto drift = [c](double x, double) { return c / x; };
    return SystemSpec{constant_field(1),
                      drift,
                      drift,
                      [m](double x, double) { return m / x; },
                      [n](double x, double) { return n / x; },
                      alpha,
                      "eq3"};
}

SystemSpec make_general_power(double q, double a_prime, double b_prime, Order alpha)
{
    if (q == 2)
        throw ParameterError("power system requires q != 2");
    return SystemSpec{[q](double x, double) { return std::pow(x, q); },
                      constant_field(0),
                      constant_field(0),
                      constant_field(a_prime),
                      constant_field(b_prime),
                      alpha,
                      "general-power"};
}

SystemSpec make_power_transformed(double q, double a_prime, double b_prime, Order alpha)
{
    if (q == 2)
        throw ParameterError("power system requires q != 2");
    auto drift = [q](double y, double) { return q / ((q - 2) * y); };
    double e = q / (q - 2);
    double k = 2 / (2 - q);
    return SystemSpec{constant_field(1),
                      drift,
                      drift,
                      [=](double y, double) { return a_prime * k * std::pow(y, e); },
                      [=](double y, double) { return b_prime * k * std::pow(y, e); },
                      alpha,
                      "power-transformed"};
}

Eigen::Matrix2d TransformationData::F(double x, double t) const
{
    Eigen::Matrix2d m;
    m << r1(x, t), r2(x, t), s2(x, t), s1(x, t);
    return m;
}

Eigen::Vector2d TransformationData::shift(double x, double t) const { return {r3(x, t), s3(x, t)}; }

double TransformationData::kappa(double x, double t) const { return r1(x, t) * s1(x, t) - r2(x, t) * s2(x, t); }
double TransformationData::delta(double x, double t) const { return r2(x, t) * s3(x, t) - r3(x, t) * s1(x, t); }
double TransformationData::rho(double x, double t) const { return r3(x, t) * s2(x, t) - r1(x, t) * s3(x, t); }

double TransformationData::inverse_t(double tt) const
{
    if (Yinv)
        return Yinv(tt);
    return bisect(Y, tt, t_lo, t_hi);
}

double TransformationData::inverse_x(double xt, double tt) const
{
    if (Z)
        return Z(xt, tt);
    double t = inverse_t(tt);
    return bisect([&](double x) { return X(x, t); }, xt, x_lo, x_hi);
}

double TransformationData::inverse_x_derivative(double xt, double tt) const
{
    if (Z_x)
        return Z_x(xt, tt);
    return fd::central_first([&](double s) { return inverse_x(s, tt); }, xt);
}

TransformationData identity_transformation()
{
    TransformationData td;
    td.X = [](double x, double) { return x; };
    td.Y = [](double t) { return t; };
    td.Z = [](double x, double) { return x; };
    td.Yinv = [](double t) { return t; };
    td.Z_x = [](double, double) { return 1.0; };
    td.r1 = td.s1 = constant_field(1);
    td.r2 = td.r3 = td.s2 = td.s3 = constant_field(0);
    td.label = "identity";
    return td;
}

TransformationData example33_transformation(double a1, double a2, double b1, double b2, const Eq3Params& p)
{
    validate(p);
    double B2 = a2 * b1 - a1 * b2;
    if (B2 == 0)
        throw ParameterError("example33 requires B2 = a2*b1 - a1*b2 != 0");
    double q = p.q();
    double n = p.n;
    double ep = q + p.c - 1;
    double em = -q + p.c - 1;
    TransformationData td = identity_transformation();
    td.r1 = [=](double x, double) { return (b1 * std::pow(x, em) - a1 * std::pow(x, ep)) / (2 * B2); };
    td.r2 = [=](double x, double) { return -q / (2 * n * B2) * (a1 * std::pow(x, ep) + b1 * std::pow(x, em)); };
    td.s2 = [=](double x, double) { return (a2 * std::pow(x, ep) - b2 * std::pow(x, em)) / (2 * B2); };
    td.s1 = [=](double x, double) { return q / (2 * n * B2) * (a2 * std::pow(x, ep) + b2 * std::pow(x, em)); };
    td.label = "example33";
    return td;
}

TransformedSystem make_transformed_example33(double a1, double a2, double b1, double b2, double c, double m, double n,
                                             Order alpha)
{
    Eq3Params p{c, m, n};
    TransformationData td = example33_transformation(a1, a2, b1, b2, p);
    double B1 = a2 * b1 + a1 * b2;
    double B2 = a2 * b1 - a1 * b2;
    double q = p.q();
    double k1 = -(c - 2 - q * B1 / B2);
    double k2 = -(c - 2 + q * B1 / B2);
    double l1 = 2 * q * a1 * b1 / B2;
    double l2 = -2 * q * a2 * b2 / B2;
    SystemSpec spec{constant_field(1),
                    [k1](double x, double) { return k1 / x; },
                    [k2](double x, double) { return k2 / x; },
                    [l1](double x, double) { return l1 / x; },
                    [l2](double x, double) { return l2 / x; },
                    alpha,
                    "transformed33"};
    return {spec, td};
}

TransformationData power_transformation(double q, Order alpha)
{
    if (!(q < 2))
        throw ParameterError("power transformation requires q < 2");
    double e = (2 - q) / 2;
    double k = std::pow(1 - q / 2, 2 / alpha.value());
    TransformationData td = identity_transformation();
    td.X = [e](double x, double) { return std::pow(x, e); };
    td.Y = [k](double t) { return k * t; };
    td.Z = [e](double y, double) { return std::pow(y, 1 / e); };
    td.Yinv = [k](double tau) { return tau / k; };
    td.Z_x = [e](double y, double) { return std::pow(y, 1 / e - 1) / e; };
    td.label = "power";
    return td;
}

TransformationData compose(const TransformationData& first, const TransformationData& second)
{
    TransformationData td;
    td.X = [=](double x, double t) { return second.X(first.X(x, t), first.Y(t)); };
    td.Y = [=](double t) { return second.Y(first.Y(t)); };
    td.Yinv = [=](double tt) { return first.inverse_t(second.inverse_t(tt)); };
    td.Z = [=](double xt, double tt) {
        double t1 = second.inverse_t(tt);
        return first.inverse_x(second.inverse_x(xt, tt), t1);
    };
    td.Z_x = [=](double xt, double tt) {
        double t1 = second.inverse_t(tt);
        double x1 = second.inverse_x(xt, tt);
        return first.inverse_x_derivative(x1, t1) * second.inverse_x_derivative(xt, tt);
    };
    auto matrix = [=](double x, double t) -> Eigen::Matrix2d {
        return second.F(first.X(x, t), first.Y(t)) * first.F(x, t);
    };
    auto shift = [=](double x, double t) -> Eigen::Vector2d {
        double x1 = first.X(x, t);
        double t1 = first.Y(t);
        return second.F(x1, t1) * first.shift(x, t) + second.shift(x1, t1);
    };
    td.r1 = [=](double x, double t) { return matrix(x, t)(0, 0); };
    td.r2 = [=](double x, double t) { return matrix(x, t)(0, 1); };
    td.s2 = [=](double x, double t) { return matrix(x, t)(1, 0); };
    td.s1 = [=](double x, double t) { return matrix(x, t)(1, 1); };
    td.r3 = [=](double x, double t) { return shift(x, t)(0); };
    td.s3 = [=](double x, double t) { return shift(x, t)(1); };
    td.x_lo = first.x_lo;
    td.x_hi = first.x_hi;
    td.t_lo = first.t_lo;
    td.t_hi = first.t_hi;
    td.label = first.label + "*" + second.label;
    return td;
}

TransformationData inverse(const TransformationData& td)
{
    TransformationData inv;
    inv.X = [=](double xt, double tt) { return td.inverse_x(xt, tt); };
    inv.Y = [=](double tt) { return td.inverse_t(tt); };
    inv.Z = td.X;
    inv.Yinv = td.Y;
    inv.Z_x = [=](double x, double t) {
        return fd::central_first([&](double s) { return td.X(s, t); }, x);
    };
    auto matrix = [=](double xt, double tt) -> Eigen::Matrix2d {
        double t = td.inverse_t(tt);
        return td.F(td.inverse_x(xt, tt), t).inverse();
    };
    auto shift = [=](double xt, double tt) -> Eigen::Vector2d {
        double t = td.inverse_t(tt);
        double x = td.inverse_x(xt, tt);
        return -(td.F(x, t).inverse() * td.shift(x, t));
    };
    inv.r1 = [=](double x, double t) { return matrix(x, t)(0, 0); };
    inv.r2 = [=](double x, double t) { return matrix(x, t)(0, 1); };
    inv.s2 = [=](double x, double t) { return matrix(x, t)(1, 0); };
    inv.s1 = [=](double x, double t) { return matrix(x, t)(1, 1); };
    inv.r3 = [=](double x, double t) { return shift(x, t)(0); };
    inv.s3 = [=](double x, double t) { return shift(x, t)(1); };
    inv.label = "inverse(" + td.label + ")";
    return inv;
}

namespace {

double x_derivative(const ScalarField& f, double x, double t)
{
    return fd::five_point_first([&](double s) { return f(s, t); }, x, fd::five_point_step(x));
}

double x_second(const ScalarField& f, double x, double t)
{
    return fd::five_point_second([&](double s) { return f(s, t); }, x, fd::five_point_step(x));
}

double conformable_t(const ScalarField& f, double x, double t, double alpha)
{
    return std::pow(t, 1 - alpha) * fd::central_first([&](double s) { return f(x, s); }, t);
}

void require_nonsingular(double value, double scale, const char* what)
{
    if (!std::isfinite(value) || std::abs(value) <= 1e-14 * scale)
        throw SingularityError(std::string(what) + " vanishes");
}

}  // namespace

TransformedCoefficients transformed_coefficients_at(const SystemSpec& spec, const TransformationData& td, double xt,
                                                    double tt)
{
    const double alpha = spec.alpha.value();
    const double t = td.inverse_t(tt);
    const double x = td.inverse_x(xt, tt);

    const double r1 = td.r1(x, t), r2 = td.r2(x, t), s1 = td.s1(x, t), s2 = td.s2(x, t);
    const double kappa = r1 * s1 - r2 * s2;
    require_nonsingular(kappa, std::abs(r1 * s1) + std::abs(r2 * s2), "kappa");

    const double Xx = x_derivative(td.X, x, t);
    require_nonsingular(Xx, 1, "X_x");
    const double Xxx = x_second(td.X, x, t);
    const double TX = conformable_t(td.X, x, t, alpha);
    const double TY = std::pow(t, 1 - alpha) * fd::central_first(td.Y, t);
    const double W = std::pow(tt, alpha - 1) * TY;
    require_nonsingular(W, 1, "Y_t");

    const double r1x = x_derivative(td.r1, x, t), r2x = x_derivative(td.r2, x, t);
    const double s1x = x_derivative(td.s1, x, t), s2x = x_derivative(td.s2, x, t);

    const double h = spec.h(x, t);
    const double f1 = spec.f1(x, t), f2 = spec.f2(x, t), g1 = spec.g1(x, t), g2 = spec.g2(x, t);

    TransformedCoefficients out;
    out.h = h * Xx * Xx / W;
    out.f1 = (-TX + h * Xxx + 2 * h * Xx / kappa * (r2x * s2 - r1x * s1) +
              Xx / kappa * (f1 * r1 * s1 - g1 * r1 * s2 - f2 * r2 * s2 + g2 * r2 * s1)) /
             W;
    out.g1 = Xx / (kappa * W) * (2 * h * (r2 * r1x - r1 * r2x) - f1 * r1 * r2 + g1 * r1 * r1 + f2 * r1 * r2 - g2 * r2 * r2);
    out.f2 = (-TX + h * Xxx + 2 * h * Xx / kappa * (r2 * s2x - r1 * s1x) +
              Xx / kappa * (-f1 * r2 * s2 + g1 * r1 * s2 + f2 * r1 * s1 - g2 * r2 * s1)) /
             W;
    out.g2 = Xx / (kappa * W) * (2 * h * (s2 * s1x - s1 * s2x) + f1 * s1 * s2 - g1 * s2 * s2 - f2 * s1 * s2 + g2 * s1 * s1);
    return out;
}

SystemSpec transform_coefficients(const SystemSpec& spec, const TransformationData& td)
{
    auto at = [spec, td](double xt, double tt) { return transformed_coefficients_at(spec, td, xt, tt); };
    return SystemSpec{[at](double x, double t) { return at(x, t).h; },
                      [at](double x, double t) { return at(x, t).f1; },
                      [at](double x, double t) { return at(x, t).f2; },
                      [at](double x, double t) { return at(x, t).g1; },
                      [at](double x, double t) { return at(x, t).g2; },
                      spec.alpha,
                      spec.label + "->" + td.label};
}

std::array<double, 6> constraint_residual(const SystemSpec& spec, const TransformationData& td, const EvalPoint& p)
{
    check_interior(p);
    const double alpha = spec.alpha.value();
    const double x = p.x, t = p.t;

    auto over_kappa = [&td](const ScalarField& f) -> ScalarField {
        return [&td, &f](double x, double t) { return f(x, t) / td.kappa(x, t); };
    };
    ScalarField delta = [&td](double x, double t) { return td.delta(x, t); };
    ScalarField rho = [&td](double x, double t) { return td.rho(x, t); };

    const ScalarField R1 = over_kappa(td.r1), R2 = over_kappa(td.r2);
    const ScalarField S1 = over_kappa(td.s1), S2 = over_kappa(td.s2);
    const ScalarField D = over_kappa(delta), P = over_kappa(rho);

    const double h = spec.h(x, t);
    const double f1 = spec.f1(x, t), f2 = spec.f2(x, t), g1 = spec.g1(x, t), g2 = spec.g2(x, t);

    auto op = [&](const ScalarField& w, double f, double g, const ScalarField& other, double sign) {
        return conformable_t(w, x, t, alpha) - h * x_second(w, x, t) - f * x_derivative(w, x, t) +
               sign * g * x_derivative(other, x, t);
    };

    return {op(R1, f2, g2, R2, 1), op(S1, f1, g1, S2, 1), op(R2, f1, g1, R1, 1),
            op(S2, f2, g2, S1, 1), op(D, f1, g1, P, -1), op(P, f2, g2, D, -1)};
}

}  // namespace confract
