#include "confract/fundsol.hpp"

#include <cmath>

#include <Eigen/LU>

#include "confract/specfun.hpp"

namespace confract {

namespace {

void check_kernel_point(double t, double x, double y)
{
    if (!(x > 0) || !(y > 0))
        throw DomainError("kernel requires x > 0 and y > 0");
    if (!(t >= kernel_t_min))
        throw DomainError("kernel requires t >= " + std::to_string(kernel_t_min));
}

Eigen::Matrix2d assemble(const KernelParts& k, double ratio)
{
    Eigen::Matrix2d P;
    P << k.gamma1, ratio * k.gamma2, k.gamma2 / ratio, k.gamma1;
    return k.prefactor * P;
}

}  // namespace

KernelParts kernel_parts_example31(double t, double x, double y, const Example31Params& p, Order alpha)
{
    check_kernel_point(t, x, y);
    const double al = alpha.value();
    const double s = p.s();
    const double ta = std::pow(t, al);
    const double z = 2 * al * std::sqrt(x * y) / ta;
    const double e = al * (x + y) / ta;
    // e^{-e} I_nu(z) = e^{z - e} (e^{-z} I_nu(z)), z <= e
    const double damp = std::exp(z - e);
    const double r = y / x;
    const double t1 = std::pow(r, (s - 1) / 2) * bessel_i_scaled(s - 1, z);
    const double t2 = std::pow(r, -(1 + s) / 2) * bessel_i_scaled(s + 1, z);
    return {al / (2 * ta) * damp, t1 + t2, t1 - t2};
}

KernelParts kernel_parts_eq3(double t, double x, double y, const Eq3Params& p, Order alpha)
{
    check_kernel_point(t, x, y);
    const double al = alpha.value();
    const double q = p.q();
    const double c = p.c;
    const double ta = std::pow(t, al);
    const double z = al * x * y / (2 * ta);
    const double e = al * (x * x + y * y) / (4 * ta);
    const double damp = std::exp(z - e);
    const double r = y / x;
    const double t1 = std::pow(r, (c + q) / 2) * bessel_i_scaled((c + q - 1) / 2, z);
    const double t2 = std::pow(r, (c - q) / 2) * bessel_i_scaled((1 + q - c) / 2, z);
    return {al / (4 * ta) * damp * std::sqrt(x * y), t1 + t2, t1 - t2};
}

KernelMatrix kernel_example31(double a, double b, Order alpha)
{
    Example31Params p{a, b};
    validate(p);
    const double ratio = a / p.s();
    KernelMatrix k;
    k.eval = [p, alpha, ratio](double t, double x, double y) {
        return assemble(kernel_parts_example31(t, x, y, p, alpha), ratio);
    };
    k.label = "example31";
    k.params = {{"a", a}, {"b", b}, {"alpha", alpha.value()}};
    return k;
}

KernelMatrix kernel_eq3(double c, double m, double n, Order alpha)
{
    Eq3Params p{c, m, n};
    validate(p);
    const double ratio = m / p.q();
    KernelMatrix k;
    k.eval = [p, alpha, ratio](double t, double x, double y) {
        return assemble(kernel_parts_eq3(t, x, y, p, alpha), ratio);
    };
    k.label = "eq3";
    k.params = {{"c", c}, {"m", m}, {"n", n}, {"alpha", alpha.value()}};
    return k;
}

KernelMatrix pushforward_kernel(const KernelMatrix& kernel, const TransformationData& td)
{
    KernelMatrix out;
    out.eval = [kernel, td](double tt, double xt, double zt) -> Eigen::Matrix2d {
        const double t = td.inverse_t(tt);
        const double x = td.inverse_x(xt, tt);
        const double t0 = td.inverse_t(0);
        const double z = td.inverse_x(zt, 0);
        Eigen::Matrix2d Fz = td.F(z, t0);
        const double det = Fz.determinant();
        if (!std::isfinite(det) || std::abs(det) <= 1e-14 * Fz.cwiseAbs().maxCoeff() * Fz.cwiseAbs().maxCoeff())
            throw SingularityError("pushforward: F is singular at the source point");
        return td.F(x, t) * kernel(t, x, z) * Fz.inverse() * td.inverse_x_derivative(zt, 0);
    };
    out.label = kernel.label + "->" + td.label;
    out.params = kernel.params;
    return out;
}

SolutionPair kernel_column(const KernelMatrix& kernel, int col, double y)
{
    if (col != 0 && col != 1)
        throw ParameterError("kernel column must be 0 or 1");
    return make_pair([kernel, col, y](double x, double t) { return kernel(t, x, y)(0, col); },
                     [kernel, col, y](double x, double t) { return kernel(t, x, y)(1, col); });
}

}  // namespace confract
