#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>

#include <Eigen/Core>

#include "confract/conformable.hpp"

namespace confract {

/// T^alpha u = h u_xx + f1 u_x + g1 v_x,  T^alpha v = h v_xx + f2 v_x + g2 u_x.
struct SystemSpec {
    ScalarField h;
    ScalarField f1;
    ScalarField f2;
    ScalarField g1;
    ScalarField g2;
    Order alpha;
    std::string label;

    /// [[f1, g1], [g2, f2]]
    Eigen::Matrix2d first_order(double x, double t) const;
};

struct Example31Params {
    double a;
    double b;

    double s() const;  // sqrt(ab)
};

struct Eq3Params {
    double c;
    double m;
    double n;

    double q() const;  // sqrt(mn)
};

void validate(const Example31Params& p);
void validate(const Eq3Params& p);

SystemSpec make_example31(double a, double b, Order alpha);
SystemSpec make_eq2(double c, double m, double n, double k, Order alpha);
SystemSpec make_eq3(double c, double m, double n, Order alpha);
/// h = x^q, no first-order diagonal terms, constant cross coupling a', b'.
SystemSpec make_general_power(double q, double a_prime, double b_prime, Order alpha);
/// Image of make_general_power under the power transformation.
SystemSpec make_power_transformed(double q, double a_prime, double b_prime, Order alpha);

/// x~ = X(x,t), t~ = Y(t), (u~, v~) = F(x,t)(u, v) + (r3, s3) with F = [[r1, r2], [s2, s1]].
struct TransformationData {
    std::function<double(double, double)> X;
    std::function<double(double)> Y;
    std::function<double(double, double)> Z;  // inverse of X in x; bisection when empty
    std::function<double(double)> Yinv;       // bisection when empty
    std::function<double(double, double)> Z_x;  // dZ/dx~; finite differences when empty
    ScalarField r1, r2, r3, s1, s2, s3;
    std::string label;

    /// Bracket searched by the bisection inverses.
    double x_lo = 1e-8;
    double x_hi = 1e8;
    double t_lo = 0;
    double t_hi = 1e8;

    Eigen::Matrix2d F(double x, double t) const;
    Eigen::Vector2d shift(double x, double t) const;
    double kappa(double x, double t) const;
    double delta(double x, double t) const;
    double rho(double x, double t) const;

    double inverse_x(double xt, double tt) const;
    double inverse_t(double tt) const;
    double inverse_x_derivative(double xt, double tt) const;
};

TransformationData identity_transformation();

/// Transformation of eq3 that yields the transformed33 system; X = x, Y = t.
TransformationData example33_transformation(double a1, double a2, double b1, double b2, const Eq3Params& p);

struct TransformedSystem {
    SystemSpec spec;
    TransformationData td;
};

TransformedSystem make_transformed_example33(double a1, double a2, double b1, double b2, double c, double m, double n,
                                             Order alpha);

/// x~ = x^{(2-q)/2}, t~ = (1 - q/2)^{2/alpha} t, F = I.
TransformationData power_transformation(double q, Order alpha);

/// Apply `first`, then `second`.
TransformationData compose(const TransformationData& first, const TransformationData& second);

/// Inverse transformation; requires r3 = s3 = 0 in the input.
TransformationData inverse(const TransformationData& td);

struct TransformedCoefficients {
    double h, f1, g1, g2, f2;
};

/// Transformed coefficients at the tilde point (x~, t~).
TransformedCoefficients transformed_coefficients_at(const SystemSpec& spec, const TransformationData& td, double xt,
                                                    double tt);

SystemSpec transform_coefficients(const SystemSpec& spec, const TransformationData& td);

/// The six constraints on r_i, s_i, delta, rho, each zero for an admissible transformation.
std::array<double, 6> constraint_residual(const SystemSpec& spec, const TransformationData& td, const EvalPoint& p);

}  // namespace confract
