#pragma once

#include <array>
#include <functional>

#include <Eigen/Core>

#include "confract/systems.hpp"

// Independent reference computations used only by the tests.

namespace oracle {

/// I_nu via the standard library, with reflection for negative non-integer orders.
double bessel_i(double nu, double z);

/// Kernels written directly for alpha = 1 with the classical time variable.
Eigen::Matrix2d classical_kernel_example31(double a, double b, double t, double x, double y);
Eigen::Matrix2d classical_kernel_eq3(double c, double m, double n, double t, double x, double y);

using Field = std::function<std::array<double, 2>(double x, double t)>;

/// Flow of the V3 generator applied to a solution, by RK4 along the characteristics (step 1e-3).
std::array<double, 2> v3_flow_example31(const Field& sol, double a, double b, double alpha, double eps, double x,
                                        double t);
std::array<double, 2> v3_flow_eq3(const Field& sol, double c, double m, double n, double alpha, double eps, double x,
                                  double t);

/// Transformed coefficients (h, f1, g1, g2, f2) from the matrix form
/// M' = [(h X_xx - T X) I + X_x F (2 h G_x + M G)] / W with G = F^{-1}.
std::array<double, 5> transformed_matrix_form(const confract::SystemSpec& spec, const confract::TransformationData& td,
                                              double xt, double tt);

}  // namespace oracle
