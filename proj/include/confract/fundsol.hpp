#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "confract/conformable.hpp"
#include "confract/systems.hpp"

namespace confract {

/// Smallest time at which the closed-form kernels are evaluated.
inline constexpr double kernel_t_min = 1e-3;

/// 2x2 fundamental solution P(t, x, y) = [[A, B], [C, D]].
struct KernelMatrix {
    std::function<Eigen::Matrix2d(double t, double x, double y)> eval;
    std::string label;
    std::vector<std::pair<std::string, double>> params;

    Eigen::Matrix2d operator()(double t, double x, double y) const { return eval(t, x, y); }
};

/// gamma1, gamma2 and the scalar prefactor, so that P = prefactor * [[g1, r g2], [g2 / r, g1]].
struct KernelParts {
    double prefactor;
    double gamma1;
    double gamma2;
};

KernelParts kernel_parts_example31(double t, double x, double y, const Example31Params& p, Order alpha);
KernelParts kernel_parts_eq3(double t, double x, double y, const Eq3Params& p, Order alpha);

KernelMatrix kernel_example31(double a, double b, Order alpha);
KernelMatrix kernel_eq3(double c, double m, double n, Order alpha);

/// Kernel of the transformed system: F(x,t) P(t, x, z) F^{-1}(z, 0) Z_z(z~, 0), x = Z(x~, t~), z = Z(z~, 0).
KernelMatrix pushforward_kernel(const KernelMatrix& kernel, const TransformationData& td);

/// Column `col` of P(., ., y) as a candidate solution in (x, t).
SolutionPair kernel_column(const KernelMatrix& kernel, int col, double y);

}  // namespace confract
