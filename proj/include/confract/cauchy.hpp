#pragma once

#include <functional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "confract/fundsol.hpp"

namespace confract {

struct QuadratureConfig {
    double abs_tol = 1e-10;
    double rel_tol = 1e-9;
    double truncation_threshold = 1e-16;
    int max_subdivisions = 2000;

    void validate() const;
};

template <class Value>
struct QuadratureResult {
    Value value;
    double error_estimate = 0;
    double upper_limit = 0;
    int evaluations = 0;
};

/// Adaptive Gauss-Kronrod (7/15) on [a, b].
QuadratureResult<double> integrate_interval(const std::function<double(double)>& f, double a, double b,
                                            const QuadratureConfig& cfg = {});

/// Integral over [0, inf). `min_upper` forces the truncation search past a known support end.
QuadratureResult<double> integrate_semiinfinite(const std::function<double(double)>& f,
                                                const QuadratureConfig& cfg = {}, double min_upper = 0);
QuadratureResult<Eigen::Vector2d> integrate_semiinfinite(const std::function<Eigen::Vector2d(double)>& f,
                                                         const QuadratureConfig& cfg = {}, double min_upper = 0);
QuadratureResult<Eigen::Vector4d> integrate_semiinfinite(const std::function<Eigen::Vector4d(double)>& f,
                                                         const QuadratureConfig& cfg = {}, double min_upper = 0);

/// int_0^inf g(y) e^{-lam y} dy
double laplace_transform(const std::function<double(double)>& g, double lam, const QuadratureConfig& cfg = {});

/// Initial data y -> (u0, v0) for the Cauchy problem.
struct InitialData {
    std::function<Eigen::Vector2d(double)> f;
    double support_end = 0;  // 0 when unbounded or unknown
    std::string name;

    Eigen::Vector2d operator()(double y) const { return f(y); }
};

InitialData zero_data();
InitialData steady_seed_data(const SolutionPair& seed);
/// direction * exp(-(y - center)^2 / (2 width^2))
InitialData gaussian_bump(double center, double width, Eigen::Vector2d direction = {1, 1});
/// direction * exp(1 - 1/(1 - w^2)), w = (2y - lo - hi)/(hi - lo); C-infinity, supported in [lo, hi].
InitialData smooth_bump(double lo, double hi, Eigen::Vector2d direction = {1, 1});
/// Smoothed indicator of [lo, hi] with C-infinity ramps of width `ramp` inside the interval.
InitialData smooth_indicator(double lo, double hi, double ramp, Eigen::Vector2d direction = {1, 1});
/// Monotone cubic (PCHIP) interpolation of samples; zero outside the sampled range.
InitialData tabulated_data(std::vector<double> ys, std::vector<double> us, std::vector<double> vs);

struct CauchyValue {
    Eigen::Vector2d u;
    double error_estimate = 0;
    bool growth_warning = false;  // integrand still above threshold near the truncation point
};

/// U(x, t) = int_0^inf P(t, x, y) f(y) dy
CauchyValue solve_cauchy_detail(const KernelMatrix& kernel, const InitialData& f, double x, double t,
                                const QuadratureConfig& cfg = {});
Eigen::Vector2d solve_cauchy(const KernelMatrix& kernel, const InitialData& f, double x, double t,
                             const QuadratureConfig& cfg = {});

enum class WeightKind { exp, exp_square };

/// Closed-form side of the Laplace identity: U_lambda(x, t).
using FamilyField = std::function<Eigen::Matrix2d(double lam, double x, double t)>;
/// Steady matrix L(y) whose columns are the seeds.
using SteadyField = std::function<Eigen::Matrix2d(double y)>;

/// max over the four entries of |int_0^inf P(t,x,y) L(y) w_lam(y) dy - U_lam(x,t)|
double verify_laplace_identity(const KernelMatrix& kernel, const SteadyField& steady, WeightKind weight,
                               const FamilyField& family, double lam, double x, double t,
                               const QuadratureConfig& cfg = {});

}  // namespace confract
