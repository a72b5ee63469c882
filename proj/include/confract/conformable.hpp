#pragma once

#include <functional>
#include <string>

#include <Eigen/Core>

#include "confract/error.hpp"
#include "confract/jet.hpp"

namespace confract {

/// Fractional order, 0 < alpha <= 1.
class Order {
public:
    explicit Order(double alpha) : alpha_(alpha)
    {
        if (!(alpha > 0 && alpha <= 1))
            throw ParameterError("order alpha must satisfy 0 < alpha <= 1, got " + std::to_string(alpha));
    }
    double value() const { return alpha_; }
    operator double() const { return alpha_; }

private:
    double alpha_;
};

struct EvalPoint {
    double x;
    double t;
};

/// Minimum distance from x = 0 and t = 0 kept by verification grids.
struct DomainMargins {
    double x_min = 0.05;
    double t_min = 0.05;
};

void check_interior(const EvalPoint& p);

using ScalarField = std::function<double(double x, double t)>;

struct PairJet {
    Jet u;
    Jet v;
};

using JetField = std::function<PairJet(double x, double t)>;

enum class PartialSource { analytic, finite_difference };

/// Solution candidate (u, v) on x > 0, t > 0. When `jet` is set the partials are analytic.
struct SolutionPair {
    ScalarField u;
    ScalarField v;
    JetField jet;

    PartialSource source() const { return jet ? PartialSource::analytic : PartialSource::finite_difference; }
};

SolutionPair make_pair(ScalarField u, ScalarField v);
SolutionPair make_analytic_pair(JetField jet);

/// a*s1 + b*s2; analytic when both inputs are.
SolutionPair combine(double a, const SolutionPair& s1, double b, const SolutionPair& s2);

/// Values and partials of (u, v) at a point. u_t is the classical time derivative.
struct SolutionDerivatives {
    double u = 0, v = 0;
    double u_x = 0, v_x = 0;
    double u_xx = 0, v_xx = 0;
    double u_t = 0, v_t = 0;
    double u_xt = 0, v_xt = 0;
};

/// Partials from the analytic jet or, failing that, central finite differences.
SolutionDerivatives derivatives(const SolutionPair& sol, const EvalPoint& p, bool with_mixed = true);

/// t^{1-alpha} f'(t) with f' from a central difference.
double conformable_derivative(const std::function<double(double)>& f, double t, Order alpha);
/// t^{1-alpha} df(t) for a supplied derivative.
double conformable_derivative(const std::function<double(double)>& f, const std::function<double(double)>& df,
                              double t, Order alpha);

struct SystemSpec;

enum class TimeDerivative { conformable, classical };

struct Residual {
    Eigen::Vector2d value;
    Eigen::Vector2d scale;  // largest absolute term per equation

    /// max_i |value_i| / scale_i; zero when every term vanishes.
    double scaled() const;
};

Residual residual_detail(const SystemSpec& spec, const SolutionPair& sol, const EvalPoint& p,
                         TimeDerivative dt = TimeDerivative::conformable);

Eigen::Vector2d residual(const SystemSpec& spec, const SolutionPair& sol, const EvalPoint& p);

}  // namespace confract
