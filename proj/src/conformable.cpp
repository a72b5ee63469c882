#include "confract/conformable.hpp"

#include <cmath>

#include "confract/fd.hpp"
#include "confract/systems.hpp"

namespace confract {

void check_interior(const EvalPoint& p)
{
    if (!(p.x > 0) || !(p.t > 0) || !std::isfinite(p.x) || !std::isfinite(p.t))
        throw DomainError("evaluation point must satisfy x > 0, t > 0");
}

SolutionPair make_pair(ScalarField u, ScalarField v) { return SolutionPair{std::move(u), std::move(v), {}}; }

SolutionPair make_analytic_pair(JetField jet)
{
    SolutionPair s;
    s.u = [jet](double x, double t) { return jet(x, t).u.v; };
    s.v = [jet](double x, double t) { return jet(x, t).v.v; };
    s.jet = std::move(jet);
    return s;
}

SolutionPair combine(double a, const SolutionPair& s1, double b, const SolutionPair& s2)
{
    if (s1.jet && s2.jet) {
        return make_analytic_pair([=](double x, double t) {
            PairJet j1 = s1.jet(x, t);
            PairJet j2 = s2.jet(x, t);
            return PairJet{a * j1.u + b * j2.u, a * j1.v + b * j2.v};
        });
    }
    return make_pair([=](double x, double t) { return a * s1.u(x, t) + b * s2.u(x, t); },
                     [=](double x, double t) { return a * s1.v(x, t) + b * s2.v(x, t); });
}

SolutionDerivatives derivatives(const SolutionPair& sol, const EvalPoint& p, bool with_mixed)
{
    check_interior(p);
    SolutionDerivatives d;
    if (sol.jet) {
        PairJet j = sol.jet(p.x, p.t);
        d.u = j.u.v;
        d.v = j.v.v;
        d.u_x = j.u.x;
        d.v_x = j.v.x;
        d.u_xx = j.u.xx;
        d.v_xx = j.v.xx;
        d.u_t = j.u.t;
        d.v_t = j.v.t;
        d.u_xt = j.u.xt;
        d.v_xt = j.v.xt;
        return d;
    }

    const double x = p.x, t = p.t;
    const double h1x = fd::first_step(x), h1t = fd::first_step(t), h2 = fd::second_step(x);
    if (x - h2 <= 0 || t - h1t <= 0)
        throw DomainError("finite-difference stencil leaves the domain");
    auto fill = [&](const ScalarField& f, double& val, double& fx, double& fxx, double& ft, double& fxt) {
        val = f(x, t);
        fx = (f(x + h1x, t) - f(x - h1x, t)) / (2 * h1x);
        fxx = (f(x + h2, t) - 2 * val + f(x - h2, t)) / (h2 * h2);
        ft = (f(x, t + h1t) - f(x, t - h1t)) / (2 * h1t);
        if (with_mixed)
            fxt = fd::central_mixed(f, x, t, fd::mixed_step(x), fd::mixed_step(t));
    };
    fill(sol.u, d.u, d.u_x, d.u_xx, d.u_t, d.u_xt);
    fill(sol.v, d.v, d.v_x, d.v_xx, d.v_t, d.v_xt);
    return d;
}

double conformable_derivative(const std::function<double(double)>& f, double t, Order alpha)
{
    if (!(t > 0))
        throw DomainError("conformable derivative requires t > 0");
    double df = fd::central_first(f, t);
    if (alpha.value() == 1)
        return df;
    return std::pow(t, 1 - alpha.value()) * df;
}

double conformable_derivative(const std::function<double(double)>&, const std::function<double(double)>& df, double t,
                              Order alpha)
{
    if (!(t > 0))
        throw DomainError("conformable derivative requires t > 0");
    return std::pow(t, 1 - alpha.value()) * df(t);
}

double Residual::scaled() const
{
    double worst = 0;
    for (int i = 0; i < 2; ++i) {
        double r = std::abs(value(i));
        if (r == 0)
            continue;
        worst = std::max(worst, scale(i) > 0 ? r / scale(i) : INFINITY);
    }
    return worst;
}

Residual residual_detail(const SystemSpec& spec, const SolutionPair& sol, const EvalPoint& p, TimeDerivative dt)
{
    SolutionDerivatives d = derivatives(sol, p, false);
    const double x = p.x, t = p.t;
    const double w = dt == TimeDerivative::classical ? 1.0 : std::pow(t, 1 - spec.alpha.value());
    const double h = spec.h(x, t);
    const double f1 = spec.f1(x, t), f2 = spec.f2(x, t), g1 = spec.g1(x, t), g2 = spec.g2(x, t);

    const double tu = w * d.u_t, tv = w * d.v_t;
    const double a1 = h * d.u_xx, b1 = f1 * d.u_x, c1 = g1 * d.v_x;
    const double a2 = h * d.v_xx, b2 = f2 * d.v_x, c2 = g2 * d.u_x;

    Residual r;
    r.value << tu - a1 - b1 - c1, tv - a2 - b2 - c2;
    r.scale << std::max({std::abs(tu), std::abs(a1), std::abs(b1), std::abs(c1)}),
        std::max({std::abs(tv), std::abs(a2), std::abs(b2), std::abs(c2)});
    return r;
}

Eigen::Vector2d residual(const SystemSpec& spec, const SolutionPair& sol, const EvalPoint& p)
{
    return residual_detail(spec, sol, p).value;
}

}  // namespace confract
