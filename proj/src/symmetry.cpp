#include "confract/symmetry.hpp"

#include <cmath>

namespace confract {

namespace {

PointField zero_point() { return [](double, double, double, double) { return 0.0; }; }

template <class S>
struct Pair {
    S u, v;
};

Pair<double> eval_inner(const SolutionPair& s, double X, double T) { return {s.u(X, T), s.v(X, T)}; }

Pair<Jet> eval_inner(const SolutionPair& s, const Jet& X, const Jet& T)
{
    PairJet j = s.jet(X.v, T.v);
    return {compose(j.u, X, T), compose(j.v, X, T)};
}

template <class S>
S chart_factor(const S& t, double eps, double alpha)
{
    using std::pow;
    S R = 1 + alpha * eps * pow(t, alpha);
    if (!(value_of(R) > 0))
        throw ChartExitError("flow leaves the chart: 1 + alpha*eps*t^alpha <= 0");
    return R;
}

template <class S>
Pair<S> v3_example31(const SolutionPair& sol, const S& x, const S& t, double eps, double a, double b, double alpha)
{
    using std::exp;
    using std::pow;
    const double s = std::sqrt(a * b);
    S R = chart_factor(t, eps, alpha);
    Pair<S> in = eval_inner(sol, x / (R * R), t / pow(R, 1 / alpha));
    S G = exp(-(alpha * alpha * eps) * x / R);
    S Rm = pow(R, -s);
    S Rp = pow(R, s);
    S u = G / (2 * s) * ((s * Rm + s * Rp) * in.u + (a * Rm - a * Rp) * in.v);
    S v = G / (2 * a) * ((s * Rm - s * Rp) * in.u + (a * Rm + a * Rp) * in.v);
    return {u, v};
}

template <class S>
Pair<S> v3_eq3(const SolutionPair& sol, const S& x, const S& t, double eps, double c, double m, double n, double alpha)
{
    using std::exp;
    using std::pow;
    const double q = std::sqrt(m * n);
    S R = chart_factor(t, eps, alpha);
    Pair<S> in = eval_inner(sol, x / R, t / pow(R, 1 / alpha));
    S G = exp(-(alpha * alpha * eps) * (x * x) / (4 * R));
    S Rp = pow(R, -(c + 1 + q) / 2);
    S Rm = pow(R, -(c + 1 - q) / 2);
    S u = G / (2 * q) * ((q * Rp + q * Rm) * in.u + (m * Rp - m * Rm) * in.v);
    S v = G / (2 * m) * ((q * Rp - q * Rm) * in.u + (m * Rp + m * Rm) * in.v);
    return {u, v};
}

// Wraps a templated point map (x, t) -> Pair<S> into a solution pair; analytic when the input is.
template <class Map>
SolutionPair lift(const SolutionPair& sol, Map map)
{
    SolutionPair out;
    out.u = [map](double x, double t) { return map(x, t).u; };
    out.v = [map](double x, double t) { return map(x, t).v; };
    if (sol.jet) {
        out.jet = [map](double x, double t) {
            Pair<Jet> p = map(Jet::var_x(x), Jet::var_t(t));
            return PairJet{p.u, p.v};
        };
    }
    return out;
}

// Coordinate-only flows: (u~, v~)(x, t) = (u, v)(X(x, t), T(x, t)).
template <class Coords>
SolutionPair pull_back(const SolutionPair& sol, Coords coords)
{
    return lift(sol, [sol, coords](auto x, auto t) {
        auto [X, T] = coords(x, t);
        return eval_inner(sol, X, T);
    });
}

SolutionPair linear_mix(const SolutionPair& sol, Eigen::Matrix2d M)
{
    return lift(sol, [sol, M](auto x, auto t) {
        auto in = eval_inner(sol, x, t);
        using S = decltype(in.u);
        return Pair<S>{M(0, 0) * in.u + M(0, 1) * in.v, M(1, 0) * in.u + M(1, 1) * in.v};
    });
}

Eigen::Matrix2d exp_coupling(double a, double b, double eps)
{
    // exp(eps [[0, a], [b, 0]]) with a*b > 0
    const double s = std::sqrt(a * b);
    Eigen::Matrix2d M;
    M << std::cosh(eps * s), a / s * std::sinh(eps * s), b / s * std::sinh(eps * s), std::cosh(eps * s);
    return M;
}

template <class S>
S v2_time(const S& t, double eps, double alpha)
{
    using std::pow;
    S base = pow(t, alpha) - alpha * eps;
    if (!(value_of(base) > 0))
        throw ChartExitError("V2 flow leaves the chart: t^alpha - alpha*eps <= 0");
    return pow(base, 1 / alpha);
}

}  // namespace

std::vector<VectorField> lie_basis_example31(double a, double b, Order alpha, ScalarField eta3, ScalarField phi3)
{
    validate(Example31Params{a, b});
    const double al = alpha.value();
    auto z = zero_point();
    std::vector<VectorField> basis;
    basis.push_back({[al](double x, double, double, double) { return al * x; },
                     [](double, double t, double, double) { return t; }, z, z, "V1"});
    basis.push_back({z, [al](double, double t, double, double) { return std::pow(t, 1 - al); }, z, z, "V2"});
    basis.push_back({[al](double x, double t, double, double) { return 2 * al * x * std::pow(t, al); },
                     [al](double, double t, double, double) { return std::pow(t, 1 + al); },
                     [al, a](double x, double t, double u, double v) {
                         return -(al * al * x * u + a * al * std::pow(t, al) * v);
                     },
                     [al, b](double x, double t, double u, double v) {
                         return -(al * al * x * v + b * al * std::pow(t, al) * u);
                     },
                     "V3"});
    basis.push_back({z, z, [](double, double, double u, double) { return u; },
                     [](double, double, double, double v) { return v; }, "V4"});
    basis.push_back({z, z, [a](double, double, double, double v) { return a * v; },
                     [b](double, double, double u, double) { return b * u; }, "V5"});
    basis.push_back({z, z,
                     [eta3](double x, double t, double, double) { return eta3 ? eta3(x, t) : 0.0; }, z, "V_eta3"});
    basis.push_back({z, z, z,
                     [phi3](double x, double t, double, double) { return phi3 ? phi3(x, t) : 0.0; }, "V_phi3"});
    return basis;
}

std::vector<VectorField> lie_basis_eq3(double c, double m, double n, Order alpha, ScalarField eta3, ScalarField phi3)
{
    validate(Eq3Params{c, m, n});
    const double al = alpha.value();
    auto z = zero_point();
    auto diag = [al, c](double x, double t) { return al * (c + 1) * std::pow(t, al) / 2 + al * al * x * x / 4; };
    std::vector<VectorField> basis;
    basis.push_back({[al](double x, double, double, double) { return al * x / 2; },
                     [](double, double t, double, double) { return t; }, z, z, "V1"});
    basis.push_back({z, [al](double, double t, double, double) { return std::pow(t, 1 - al); }, z, z, "V2"});
    basis.push_back({[al](double x, double t, double, double) { return al * x * std::pow(t, al); },
                     [al](double, double t, double, double) { return std::pow(t, 1 + al); },
                     [=](double x, double t, double u, double v) {
                         return -(diag(x, t) * u + m * al * std::pow(t, al) / 2 * v);
                     },
                     [=](double x, double t, double u, double v) {
                         return -(diag(x, t) * v + n * al * std::pow(t, al) / 2 * u);
                     },
                     "V3"});
    basis.push_back({z, z, [](double, double, double u, double) { return u; },
                     [](double, double, double, double v) { return v; }, "V4"});
    basis.push_back({z, z, [m](double, double, double, double v) { return m * v; },
                     [n](double, double, double u, double) { return n * u; }, "V5"});
    basis.push_back({z, z,
                     [eta3](double x, double t, double, double) { return eta3 ? eta3(x, t) : 0.0; }, z, "V_eta3"});
    basis.push_back({z, z, z,
                     [phi3](double x, double t, double, double) { return phi3 ? phi3(x, t) : 0.0; }, "V_phi3"});
    return basis;
}

double lambda_from_epsilon_example31(double eps, Order alpha) { return alpha.value() * alpha.value() * eps; }

double lambda_from_epsilon_eq3(double eps, Order alpha) { return alpha.value() * alpha.value() * eps / 4; }

SolutionPair flow_v3_example31(const SolutionPair& sol, double eps, const Example31Params& p, Order alpha)
{
    validate(p);
    if (eps == 0)
        return sol;
    const double a = p.a, b = p.b, al = alpha.value();
    return lift(sol, [=](auto x, auto t) { return v3_example31(sol, x, t, eps, a, b, al); });
}

SolutionPair flow_v3_eq3(const SolutionPair& sol, double eps, const Eq3Params& p, Order alpha)
{
    validate(p);
    if (eps == 0)
        return sol;
    const double c = p.c, m = p.m, n = p.n, al = alpha.value();
    return lift(sol, [=](auto x, auto t) { return v3_eq3(sol, x, t, eps, c, m, n, al); });
}

SolutionPair flow_example31(Generator g, const SolutionPair& sol, double eps, const Example31Params& p, Order alpha)
{
    validate(p);
    if (eps == 0)
        return sol;
    const double al = alpha.value();
    switch (g) {
    case Generator::v1:
        return pull_back(sol, [=](auto x, auto t) {
            return std::pair{std::exp(-al * eps) * x, std::exp(-eps) * t};
        });
    case Generator::v2:
        return pull_back(sol, [=](auto x, auto t) { return std::pair{x, v2_time(t, eps, al)}; });
    case Generator::v3:
        return flow_v3_example31(sol, eps, p, alpha);
    case Generator::v4:
        return linear_mix(sol, std::exp(eps) * Eigen::Matrix2d::Identity());
    case Generator::v5:
        return linear_mix(sol, exp_coupling(p.a, p.b, eps));
    }
    throw ParameterError("unknown generator");
}

SolutionPair flow_eq3(Generator g, const SolutionPair& sol, double eps, const Eq3Params& p, Order alpha)
{
    validate(p);
    if (eps == 0)
        return sol;
    const double al = alpha.value();
    switch (g) {
    case Generator::v1:
        return pull_back(sol, [=](auto x, auto t) {
            return std::pair{std::exp(-al * eps / 2) * x, std::exp(-eps) * t};
        });
    case Generator::v2:
        return pull_back(sol, [=](auto x, auto t) { return std::pair{x, v2_time(t, eps, al)}; });
    case Generator::v3:
        return flow_v3_eq3(sol, eps, p, alpha);
    case Generator::v4:
        return linear_mix(sol, std::exp(eps) * Eigen::Matrix2d::Identity());
    case Generator::v5:
        return linear_mix(sol, exp_coupling(p.m, p.n, eps));
    }
    throw ParameterError("unknown generator");
}

SolutionPair superpose(const SolutionPair& sol, double eps, const SolutionPair& null_pair)
{
    return combine(1, sol, eps, null_pair);
}

namespace {

template <class S>
Pair<S> seed_example31(int which, const S& x, double a, double b)
{
    using std::pow;
    const double s = std::sqrt(a * b);
    if (which == 1)
        return {S(x * 0.0 + 1.0), S(x * 0.0 + s / a)};
    S w = pow(x, 1 + s);
    return {w, (-s / a) * w};
}

template <class S>
Pair<S> seed_eq3(int which, const S& x, double c, double m, double n)
{
    using std::pow;
    const double q = std::sqrt(m * n);
    if (which == 1)
        return {S(x * 0.0 + 1.0), S(x * 0.0 + q / m)};
    S w = pow(x, 1 + q - c);
    return {(-q / n) * w, w};
}

template <class S>
Pair<S> family_example31(int col, double lambda, const S& x, const S& t, double a, double b, double alpha)
{
    using std::exp;
    using std::pow;
    const double s = std::sqrt(a * b);
    S R = 1 + lambda * pow(t, alpha) / alpha;
    S G = exp(-lambda * x / R);
    if (col == 0) {
        S w = G * pow(R, -s);
        return {w, (s / a) * w};
    }
    S w = G * pow(x, 1 + s) * pow(R, -(s + 2));
    return {w, (-s / a) * w};
}

template <class S>
Pair<S> family_eq3(int col, double lambda, const S& x, const S& t, double c, double m, double n, double alpha)
{
    using std::exp;
    using std::pow;
    const double q = std::sqrt(m * n);
    S R = 1 + 4 * lambda * pow(t, alpha) / alpha;
    S G = exp(-lambda * (x * x) / R);
    if (col == 0) {
        S w = G * pow(R, -(c + 1 + q) / 2);
        return {w, (q / m) * w};
    }
    S w = pow(x, 1 + q - c) * G * pow(R, -(3 + q - c) / 2);
    return {(-m / q) * w, w};
}

void check_seed(int which)
{
    if (which != 1 && which != 2)
        throw ParameterError("steady seed index must be 1 or 2");
}

void check_column(int col)
{
    if (col != 0 && col != 1)
        throw ParameterError("family column must be 0 or 1");
}

}  // namespace

SolutionPair steady_seed_example31(int which, const Example31Params& p)
{
    validate(p);
    check_seed(which);
    SolutionPair base = make_analytic_pair([](double, double) { return PairJet{}; });
    return lift(base, [=](auto x, auto) { return seed_example31(which, x, p.a, p.b); });
}

SolutionPair steady_seed_eq3(int which, const Eq3Params& p)
{
    validate(p);
    check_seed(which);
    SolutionPair base = make_analytic_pair([](double, double) { return PairJet{}; });
    return lift(base, [=](auto x, auto) { return seed_eq3(which, x, p.c, p.m, p.n); });
}

Eigen::Matrix2d steady_matrix_example31(double y, const Example31Params& p)
{
    Pair<double> s1 = seed_example31(1, y, p.a, p.b);
    Pair<double> s2 = seed_example31(2, y, p.a, p.b);
    Eigen::Matrix2d L;
    L << s1.u, s2.u, s1.v, s2.v;
    return L;
}

Eigen::Matrix2d steady_matrix_eq3(double y, const Eq3Params& p)
{
    Pair<double> s1 = seed_eq3(1, y, p.c, p.m, p.n);
    Pair<double> s2 = seed_eq3(2, y, p.c, p.m, p.n);
    Eigen::Matrix2d L;
    L << s1.u, s2.u, s1.v, s2.v;
    return L;
}

Eigen::Matrix2d invariant_family_example31(double lambda, double x, double t, const Example31Params& p, Order alpha)
{
    validate(p);
    if (lambda < 0)
        throw ParameterError("invariant family requires lambda >= 0");
    Pair<double> c0 = family_example31(0, lambda, x, t, p.a, p.b, alpha.value());
    Pair<double> c1 = family_example31(1, lambda, x, t, p.a, p.b, alpha.value());
    Eigen::Matrix2d U;
    U << c0.u, c1.u, c0.v, c1.v;
    return U;
}

Eigen::Matrix2d invariant_family_eq3(double lambda, double x, double t, const Eq3Params& p, Order alpha)
{
    validate(p);
    if (lambda < 0)
        throw ParameterError("invariant family requires lambda >= 0");
    Pair<double> c0 = family_eq3(0, lambda, x, t, p.c, p.m, p.n, alpha.value());
    Pair<double> c1 = family_eq3(1, lambda, x, t, p.c, p.m, p.n, alpha.value());
    Eigen::Matrix2d U;
    U << c0.u, c1.u, c0.v, c1.v;
    return U;
}

SolutionPair family_column_example31(int col, double lambda, const Example31Params& p, Order alpha)
{
    validate(p);
    check_column(col);
    const double al = alpha.value();
    SolutionPair base = make_analytic_pair([](double, double) { return PairJet{}; });
    return lift(base, [=](auto x, auto t) { return family_example31(col, lambda, x, t, p.a, p.b, al); });
}

SolutionPair family_column_eq3(int col, double lambda, const Eq3Params& p, Order alpha)
{
    validate(p);
    check_column(col);
    const double al = alpha.value();
    SolutionPair base = make_analytic_pair([](double, double) { return PairJet{}; });
    return lift(base, [=](auto x, auto t) { return family_eq3(col, lambda, x, t, p.c, p.m, p.n, al); });
}

}  // namespace confract
