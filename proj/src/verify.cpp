#include "confract/verify.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <iostream>

#include "confract/parallel.hpp"

namespace confract {

void Report::add(std::string name, double max_deviation, double tolerance)
{
    checks.push_back({std::move(name), max_deviation, tolerance, max_deviation <= tolerance});
}

bool Report::overall() const
{
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

nlohmann::ordered_json to_json(const Report& report)
{
    nlohmann::ordered_json j;
    j["suite"] = report.suite;
    j["checks"] = nlohmann::ordered_json::array();
    for (const Check& c : report.checks) {
        nlohmann::ordered_json e;
        e["name"] = c.name;
        // JSON has no inf or nan
        if (std::isfinite(c.max_deviation))
            e["max_deviation"] = c.max_deviation;
        else
            e["max_deviation"] = format_double(c.max_deviation);
        e["tolerance"] = c.tolerance;
        e["pass"] = c.pass;
        j["checks"].push_back(std::move(e));
    }
    j["overall"] = report.overall();
    return j;
}

namespace {

bool is_example31(const RunConfig& c) { return c.system == "example31"; }

bool is_eq3_like(const RunConfig& c)
{
    return c.system == "eq3" || (c.system == "eq2" && c.params.count("k") && c.param("k") == -1);
}

void require_kernel_system(const RunConfig& c)
{
    if (c.system == "eq2" && !is_eq3_like(c))
        throw ConfigError("system: eq2 has closed-form results only for k = -1");
}

Example31Params ex31(const RunConfig& c) { return {c.param("a"), c.param("b")}; }
Eq3Params eq3(const RunConfig& c) { return {c.param("c"), c.param("m"), c.param("n")}; }

bool has_example33(const RunConfig& c)
{
    return c.params.count("a1") && c.params.count("a2") && c.params.count("b1") && c.params.count("b2");
}

TransformedSystem transformed33(const RunConfig& c)
{
    return make_transformed_example33(c.param("a1"), c.param("a2"), c.param("b1"), c.param("b2"), c.param("c"),
                                      c.param("m"), c.param("n"), Order(c.alpha));
}

SystemSpec source_system(const RunConfig& c)
{
    const Order al(c.alpha);
    if (c.system == "example31")
        return make_example31(c.param("a"), c.param("b"), al);
    if (c.system == "eq2")
        return make_eq2(c.param("c"), c.param("m"), c.param("n"), c.param("k"), al);
    if (c.system == "eq3" || c.system == "transformed33")
        return make_eq3(c.param("c"), c.param("m"), c.param("n"), al);
    return make_general_power(c.param("q"), c.param("a_prime"), c.param("b_prime"), al);
}

KernelMatrix source_kernel(const RunConfig& c)
{
    require_kernel_system(c);
    const Order al(c.alpha);
    if (is_example31(c))
        return kernel_example31(c.param("a"), c.param("b"), al);
    if (is_eq3_like(c) || c.system == "transformed33")
        return kernel_eq3(c.param("c"), c.param("m"), c.param("n"), al);
    throw ConfigError("system: " + c.system + " has no closed-form kernel");
}

/// Runs `body`; an exception becomes an infinite deviation so the check fails instead of aborting the suite.
template <class F>
void guarded(Report& r, const std::string& name, double tol, F&& body)
{
    try {
        r.add(name, body(), tol);
    } catch (const Error& e) {
        std::cerr << "confract: check '" << name << "' raised: " << e.what() << '\n';
        r.add(name, INFINITY, tol);
    }
}

double max_over_grid(const std::vector<double>& xs, const std::vector<double>& ts,
                     const std::function<double(double, double)>& f)
{
    std::vector<double> vals(xs.size() * ts.size());
    parallel_for(vals.size(), [&](std::size_t i) { vals[i] = f(xs[i % xs.size()], ts[i / xs.size()]); });
    double m = 0;
    for (double v : vals) {
        if (std::isnan(v))
            return NAN;
        m = std::max(m, v);
    }
    return m;
}

// Shortest round-trip form, for check names.
std::string num(double v)
{
    char buf[32];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, end);
}

std::array<SolutionPair, 2> seeds(const RunConfig& c)
{
    if (is_example31(c))
        return {steady_seed_example31(1, ex31(c)), steady_seed_example31(2, ex31(c))};
    return {steady_seed_eq3(1, eq3(c)), steady_seed_eq3(2, eq3(c))};
}

SolutionPair flow_v3(const RunConfig& c, const SolutionPair& s, double eps)
{
    if (is_example31(c))
        return flow_v3_example31(s, eps, ex31(c), Order(c.alpha));
    return flow_v3_eq3(s, eps, eq3(c), Order(c.alpha));
}

}  // namespace

SystemSpec build_system(const RunConfig& cfg)
{
    validate(cfg);
    if (cfg.system == "transformed33")
        return transformed33(cfg).spec;
    return source_system(cfg);
}

KernelMatrix build_kernel(const RunConfig& cfg)
{
    validate(cfg);
    if (cfg.system == "transformed33")
        return pushforward_kernel(source_kernel(cfg), transformed33(cfg).td);
    return source_kernel(cfg);
}

TransformationData build_transformation(const RunConfig& cfg)
{
    validate(cfg);
    if (cfg.transform == "identity")
        return identity_transformation();
    if (cfg.transform == "example33") {
        if (!is_eq3_like(cfg) && cfg.system != "transformed33")
            throw ConfigError("transform: example33 applies to eq3 only");
        return example33_transformation(cfg.param("a1"), cfg.param("a2"), cfg.param("b1"), cfg.param("b2"), eq3(cfg));
    }
    if (cfg.system != "power-transform")
        throw ConfigError("transform: power applies to the power-transform system only");
    return power_transformation(cfg.param("q"), Order(cfg.alpha));
}

InitialData build_initial_data(const RunConfig& cfg)
{
    const InitialDataSpec& d = cfg.initial;
    if (d.kind == "zero")
        return zero_data();
    if (d.kind == "seed") {
        require_kernel_system(cfg);
        if (!is_example31(cfg) && !is_eq3_like(cfg))
            throw ConfigError("initial_data.kind: seed data needs example31 or eq3");
        return steady_seed_data(seeds(cfg)[d.seed - 1]);
    }
    if (d.kind == "gaussian")
        return gaussian_bump(d.center, d.width, d.direction);
    if (d.kind == "bump")
        return smooth_bump(d.lo, d.hi, d.direction);
    if (d.kind == "indicator")
        return smooth_indicator(d.lo, d.hi, d.ramp, d.direction);
    try {
        return tabulated_data(d.ys, d.us, d.vs);
    } catch (const ParameterError& e) {
        throw ConfigError(std::string("initial_data: ") + e.what());
    }
}

double uniform_pm1(std::uint64_t& state)
{
    // splitmix64
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    z ^= z >> 31;
    return 2 * (static_cast<double>(z >> 11) * 0x1.0p-53) - 1;
}

SolutionPair perturb_by_x(const SolutionPair& sol)
{
    SolutionPair bump =
        make_analytic_pair([](double x, double) { return PairJet{Jet::var_x(x), Jet::constant(0)}; });
    return combine(1, sol, 1e-2, bump);
}

double max_residual(const SystemSpec& spec, const SolutionPair& sol, const std::vector<double>& xs,
                    const std::vector<double>& ts, TimeDerivative dt)
{
    return max_over_grid(xs, ts, [&](double x, double t) { return residual_detail(spec, sol, {x, t}, dt).scaled(); });
}

double max_divergence(const ConservedVector& cv, const SolutionPair& sol, const std::vector<double>& xs,
                      const std::vector<double>& ts)
{
    return max_over_grid(xs, ts, [&](double x, double t) { return divergence_detail(cv, sol, {x, t}).scaled(); });
}

Report verify_residual(const RunConfig& cfg)
{
    validate(cfg);
    Report r{"residual", {}};
    const auto xs = cfg.grid.x.points(), ts = cfg.grid.t.points(), ys = cfg.grid.y.points();
    const double tol = cfg.tolerances.residual;

    if (cfg.system == "power-transform")
        return r;
    if (cfg.system == "transformed33") {
        const SystemSpec spec = build_system(cfg);
        const KernelMatrix k = build_kernel(cfg);
        for (double y : ys)
            for (int col = 0; col < 2; ++col)
                guarded(r, "pushforward kernel column " + std::to_string(col + 1) + " y=" + num(y),
                        cfg.tolerances.pushforward,
                        [&] { return max_residual(spec, kernel_column(k, col, y), xs, ts); });
        return r;
    }

    require_kernel_system(cfg);
    const SystemSpec spec = build_system(cfg);
    const KernelMatrix k = source_kernel(cfg);
    for (double y : ys)
        for (int col = 0; col < 2; ++col)
            guarded(r, "kernel column " + std::to_string(col + 1) + " y=" + num(y), tol,
                    [&] { return max_residual(spec, kernel_column(k, col, y), xs, ts); });
    const auto s = seeds(cfg);
    for (int i = 0; i < 2; ++i)
        guarded(r, "steady seed " + std::to_string(i + 1), tol, [&] { return max_residual(spec, s[i], xs, ts); });
    const Order al(cfg.alpha);
    for (double lam : {0.5, 2.0})
        for (int col = 0; col < 2; ++col)
            guarded(r, "family column " + std::to_string(col + 1) + " lambda=" + num(lam), tol, [&] {
                SolutionPair f = is_example31(cfg) ? family_column_example31(col, lam, ex31(cfg), al)
                                                   : family_column_eq3(col, lam, eq3(cfg), al);
                return max_residual(spec, f, xs, ts);
            });
    return r;
}

Report verify_laplace(const RunConfig& cfg)
{
    validate(cfg);
    Report r{"laplace", {}};
    if (!is_example31(cfg) && !is_eq3_like(cfg))
        return r;
    const KernelMatrix k = source_kernel(cfg);
    const Order al(cfg.alpha);
    SteadyField steady;
    FamilyField family;
    WeightKind weight;
    if (is_example31(cfg)) {
        const auto p = ex31(cfg);
        steady = [p](double y) { return steady_matrix_example31(y, p); };
        family = [p, al](double lam, double x, double t) { return invariant_family_example31(lam, x, t, p, al); };
        weight = WeightKind::exp;
    } else {
        const auto p = eq3(cfg);
        steady = [p](double y) { return steady_matrix_eq3(y, p); };
        family = [p, al](double lam, double x, double t) { return invariant_family_eq3(lam, x, t, p, al); };
        weight = WeightKind::exp_square;
    }
    const std::array<double, 3> lams{0.25, 0.7, 1.5};
    const std::array<std::array<double, 2>, 4> pts{{{0.6, 0.5}, {1.2, 0.8}, {1.8, 1.5}, {1.0, 2.0}}};
    for (double lam : lams)
        for (const auto& xt : pts)
            guarded(r, "lambda=" + num(lam) + " x=" + num(xt[0]) + " t=" + num(xt[1]), cfg.tolerances.laplace,
                    [&] { return verify_laplace_identity(k, steady, weight, family, lam, xt[0], xt[1], cfg.quadrature); });
    return r;
}

Report verify_conservation(const RunConfig& cfg)
{
    validate(cfg);
    Report r{"conservation", {}};
    if (!is_example31(cfg) && !is_eq3_like(cfg))
        return r;
    const auto xs = cfg.grid.x.points(), ts = cfg.grid.t.points();
    const Order al(cfg.alpha);
    const auto s = seeds(cfg);
    std::array<SolutionPair, 3> sols{s[0], s[1], flow_v3(cfg, combine(1, s[0], 1, s[1]), 0.3)};
    const std::array<const char*, 3> names{"steady seed 1", "steady seed 2", "V3 orbit"};
    if (cfg.perturb)
        for (auto& p : sols)
            p = perturb_by_x(p);
    std::uint64_t state = cfg.seed;
    for (int id = 1; id <= 5; ++id) {
        std::array<double, 4> k;
        for (double& ki : k)
            ki = uniform_pm1(state);
        const ConservedVector cv = is_example31(cfg) ? conserved_vector(id, k, ex31(cfg), al)
                                                     : conserved_vector(id, k, eq3(cfg), al);
        for (int j = 0; j < 3; ++j)
            guarded(r, std::string("case ") + std::to_string(id) + " on " + names[j] + (cfg.perturb ? " (perturbed)" : ""),
                    cfg.tolerances.conservation, [&] { return max_divergence(cv, sols[j], xs, ts); });
    }
    return r;
}

Report verify_group_orbit(const RunConfig& cfg)
{
    validate(cfg);
    Report r{"group-orbit", {}};
    if (!is_example31(cfg) && !is_eq3_like(cfg))
        return r;
    const auto xs = cfg.grid.x.points(), ts = cfg.grid.t.points();
    const SystemSpec spec = build_system(cfg);
    const auto s = seeds(cfg);
    for (int i = 0; i < 2; ++i) {
        const std::string seed = "seed " + std::to_string(i + 1);
        for (double eps : {0.1, 0.3})
            guarded(r, "V3 " + seed + " eps=" + num(eps), cfg.tolerances.group_orbit,
                    [&] { return max_residual(spec, flow_v3(cfg, s[i], eps), xs, ts); });
        guarded(r, "V3 " + seed + " eps=0 identity", cfg.tolerances.identity, [&] {
            SolutionPair f = flow_v3(cfg, s[i], 0);
            return max_over_grid(xs, ts, [&](double x, double t) {
                // bit-exact: any difference at all counts as a full unit
                return (f.u(x, t) == s[i].u(x, t) && f.v(x, t) == s[i].v(x, t)) ? 0.0 : 1.0;
            });
        });
        guarded(r, "V3 " + seed + " composition 0.1+0.2", cfg.tolerances.composition, [&] {
            SolutionPair two = flow_v3(cfg, flow_v3(cfg, s[i], 0.1), 0.2);
            SolutionPair one = flow_v3(cfg, s[i], compose_epsilon(0.1, 0.2));
            return max_over_grid(xs, ts, [&](double x, double t) {
                const double du = std::abs(two.u(x, t) - one.u(x, t)) / std::max(1.0, std::abs(one.u(x, t)));
                const double dv = std::abs(two.v(x, t) - one.v(x, t)) / std::max(1.0, std::abs(one.v(x, t)));
                return std::max(du, dv);
            });
        });
    }
    // the remaining generators act on a time-dependent solution
    const SolutionPair base = flow_v3(cfg, combine(1, s[0], 1, s[1]), 0.2);
    const Order al(cfg.alpha);
    const std::array<Generator, 4> gens{Generator::v1, Generator::v2, Generator::v4, Generator::v5};
    const std::array<const char*, 4> gnames{"V1", "V2", "V4", "V5"};
    for (int g = 0; g < 4; ++g)
        guarded(r, std::string(gnames[g]) + " on V3 orbit eps=-0.05", cfg.tolerances.group_orbit, [&] {
            SolutionPair f = is_example31(cfg) ? flow_example31(gens[g], base, -0.05, ex31(cfg), al)
                                               : flow_eq3(gens[g], base, -0.05, eq3(cfg), al);
            return max_residual(spec, f, xs, ts);
        });
    return r;
}

Report verify_pushforward(const RunConfig& cfg)
{
    validate(cfg);
    Report r{"pushforward", {}};
    const auto xs = cfg.grid.x.points(), ts = cfg.grid.t.points(), ys = cfg.grid.y.points();
    const Tolerances& tol = cfg.tolerances;

    auto coefficient_check = [&](const SystemSpec& src, const TransformationData& td, const SystemSpec& expected,
                                 const std::string& name) {
        guarded(r, name + " coefficients", tol.coefficients, [&] {
            return max_over_grid(xs, ts, [&](double x, double t) {
                TransformedCoefficients c = transformed_coefficients_at(src, td, x, t);
                const std::array<double, 5> got{c.h, c.f1, c.g1, c.g2, c.f2};
                const std::array<double, 5> want{expected.h(x, t), expected.f1(x, t), expected.g1(x, t),
                                                 expected.g2(x, t), expected.f2(x, t)};
                double m = 0;
                for (int i = 0; i < 5; ++i)
                    m = std::max(m, std::abs(got[i] - want[i]) / std::max(1.0, std::abs(want[i])));
                return m;
            });
        });
        guarded(r, name + " constraints", tol.constraint, [&] {
            return max_over_grid(xs, ts, [&](double x, double t) {
                auto c = constraint_residual(src, td, {x, t});
                double m = 0;
                for (double v : c)
                    m = std::max(m, std::abs(v));
                return m;
            });
        });
    };

    if (cfg.system == "power-transform") {
        const Order al(cfg.alpha);
        coefficient_check(source_system(cfg), build_transformation(cfg),
                          make_power_transformed(cfg.param("q"), cfg.param("a_prime"), cfg.param("b_prime"), al),
                          "power");
        return r;
    }
    if (cfg.system == "eq2" && !is_eq3_like(cfg))
        return r;

    const KernelMatrix k = source_kernel(cfg);
    guarded(r, "identity pushforward", tol.identity, [&] {
        const KernelMatrix pk = pushforward_kernel(k, identity_transformation());
        double m = 0;
        for (double y : ys)
            m = std::max(m, max_over_grid(xs, ts, [&](double x, double t) {
                            Eigen::Matrix2d a = pk(t, x, y), b = k(t, x, y);
                            return (a - b).cwiseAbs().maxCoeff() / std::max(1e-300, b.cwiseAbs().maxCoeff());
                        }));
        return m;
    });

    if ((is_eq3_like(cfg) || cfg.system == "transformed33") && has_example33(cfg)) {
        const TransformedSystem ts33 = transformed33(cfg);
        coefficient_check(source_system(cfg), ts33.td, ts33.spec, "example33");
        const KernelMatrix pk = pushforward_kernel(k, ts33.td);
        for (double y : ys)
            for (int col = 0; col < 2; ++col)
                guarded(r, "example33 kernel column " + std::to_string(col + 1) + " y=" + num(y), tol.pushforward,
                        [&] { return max_residual(ts33.spec, kernel_column(pk, col, y), xs, ts); });
    }
    return r;
}

Report run_verify(const RunConfig& cfg)
{
    validate(cfg);
    const std::string& s = cfg.suite;
    if (s == "residual")
        return verify_residual(cfg);
    if (s == "laplace")
        return verify_laplace(cfg);
    if (s == "conservation")
        return verify_conservation(cfg);
    if (s == "group-orbit")
        return verify_group_orbit(cfg);
    if (s == "pushforward")
        return verify_pushforward(cfg);
    Report all{"all", {}};
    for (Report part : {verify_residual(cfg), verify_laplace(cfg), verify_conservation(cfg), verify_group_orbit(cfg),
                        verify_pushforward(cfg)})
        for (Check& c : part.checks) {
            c.name = part.suite + ": " + c.name;
            all.checks.push_back(std::move(c));
        }
    return all;
}

}  // namespace confract
