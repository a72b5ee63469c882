#include "confract/commands.hpp"

#include "confract/parallel.hpp"
#include "confract/verify.hpp"

namespace confract {

namespace {

Table kernel_rows(const KernelMatrix& k, const RunConfig& cfg)
{
    const auto ts = cfg.grid.t.points(), xs = cfg.grid.x.points(), ys = cfg.grid.y.points();
    Table tab{{"t", "x", "y", "A", "B", "C", "D"}, {}};
    tab.rows.resize(ts.size() * xs.size() * ys.size());
    parallel_for(tab.rows.size(), [&](std::size_t i) {
        const double y = ys[i % ys.size()];
        const double x = xs[(i / ys.size()) % xs.size()];
        const double t = ts[i / (ys.size() * xs.size())];
        const Eigen::Matrix2d P = k(t, x, y);
        tab.rows[i] = {t, x, y, P(0, 0), P(0, 1), P(1, 0), P(1, 1)};
    });
    return tab;
}

}  // namespace

CommandOutput eval_kernel_table(const RunConfig& cfg)
{
    return {kernel_rows(build_kernel(cfg), cfg), {}};
}

CommandOutput solve_table(const RunConfig& cfg)
{
    const KernelMatrix k = build_kernel(cfg);
    const InitialData f = build_initial_data(cfg);
    const auto ts = cfg.grid.t.points(), xs = cfg.grid.x.points();
    CommandOutput out{{{"x", "t", "u", "v", "error_estimate"}, {}}, {}};
    out.table.rows.resize(ts.size() * xs.size());
    std::vector<char> growth(out.table.rows.size(), 0);
    parallel_for(out.table.rows.size(), [&](std::size_t i) {
        const double x = xs[i % xs.size()];
        const double t = ts[i / xs.size()];
        const CauchyValue c = solve_cauchy_detail(k, f, x, t, cfg.quadrature);
        out.table.rows[i] = {x, t, c.u(0), c.u(1), c.error_estimate};
        growth[i] = c.growth_warning;
    });
    for (std::size_t i = 0; i < growth.size(); ++i)
        if (growth[i])
            out.warnings.push_back("initial data still large at the truncation point (x=" +
                                   format_double(out.table.rows[i][0]) + ", t=" + format_double(out.table.rows[i][1]) +
                                   "); the integral may not converge");
    return out;
}

CommandOutput transform_table(const RunConfig& cfg)
{
    const TransformationData td = build_transformation(cfg);
    if (cfg.pushforward) {
        RunConfig src = cfg;
        if (src.system == "transformed33")
            src.system = "eq3";
        return {kernel_rows(pushforward_kernel(build_kernel(src), td), cfg), {}};
    }
    RunConfig src = cfg;
    if (src.system == "transformed33")
        src.system = "eq3";
    const SystemSpec spec = build_system(src);
    const auto ts = cfg.grid.t.points(), xs = cfg.grid.x.points();
    CommandOutput out{{{"x", "t", "h", "f1", "g1", "g2", "f2"}, {}}, {}};
    out.table.rows.resize(ts.size() * xs.size());
    parallel_for(out.table.rows.size(), [&](std::size_t i) {
        const double x = xs[i % xs.size()];
        const double t = ts[i / xs.size()];
        const TransformedCoefficients c = transformed_coefficients_at(spec, td, x, t);
        out.table.rows[i] = {x, t, c.h, c.f1, c.g1, c.g2, c.f2};
    });
    return out;
}

}  // namespace confract
