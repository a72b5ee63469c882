#include "confract/cauchy.hpp"

#include <array>
#include <cmath>
#include <memory>
#include <queue>
#include <string>
#include <tuple>
#include <type_traits>

// pchip.hpp in Boost 1.74 calls unqualified isnan
#include <math.h>
#include <boost/math/interpolators/pchip.hpp>

namespace confract {

namespace {

// QUADPACK qk15 abscissae and weights; Gauss points are the odd entries plus the centre.
constexpr std::array<double, 8> xgk = {0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                                       0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                                       0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                                       0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> wgk = {0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                                       0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                                       0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                                       0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> wg = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                                      0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

double norm_of(double v) { return std::abs(v); }
template <int N>
double norm_of(const Eigen::Matrix<double, N, 1>& v)
{
    return v.template lpNorm<Eigen::Infinity>();
}

template <class Value>
Value zero_value()
{
    if constexpr (std::is_same_v<Value, double>)
        return 0.0;
    else
        return Value::Zero();
}

template <class Value>
bool finite_value(const Value& v)
{
    if constexpr (std::is_same_v<Value, double>)
        return std::isfinite(v);
    else
        return v.allFinite();
}

template <class Value>
struct Segment {
    double a, b;
    Value value;
    double error;
    bool operator<(const Segment& o) const { return error < o.error; }
};

template <class Value, class F>
Segment<Value> gk15(F& f, double a, double b, int& evals)
{
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    Value fc = f(c);
    Value kron = wgk[7] * fc;
    Value gauss = wg[3] * fc;
    for (int j = 0; j < 7; ++j) {
        const double dx = h * xgk[j];
        Value f1 = f(c - dx);
        Value f2 = f(c + dx);
        kron += wgk[j] * (f1 + f2);
        if (j % 2 == 1)
            gauss += wg[j / 2] * (f1 + f2);
    }
    evals += 15;
    Value k = h * kron;
    Value g = h * gauss;
    if (!finite_value(k))
        throw ConvergenceError("quadrature: integrand is not finite on [" + std::to_string(a) + ", " +
                               std::to_string(b) + "]");
    return {a, b, k, norm_of(Value(k - g))};
}

template <class Value, class F>
QuadratureResult<Value> adaptive(F& f, const std::vector<double>& breaks, const QuadratureConfig& cfg)
{
    int evals = 0;
    std::priority_queue<Segment<Value>> heap;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i)
        heap.push(gk15<Value>(f, breaks[i], breaks[i + 1], evals));

    auto totals = [&heap]() {
        // recomputed from scratch to avoid drift from running sums
        auto copy = heap;
        Value sum = zero_value<Value>();
        double err = 0;
        while (!copy.empty()) {
            sum += copy.top().value;
            err += copy.top().error;
            copy.pop();
        }
        return std::pair{sum, err};
    };

    Value sum = zero_value<Value>();
    double err = 0;
    std::tie(sum, err) = totals();
    std::vector<Segment<Value>> frozen;
    int splits = 0;
    while (!heap.empty()) {
        const double target = std::max(cfg.abs_tol, cfg.rel_tol * norm_of(sum));
        if (err <= target)
            break;
        if (splits >= cfg.max_subdivisions)
            throw ConvergenceError("quadrature: max_subdivisions exhausted (error " + std::to_string(err) + ")");
        Segment<Value> worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b) || (worst.b - worst.a) <= 1e-14 * std::max(1.0, std::abs(mid))) {
            frozen.push_back(worst);
            if (heap.empty())
                break;
            continue;
        }
        Segment<Value> left = gk15<Value>(f, worst.a, mid, evals);
        Segment<Value> right = gk15<Value>(f, mid, worst.b, evals);
        sum += left.value + right.value - worst.value;
        err += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        ++splits;
        if (splits % 64 == 0)
            std::tie(sum, err) = totals();
    }
    QuadratureResult<Value> r;
    std::tie(r.value, r.error_estimate) = totals();
    for (const auto& s : frozen) {
        r.value += s.value;
        r.error_estimate += s.error;
    }
    r.evaluations = evals;
    r.upper_limit = breaks.back();
    return r;
}

template <class Value, class F>
QuadratureResult<Value> semi_infinite(F& f, const QuadratureConfig& cfg, double min_upper)
{
    cfg.validate();
    double Y = std::max(1.0, min_upper);
    int evals = 0;
    auto small = [&](double y) {
        ++evals;
        return norm_of(f(y)) < cfg.truncation_threshold;
    };
    while (!(small(Y) && small(1.25 * Y) && small(1.5 * Y) && small(2 * Y))) {
        Y *= 2;
        if (Y > 1e7)
            throw ConvergenceError("quadrature: integrand does not decay below the truncation threshold");
    }
    std::vector<double> breaks;
    breaks.push_back(0);
    for (int k = -24; k <= 0; ++k)
        breaks.push_back(std::ldexp(1.0, k));
    for (double y = 2; y < Y; y *= 2)
        breaks.push_back(y);
    if (Y > breaks.back())
        breaks.push_back(Y);
    QuadratureResult<Value> r = adaptive<Value>(f, breaks, cfg);
    // exponential decay beyond Y with length scale at most Y
    r.error_estimate += norm_of(f(Y)) * Y;
    r.evaluations += evals + 1;
    return r;
}

}  // namespace

void QuadratureConfig::validate() const
{
    if (!(abs_tol > 0) || !(rel_tol > 0) || !(truncation_threshold > 0))
        throw ParameterError("quadrature tolerances must be positive");
    if (truncation_threshold > abs_tol / 100)
        throw ParameterError("quadrature truncation_threshold must be <= abs_tol/100");
    if (max_subdivisions < 1)
        throw ParameterError("quadrature max_subdivisions must be positive");
}

QuadratureResult<double> integrate_interval(const std::function<double(double)>& f, double a, double b,
                                            const QuadratureConfig& cfg)
{
    cfg.validate();
    if (!(b > a))
        throw ParameterError("integrate_interval requires b > a");
    return adaptive<double>(f, {a, b}, cfg);
}

QuadratureResult<double> integrate_semiinfinite(const std::function<double(double)>& f, const QuadratureConfig& cfg,
                                                double min_upper)
{
    return semi_infinite<double>(f, cfg, min_upper);
}

QuadratureResult<Eigen::Vector2d> integrate_semiinfinite(const std::function<Eigen::Vector2d(double)>& f,
                                                         const QuadratureConfig& cfg, double min_upper)
{
    return semi_infinite<Eigen::Vector2d>(f, cfg, min_upper);
}

QuadratureResult<Eigen::Vector4d> integrate_semiinfinite(const std::function<Eigen::Vector4d(double)>& f,
                                                         const QuadratureConfig& cfg, double min_upper)
{
    return semi_infinite<Eigen::Vector4d>(f, cfg, min_upper);
}

double laplace_transform(const std::function<double(double)>& g, double lam, const QuadratureConfig& cfg)
{
    if (!(lam > 0))
        throw ParameterError("laplace_transform requires lam > 0");
    std::function<double(double)> f = [&](double y) { return g(y) * std::exp(-lam * y); };
    return integrate_semiinfinite(f, cfg).value;
}

InitialData zero_data()
{
    return {[](double) { return Eigen::Vector2d::Zero().eval(); }, 0, "zero"};
}

InitialData steady_seed_data(const SolutionPair& seed)
{
    return {[seed](double y) { return Eigen::Vector2d(seed.u(y, 1.0), seed.v(y, 1.0)); }, 0, "steady-seed"};
}

InitialData gaussian_bump(double center, double width, Eigen::Vector2d direction)
{
    if (!(width > 0))
        throw ParameterError("gaussian bump width must be positive");
    return {[=](double y) {
                double d = (y - center) / width;
                return (std::exp(-0.5 * d * d) * direction).eval();
            },
            0, "gaussian-bump"};
}

namespace {

double bump_profile(double w)
{
    if (std::abs(w) >= 1)
        return 0;
    return std::exp(1 - 1 / (1 - w * w));
}

// C-infinity step from 0 (s <= 0) to 1 (s >= 1).
double smooth_step(double s)
{
    auto g = [](double r) { return r > 0 ? std::exp(-1 / r) : 0.0; };
    double a = g(s);
    double b = g(1 - s);
    return a / (a + b);
}

}  // namespace

InitialData smooth_bump(double lo, double hi, Eigen::Vector2d direction)
{
    if (!(hi > lo))
        throw ParameterError("smooth bump requires hi > lo");
    return {[=](double y) { return (bump_profile((2 * y - lo - hi) / (hi - lo)) * direction).eval(); }, hi,
            "smooth-bump"};
}

InitialData smooth_indicator(double lo, double hi, double ramp, Eigen::Vector2d direction)
{
    if (!(hi > lo) || !(ramp > 0) || 2 * ramp > hi - lo)
        throw ParameterError("smooth indicator requires hi > lo and 0 < ramp <= (hi - lo)/2");
    return {[=](double y) {
                double up = smooth_step((y - lo) / ramp);
                double down = smooth_step((hi - y) / ramp);
                return (up * down * direction).eval();
            },
            hi, "indicator-smooth"};
}

InitialData tabulated_data(std::vector<double> ys, std::vector<double> us, std::vector<double> vs)
{
    if (ys.size() != us.size() || ys.size() != vs.size())
        throw ParameterError("tabulated data: column lengths differ");
    if (ys.size() < 4)
        throw ParameterError("tabulated data: need at least 4 samples");
    for (std::size_t i = 0; i + 1 < ys.size(); ++i)
        if (!(ys[i + 1] > ys[i]))
            throw ParameterError("tabulated data: y must be strictly increasing");
    if (!(ys.front() >= 0))
        throw ParameterError("tabulated data: y must be non-negative");
    const double lo = ys.front(), hi = ys.back();
    using boost::math::interpolators::pchip;
    auto pu = std::make_shared<pchip<std::vector<double>>>(std::vector<double>(ys), std::move(us));
    auto pv = std::make_shared<pchip<std::vector<double>>>(std::move(ys), std::move(vs));
    return {[=](double y) {
                if (y < lo || y > hi)
                    return Eigen::Vector2d::Zero().eval();
                return Eigen::Vector2d((*pu)(y), (*pv)(y));
            },
            hi, "tabulated"};
}

CauchyValue solve_cauchy_detail(const KernelMatrix& kernel, const InitialData& f, double x, double t,
                                const QuadratureConfig& cfg)
{
    if (!(t > 0) || !(x > 0))
        throw DomainError("solve_cauchy requires x > 0, t > 0");
    std::function<Eigen::Vector2d(double)> integrand = [&](double y) -> Eigen::Vector2d {
        return kernel(t, x, y) * f(y);
    };
    auto r = integrate_semiinfinite(integrand, cfg, f.support_end);
    CauchyValue out;
    out.u = r.value;
    out.error_estimate = r.error_estimate;
    const double Y = r.upper_limit;
    const double data = f(Y).lpNorm<Eigen::Infinity>();
    out.growth_warning = data > 1e6;
    return out;
}

Eigen::Vector2d solve_cauchy(const KernelMatrix& kernel, const InitialData& f, double x, double t,
                             const QuadratureConfig& cfg)
{
    return solve_cauchy_detail(kernel, f, x, t, cfg).u;
}

double verify_laplace_identity(const KernelMatrix& kernel, const SteadyField& steady, WeightKind weight,
                               const FamilyField& family, double lam, double x, double t,
                               const QuadratureConfig& cfg)
{
    if (!(lam >= 0))
        throw ParameterError("verify_laplace_identity requires lam >= 0");
    std::function<Eigen::Vector4d(double)> integrand = [&](double y) -> Eigen::Vector4d {
        const double w = weight == WeightKind::exp ? std::exp(-lam * y) : std::exp(-lam * y * y);
        Eigen::Matrix2d M = kernel(t, x, y) * steady(y) * w;
        return Eigen::Map<const Eigen::Vector4d>(M.data());
    };
    auto r = integrate_semiinfinite(integrand, cfg);
    Eigen::Matrix2d U = family(lam, x, t);
    Eigen::Vector4d closed = Eigen::Map<const Eigen::Vector4d>(U.data());
    return (r.value - closed).lpNorm<Eigen::Infinity>();
}

}  // namespace confract
