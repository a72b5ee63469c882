#pragma once

#include <cmath>

namespace confract {

/// Second-order truncated Taylor expansion in (x, t).
struct Jet {
    double v = 0;
    double x = 0;
    double t = 0;
    double xx = 0;
    double xt = 0;
    double tt = 0;

    static Jet constant(double c) { return {c, 0, 0, 0, 0, 0}; }
    static Jet var_x(double x0) { return {x0, 1, 0, 0, 0, 0}; }
    static Jet var_t(double t0) { return {t0, 0, 1, 0, 0, 0}; }
};

inline Jet operator+(const Jet& a, const Jet& b)
{
    return {a.v + b.v, a.x + b.x, a.t + b.t, a.xx + b.xx, a.xt + b.xt, a.tt + b.tt};
}

inline Jet operator-(const Jet& a, const Jet& b)
{
    return {a.v - b.v, a.x - b.x, a.t - b.t, a.xx - b.xx, a.xt - b.xt, a.tt - b.tt};
}

inline Jet operator-(const Jet& a) { return {-a.v, -a.x, -a.t, -a.xx, -a.xt, -a.tt}; }

inline Jet operator*(double c, const Jet& a) { return {c * a.v, c * a.x, c * a.t, c * a.xx, c * a.xt, c * a.tt}; }
inline Jet operator*(const Jet& a, double c) { return c * a; }
inline Jet operator/(const Jet& a, double c) { return (1.0 / c) * a; }
inline Jet operator+(const Jet& a, double c) { return {a.v + c, a.x, a.t, a.xx, a.xt, a.tt}; }
inline Jet operator+(double c, const Jet& a) { return a + c; }
inline Jet operator-(const Jet& a, double c) { return a + (-c); }
inline Jet operator-(double c, const Jet& a) { return (-a) + c; }

inline Jet operator*(const Jet& a, const Jet& b)
{
    return {a.v * b.v,
            a.x * b.v + a.v * b.x,
            a.t * b.v + a.v * b.t,
            a.xx * b.v + 2 * a.x * b.x + a.v * b.xx,
            a.xt * b.v + a.x * b.t + a.t * b.x + a.v * b.xt,
            a.tt * b.v + 2 * a.t * b.t + a.v * b.tt};
}

/// phi(a) given phi(a.v), phi'(a.v), phi''(a.v).
inline Jet chain(const Jet& a, double f0, double f1, double f2)
{
    return {f0,
            f1 * a.x,
            f1 * a.t,
            f2 * a.x * a.x + f1 * a.xx,
            f2 * a.x * a.t + f1 * a.xt,
            f2 * a.t * a.t + f1 * a.tt};
}

inline Jet exp(const Jet& a)
{
    double e = std::exp(a.v);
    return chain(a, e, e, e);
}

inline Jet log(const Jet& a) { return chain(a, std::log(a.v), 1 / a.v, -1 / (a.v * a.v)); }

inline Jet pow(const Jet& a, double p)
{
    if (p == 0)
        return Jet::constant(1);
    double f0 = std::pow(a.v, p);
    return chain(a, f0, p * f0 / a.v, p * (p - 1) * f0 / (a.v * a.v));
}

inline Jet sqrt(const Jet& a) { return pow(a, 0.5); }

inline Jet operator/(const Jet& a, const Jet& b)
{
    double r = 1 / b.v;
    return a * chain(b, r, -r * r, 2 * r * r * r);
}

inline Jet operator/(double c, const Jet& b) { return c * (Jet::constant(1) / b); }

/// w(x,t) = inner(X(x,t), T(x,t)) where inner is a jet in its own arguments (X, T).
inline Jet compose(const Jet& inner, const Jet& X, const Jet& T)
{
    return {inner.v,
            inner.x * X.x + inner.t * T.x,
            inner.x * X.t + inner.t * T.t,
            inner.xx * X.x * X.x + 2 * inner.xt * X.x * T.x + inner.tt * T.x * T.x + inner.x * X.xx + inner.t * T.xx,
            inner.xx * X.x * X.t + inner.xt * (X.x * T.t + X.t * T.x) + inner.tt * T.x * T.t + inner.x * X.xt +
                inner.t * T.xt,
            inner.xx * X.t * X.t + 2 * inner.xt * X.t * T.t + inner.tt * T.t * T.t + inner.x * X.tt + inner.t * T.tt};
}

inline double value_of(double a) { return a; }
inline double value_of(const Jet& a) { return a.v; }

}  // namespace confract
