#pragma once

#include <algorithm>
#include <cmath>

// Finite-difference stencils shared by the residual, transformation and conservation code.

namespace confract::fd {

inline double first_step(double c) { return std::max(1e-5, 1e-5 * std::abs(c)); }
inline double second_step(double c) { return std::max(3e-4, 3e-4 * std::abs(c)); }
inline double mixed_step(double c) { return std::max(1e-4, 1e-4 * std::abs(c)); }

template <class F>
double central_first(F&& f, double c, double h)
{
    return (f(c + h) - f(c - h)) / (2 * h);
}

template <class F>
double central_first(F&& f, double c)
{
    return central_first(f, c, first_step(c));
}

template <class F>
double central_second(F&& f, double c, double h)
{
    return (f(c + h) - 2 * f(c) + f(c - h)) / (h * h);
}

template <class F>
double central_second(F&& f, double c)
{
    return central_second(f, c, second_step(c));
}

/// Fourth-order five-point first derivative.
template <class F>
double five_point_first(F&& f, double c, double h)
{
    return (-f(c + 2 * h) + 8 * f(c + h) - 8 * f(c - h) + f(c - 2 * h)) / (12 * h);
}

/// Fourth-order five-point second derivative.
template <class F>
double five_point_second(F&& f, double c, double h)
{
    return (-f(c + 2 * h) + 16 * f(c + h) - 30 * f(c) + 16 * f(c - h) - f(c - 2 * h)) / (12 * h * h);
}

/// Step for the five-point stencils, proportional to |c|.
inline double five_point_step(double c) { return 1e-3 * std::max(1e-3, std::abs(c)); }

/// d^2 f / dx dt with independent central steps.
template <class F>
double central_mixed(F&& f, double x, double t, double hx, double ht)
{
    return (f(x + hx, t + ht) - f(x + hx, t - ht) - f(x - hx, t + ht) + f(x - hx, t - ht)) / (4 * hx * ht);
}

}  // namespace confract::fd
