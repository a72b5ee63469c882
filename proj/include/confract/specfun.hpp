#pragma once

#include <algorithm>
#include <cmath>
#include <concepts>
#include <limits>
#include <numbers>
#include <string>

#include "confract/error.hpp"

namespace confract {

/// Order of a modified Bessel function. Finite, nu >= -1 in this library.
template <std::floating_point Real>
struct BesselOrder {
    Real nu;
};

namespace detail {

// Neumaier's variant of Kahan summation.
template <std::floating_point Real>
struct CompensatedSum {
    Real sum = 0;
    Real carry = 0;

    void add(Real term)
    {
        Real t = sum + term;
        if (std::abs(sum) >= std::abs(term))
            carry += (sum - t) + term;
        else
            carry += (term - t) + sum;
        sum = t;
    }
    Real value() const { return sum + carry; }
};

template <std::floating_point Real>
constexpr Real series_cutoff()
{
    return std::min<Real>(Real(1e-17), std::numeric_limits<Real>::epsilon() / 10);
}

inline constexpr int series_max_terms = 200;

template <std::floating_point Real>
void check_bessel_args(Real nu, Real z)
{
    if (!std::isfinite(nu) || !std::isfinite(z))
        throw DomainError("bessel_i: non-finite argument");
    if (nu < Real(-1))
        throw DomainError("bessel_i: order below -1");
    if (z < 0)
        throw DomainError("bessel_i: negative argument");
}

// Series of I_nu(z), nu > -1 or nu a non-negative integer; all terms positive.
template <std::floating_point Real>
Real bessel_i_series(Real nu, Real z)
{
    const Real half = z / 2;
    Real term = std::exp(nu * std::log(half) - std::lgamma(nu + 1));
    const Real q = half * half;
    CompensatedSum<Real> acc;
    acc.add(term);
    for (int n = 1; n < series_max_terms; ++n) {
        term *= q / (Real(n) * (Real(n) + nu));
        acc.add(term);
        if (term < series_cutoff<Real>() * acc.value())
            return acc.value();
    }
    throw ConvergenceError("bessel_i: power series did not converge in 200 terms");
}

// Large-argument expansion without the e^z/sqrt(2 pi z) prefactor.
template <std::floating_point Real>
Real bessel_i_asymptotic_sum(Real nu, Real z)
{
    const Real mu = 4 * nu * nu;
    CompensatedSum<Real> acc;
    Real term = 1;
    acc.add(term);
    Real last = std::abs(term);
    for (int k = 1; k < series_max_terms; ++k) {
        const Real odd = Real(2 * k - 1);
        Real next = -term * (mu - odd * odd) / (Real(8 * k) * z);
        if (next == 0)
            break;
        if (std::abs(next) > last)
            break;  // divergent tail
        term = next;
        last = std::abs(term);
        acc.add(term);
        if (last < series_cutoff<Real>() * std::abs(acc.value()))
            break;
    }
    return acc.value();
}

template <std::floating_point Real>
Real reflect_integer_order(Real nu)
{
    // I_{-n} = I_n for integer n
    if (nu < 0 && nu == std::round(nu))
        return -nu;
    return nu;
}

}  // namespace detail

/// Argument at which bessel_i switches from the series to the asymptotic expansion.
template <std::floating_point Real>
Real bessel_crossover(Real nu)
{
    return std::max<Real>(Real(30), Real(1.5) * nu * nu);
}

template <std::floating_point Real>
Real gamma(Real x)
{
    if (std::isnan(x))
        throw DomainError("gamma: NaN argument");
    if (x <= 0 && x == std::round(x))
        throw PoleError("gamma: pole at non-positive integer " + std::to_string(static_cast<double>(x)));
    Real g = std::tgamma(x);
    if (std::isinf(g))
        throw OverflowError("gamma: overflow at x = " + std::to_string(static_cast<double>(x)));
    return g;
}

/// Power series of I_nu(z); exposed for cross-validation against the asymptotic branch.
template <std::floating_point Real>
Real bessel_i_series(Real nu, Real z)
{
    detail::check_bessel_args(nu, z);
    nu = detail::reflect_integer_order(nu);
    if (z == 0)
        return nu == 0 ? Real(1) : (nu > 0 ? Real(0) : std::numeric_limits<Real>::infinity());
    return detail::bessel_i_series(nu, z);
}

/// Large-argument asymptotic expansion of I_nu(z).
template <std::floating_point Real>
Real bessel_i_asymptotic(Real nu, Real z)
{
    detail::check_bessel_args(nu, z);
    if (z <= 0)
        throw DomainError("bessel_i_asymptotic: argument must be positive");
    Real e = std::exp(z);
    if (std::isinf(e))
        throw OverflowError("bessel_i: e^z overflows");
    return e / std::sqrt(2 * std::numbers::pi_v<Real> * z) * detail::bessel_i_asymptotic_sum(nu, z);
}

/// Modified Bessel function of the first kind, real order nu >= -1, z >= 0.
template <std::floating_point Real>
Real bessel_i(Real nu, Real z)
{
    detail::check_bessel_args(nu, z);
    nu = detail::reflect_integer_order(nu);
    if (z == 0) {
        if (nu == 0)
            return 1;
        if (nu > 0)
            return 0;
        throw OverflowError("bessel_i: I_nu(0) is infinite for -1 < nu < 0");
    }
    if (z < bessel_crossover(nu))
        return detail::bessel_i_series(nu, z);
    return bessel_i_asymptotic(nu, z);
}

template <std::floating_point Real>
Real bessel_i(BesselOrder<Real> order, Real z)
{
    return bessel_i(order.nu, z);
}

/// e^{-z} I_nu(z); finite for every z > 0.
template <std::floating_point Real>
Real bessel_i_scaled(Real nu, Real z)
{
    detail::check_bessel_args(nu, z);
    nu = detail::reflect_integer_order(nu);
    if (z == 0)
        return bessel_i(nu, z);
    if (z < bessel_crossover(nu))
        return detail::bessel_i_series(nu, z) * std::exp(-z);
    return detail::bessel_i_asymptotic_sum(nu, z) / std::sqrt(2 * std::numbers::pi_v<Real> * z);
}

extern template double gamma<double>(double);
extern template double bessel_i<double>(double, double);
extern template double bessel_i_scaled<double>(double, double);

}  // namespace confract
