//---------------------------------------------------------------------------//
// Copyright 2026 rydeit contributors.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file rydeit/nnd.hpp
//! Nearest-neighbor distance and frequency-shift distributions.
//---------------------------------------------------------------------------//
#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "detail/quadrature.hpp"

namespace rydeit
{
struct DerivedScales;

//---------------------------------------------------------------------------//
/*!
 * Shift distribution of an ideal gas of Rydberg excitations.
 *
 * Only the frequency scale enters the expectation; the length scale is
 * carried for reporting when it is known.
 */
struct NndMeasure
{
    double omega_a{0};
    std::optional<double> r_a;

    static NndMeasure from_scales(DerivedScales const& scales);
};

//---------------------------------------------------------------------------//
// DENSITIES
//---------------------------------------------------------------------------//

// Nearest-neighbor distance density, r and result in units of r_a
double p_r(double r);

// Dimensional form [1/length]
double p_r(double r, double r_a);

// Shift magnitude of a Rydberg level whose nearest neighbor sits at r,
// including the uniform background beyond r [units of omega_a]
double omega_of_r(double r, double r_a, double omega_a);

// |d omega / d r| of omega_of_r
double domega_dr(double r, double r_a, double omega_a);

// Shift density, defined for omega >= 0 [1/frequency]
double p_omega(double omega, double omega_a);

// Heavy-tail approximation sqrt(omega_a) / (2 omega^{3/2})
double p_omega_tail(double omega, double omega_a);

// Cumulative of p_omega: probability that the shift is <= omega
double cdf_omega(double omega, double omega_a);

// u = r^3/r_a^3 that produces the shift omega (inverse of the map below)
double u_of_omega(double omega, double omega_a);

// omega_a (u^-2 + u^-1)
inline double omega_of_u(double u, double omega_a)
{
    return omega_a * (1 / (u * u) + 1 / u);
}

//---------------------------------------------------------------------------//
// Monte Carlo shifts: u ~ Exp(1), omega = omega_a (u^-2 + u^-1)
std::vector<double>
sample_shift(std::int64_t count, std::uint64_t seed, double omega_a);

//---------------------------------------------------------------------------//
// EXPECTATION
//---------------------------------------------------------------------------//

enum class QuadStatus
{
    converged,
    panel_limit,  //!< tolerance not reached within the panel budget
    divergent,    //!< integrand grows without bound as omega -> infinity
};

char const* to_cstring(QuadStatus s);

struct ExpectOptions
{
    double rel_tol{1e-8};
    int max_panels{10000};
    //! Shifts where the integrand has structure (added as breakpoints)
    std::vector<double> omega_hints;
};

template<std::size_t N>
struct Expectation
{
    std::array<double, N> value{};
    std::array<double, N> error{};
    int panels{0};
    QuadStatus status{QuadStatus::converged};

    bool converged() const { return status == QuadStatus::converged; }
};

//! Truncation of the unit-exponential variable u = r^3 / r_a^3
inline constexpr double u_min = 1e-8;
inline constexpr double u_max = 40.0;
//! Smallest u the head may be pushed to before giving up
inline constexpr double u_floor = 1e-24;

template<std::size_t N, class F>
Expectation<N>
expect_n(F const& f, NndMeasure const& measure, ExpectOptions const& opts);

Expectation<1> expect(std::function<double(double)> const& f,
                      NndMeasure const& measure,
                      ExpectOptions const& opts = {});

//---------------------------------------------------------------------------//
// INLINE DEFINITIONS
//---------------------------------------------------------------------------//
/*!
 * Expectation of a bounded vector function of the shift.
 *
 * The integral over the shift density is evaluated as
 * int_0^inf e^{-u} f(omega_a (u^-2 + u^-1)) du on [u_min, u_max]. The head
 * [0, u_min] maps to omega -> infinity where f is flat; it is added as
 * (1 - e^{-u_min}) f(omega(u_min)) with an error bound from the variation of
 * f between u_min and u_min/10. While that bound exceeds the tolerance the
 * cut is moved down by decades to u_floor (small omega_a needs this). An
 * integrand still not flat there is reported divergent.
 */
template<std::size_t N, class F>
Expectation<N>
expect_n(F const& f, NndMeasure const& measure, ExpectOptions const& opts)
{
    if (!(measure.omega_a >= 0) || !std::isfinite(measure.omega_a))
    {
        throw std::invalid_argument("omega_a must be finite and non-negative");
    }
    Expectation<N> result;
    if (measure.omega_a == 0)
    {
        // Measure collapses onto omega = 0+
        std::array<double, N> const at_zero = f(0.0);
        result.value = at_zero;
        return result;
    }

    double const wa = measure.omega_a;
    auto integrand = [&f, wa](double u) {
        std::array<double, N> v = f(omega_of_u(u, wa));
        double const w = std::exp(-u);
        for (auto& x : v)
        {
            x *= w;
        }
        return v;
    };

    std::vector<double> breaks;
    for (int k = 0; k <= 32; ++k)
    {
        breaks.push_back(u_min * std::pow(10.0, k / 4.0));
    }
    for (double b : {2.0, 4.0, 8.0, 16.0, u_max})
    {
        breaks.push_back(b);
    }
    for (double w : opts.omega_hints)
    {
        if (w > 0 && std::isfinite(w))
        {
            double const u = u_of_omega(w, wa);
            if (u > u_min && u < u_max)
                breaks.push_back(u);
        }
    }

    auto quad = detail::integrate_adaptive<N>(
        integrand, std::move(breaks), opts.rel_tol, opts.max_panels);

    double lo = u_min;
    bool finite = true;
    bool head_ok = false;
    while (true)
    {
        std::array<double, N> const far = f(omega_of_u(lo, wa));
        std::array<double, N> const farther = f(omega_of_u(lo / 10, wa));
        double const head_weight = -std::expm1(-lo);

        head_ok = true;
        for (std::size_t c = 0; c < N; ++c)
        {
            finite = finite && std::isfinite(far[c])
                     && std::isfinite(farther[c]);
            double const head_err = head_weight * std::fabs(far[c] - farther[c]);
            result.value[c] = quad.value[c] + head_weight * far[c];
            result.error[c] = quad.error[c] + head_err;
            double const scale
                = std::max(std::fabs(result.value[c]),
                           quad.abs_value[c] + head_weight * std::fabs(far[c]));
            head_ok = head_ok && head_err <= opts.rel_tol * scale;
        }
        if (head_ok || !finite || lo <= u_floor)
            break;

        double const next = lo * 1e-4;
        auto ext = detail::integrate_adaptive<N>(
            integrand,
            {next, next * 10, next * 100, next * 1000, lo},
            opts.rel_tol,
            std::max(4, opts.max_panels - quad.panels));
        for (std::size_t c = 0; c < N; ++c)
        {
            quad.value[c] += ext.value[c];
            quad.error[c] += ext.error[c];
            quad.abs_value[c] += ext.abs_value[c];
        }
        quad.panels += ext.panels;
        quad.converged = quad.converged && ext.converged;
        lo = next;
    }
    result.panels = quad.panels;
    if (!finite || !head_ok)
    {
        result.status = QuadStatus::divergent;
    }
    else if (!quad.converged)
    {
        result.status = QuadStatus::panel_limit;
    }
    return result;
}

//---------------------------------------------------------------------------//
}  // namespace rydeit
