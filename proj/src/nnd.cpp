//---------------------------------------------------------------------------//
// Copyright 2026 rydeit contributors.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file nnd.cpp
//---------------------------------------------------------------------------//
#include "rydeit/nnd.hpp"

#include <random>

#include "rydeit/params.hpp"

namespace rydeit
{
//---------------------------------------------------------------------------//
NndMeasure NndMeasure::from_scales(DerivedScales const& scales)
{
    return NndMeasure{scales.omega_a, scales.r_a};
}

//---------------------------------------------------------------------------//
double p_r(double r)
{
    if (r < 0)
    {
        throw std::domain_error("p_r: negative distance");
    }
    double const r3 = r * r * r;
    return 3 * r * r * std::exp(-r3);
}

double p_r(double r, double r_a)
{
    return p_r(r / r_a) / r_a;
}

double omega_of_r(double r, double r_a, double omega_a)
{
    if (!(r > 0))
    {
        throw std::domain_error("omega_of_r: distance must be positive");
    }
    double const q3 = std::pow(r_a / r, 3);
    return omega_a * (q3 * q3 + q3);
}

double domega_dr(double r, double r_a, double omega_a)
{
    if (!(r > 0))
    {
        throw std::domain_error("domega_dr: distance must be positive");
    }
    double const q3 = std::pow(r_a / r, 3);
    return omega_a * (6 * q3 * q3 + 3 * q3) / r;
}

double u_of_omega(double omega, double omega_a)
{
    double const x = omega / omega_a;
    return (1 + std::sqrt(1 + 4 * x)) / (2 * x);
}

//---------------------------------------------------------------------------//
/*!
 * Shift density.
 *
 * With x = omega/omega_a, s = sqrt(1 + 4x) and u = (1 + s)/(2x), the closed
 * form (1+s)^2 / (4 x^2 s) e^{-u} / omega_a is evaluated as u^2 e^{-u} / s,
 * which stays finite for any representable x.
 */
double p_omega(double omega, double omega_a)
{
    if (omega < 0)
    {
        throw std::domain_error("p_omega: negative shift");
    }
    if (omega == 0)
    {
        return 0;
    }
    double const x = omega / omega_a;
    double const s = std::sqrt(1 + 4 * x);
    double const u = (1 + s) / (2 * x);
    return u * u * std::exp(-u) / s / omega_a;
}

double p_omega_tail(double omega, double omega_a)
{
    if (!(omega > 0))
    {
        throw std::domain_error("p_omega_tail: shift must be positive");
    }
    return std::sqrt(omega_a) / (2 * omega * std::sqrt(omega));
}

double cdf_omega(double omega, double omega_a)
{
    if (omega <= 0)
    {
        return 0;
    }
    return std::exp(-u_of_omega(omega, omega_a));
}

//---------------------------------------------------------------------------//
std::vector<double>
sample_shift(std::int64_t count, std::uint64_t seed, double omega_a)
{
    if (count <= 0)
    {
        throw std::invalid_argument("sample_shift: count must be positive");
    }
    std::mt19937_64 rng(seed);
    std::exponential_distribution<double> unit_exp(1.0);
    std::vector<double> result;
    result.reserve(static_cast<std::size_t>(count));
    while (static_cast<std::int64_t>(result.size()) < count)
    {
        double const u = unit_exp(rng);
        if (u > 0)
        {
            result.push_back(omega_of_u(u, omega_a));
        }
    }
    return result;
}

//---------------------------------------------------------------------------//
char const* to_cstring(QuadStatus s)
{
    switch (s)
    {
        case QuadStatus::converged:
            return "converged";
        case QuadStatus::panel_limit:
            return "panel_limit";
        case QuadStatus::divergent:
            return "divergent";
    }
    return "unknown";
}

Expectation<1> expect(std::function<double(double)> const& f,
                      NndMeasure const& measure,
                      ExpectOptions const& opts)
{
    auto wrapped = [&f](double w) { return std::array<double, 1>{f(w)}; };
    return expect_n<1>(wrapped, measure, opts);
}

//---------------------------------------------------------------------------//
}  // namespace rydeit
