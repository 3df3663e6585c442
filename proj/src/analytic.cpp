//---------------------------------------------------------------------------//
// Copyright 2026 rydeit contributors.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file analytic.cpp
//---------------------------------------------------------------------------//
#include "rydeit/analytic.hpp"

#include <cmath>
#include <numbers>

namespace rydeit
{
namespace
{
//---------------------------------------------------------------------------//
// W - 2d and W + 2d for W = sqrt(g^2 + 4 d^2), without cancellation.
// Their product is exactly g^2.
struct SplitWidth
{
    double w;
    double minus;  //!< W - 2d
    double plus;   //!< W + 2d
};

SplitWidth split_width(double gamma, double d)
{
    SplitWidth s;
    s.w = detuning_width(gamma, d);
    if (d >= 0)
    {
        s.plus = s.w + 2 * d;
        s.minus = gamma * gamma / s.plus;
    }
    else
    {
        s.minus = s.w - 2 * d;
        s.plus = gamma * gamma / s.minus;
    }
    return s;
}

void fill_validity(AnalyticPrediction& p,
                   EitParams const& eit,
                   DdiParams const& ddi,
                   double delta_c)
{
    double const ratio = omega_a(eit, ddi)
                         / eit_linewidth(eit.gamma, eit.omega_c, delta_c);
    p.validity_beta = std::pow(ratio, 1.5);
    p.validity_phi = std::sqrt(ratio);
}

double probe_power(EitParams const& eit)
{
    return eit.omega_p_in * eit.omega_p_in;
}
}  // namespace

//---------------------------------------------------------------------------//
AnalyticPrediction negate_phase(AnalyticPrediction p)
{
    p.delta_phi = -p.delta_phi;
    p.slope_phi = -p.slope_phi;
    return p;
}

//---------------------------------------------------------------------------//
/*!
 * Replace the shift density by its heavy tail and integrate the resonance
 * kernels exactly.
 */
AnalyticPrediction
delta_beta_phi_ideal(EitParams const& eit, DdiParams const& ddi)
{
    eit.validate();
    double const sign = ddi.c6_sign() > 0 ? -1.0 : 1.0;
    double const dc = sign * eit.delta_c;
    double const s = s_ddi(eit, ddi);
    auto const w = split_width(eit.gamma, dc);

    AnalyticPrediction p;
    p.slope_beta = 2 * s * std::sqrt(w.minus) / w.w;
    p.slope_phi = s * std::sqrt(w.plus) / w.w;
    p.delta_beta = p.slope_beta * probe_power(eit);
    p.delta_phi = p.slope_phi * probe_power(eit);
    fill_validity(p, eit, ddi, eit.delta_c);
    return sign > 0 ? p : negate_phase(p);
}

//---------------------------------------------------------------------------//
AnalyticPrediction
delta_beta_phi_corrected(EitParams const& eit, DdiParams const& ddi)
{
    eit.validate();
    double const sign = ddi.c6_sign() > 0 ? -1.0 : 1.0;
    double const delta = sign * eit.delta();
    double const dc = sign * eit.delta_c - delta;
    double const g0 = eit.gamma0;
    double const oc2 = eit.omega_c * eit.omega_c;
    double const s = s_ddi(eit, ddi);
    auto const w = split_width(eit.gamma, dc);
    double const root_minus = std::sqrt(w.minus);
    double const root_plus = std::sqrt(w.plus);

    AnalyticPrediction p;
    p.slope_beta = 2 * s
                   * (root_minus / w.w - 3 * g0 * root_plus / oc2
                      + 3 * delta * root_minus / oc2);
    p.slope_phi = s
                  * (root_plus / w.w - 3 * g0 * root_minus / oc2
                     - 3 * delta * root_plus / oc2);
    p.delta_beta = p.slope_beta * probe_power(eit);
    p.delta_phi = p.slope_phi * probe_power(eit);
    fill_validity(p, eit, ddi, eit.delta_c);
    return sign > 0 ? p : negate_phase(p);
}

//---------------------------------------------------------------------------//
/*!
 * Minimum of the averaged absorption expanded to second order in delta,
 * with the first-order coefficient averaged over the heavy tail.
 */
double peak_shift_probe_sweep(EitParams const& eit, DdiParams const& ddi)
{
    eit.validate();
    double const sign = ddi.c6_sign() > 0 ? -1.0 : 1.0;
    double const dc = sign * eit.delta_c;
    double const g = eit.gamma;
    double const oc = eit.omega_c;
    auto const w = split_width(g, dc);
    double const root_minus = std::sqrt(w.minus);
    double const root_plus = std::sqrt(w.plus);

    constexpr double pi2 = std::numbers::pi * std::numbers::pi;
    double const prefactor = pi2 * ddi.sqrt_c6_n_eps() / (12 * g * oc);
    double const bracket = 3 * root_minus
                           + (2 * dc * root_minus + g * root_plus) * oc * oc
                                 / (w.w * w.w * w.w);
    return -sign * prefactor * bracket * probe_power(eit);
}

double peak_shift_coupling_sweep(EitParams const& eit, DdiParams const& ddi)
{
    eit.validate();
    double const sign = ddi.c6_sign() > 0 ? -1.0 : 1.0;
    double const dp = sign * eit.delta_p;
    auto const w = split_width(eit.gamma, dp);

    constexpr double pi2 = std::numbers::pi * std::numbers::pi;
    double const prefactor = pi2 * ddi.sqrt_c6_n_eps()
                             / (4 * eit.gamma * eit.omega_c);
    return -sign * prefactor * std::sqrt(w.plus) * probe_power(eit);
}

double c2_peak_coefficient(EitParams const& eit)
{
    if (!(eit.omega_c > 0))
    {
        throw std::invalid_argument("omega_c must be positive");
    }
    double const oc2 = eit.omega_c * eit.omega_c;
    return 4 * eit.gamma / (oc2 * oc2);
}

//---------------------------------------------------------------------------//
}  // namespace rydeit
