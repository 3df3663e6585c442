//---------------------------------------------------------------------------//
// Copyright 2026 rydeit contributors.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file response.cpp
//---------------------------------------------------------------------------//
#include "rydeit/response.hpp"

#include <cmath>
#include <stdexcept>

namespace rydeit
{
//---------------------------------------------------------------------------//
ProbeResponse ProbeResponse::from_chi(Complex chi, double alpha, double gamma)
{
    ProbeResponse r;
    r.chi = chi;
    r.beta = alpha * gamma * chi.imag();
    r.phi = 0.5 * alpha * gamma * chi.real();
    r.transmission = std::exp(-r.beta);
    return r;
}

//---------------------------------------------------------------------------//
/*!
 * Steady state of the ground-Rydberg and probe coherences with the time
 * derivatives dropped and the Rydberg decay neglected.
 *
 * Im(result) >= 0 whenever gamma0 >= 0: with N = delta + i gamma0 and D the
 * denominator, Im(N conj(D)) = gamma0 omega_c^2 / 2
 * + gamma (delta^2 + gamma0^2).
 */
Complex rho31(
    double delta_p, double delta_c, double gamma0, double omega_c, double gamma)
{
    Complex const two_photon{delta_p + delta_c, gamma0};
    Complex const one_photon{delta_p, 0.5 * gamma};
    Complex const denom = 0.5 * omega_c * omega_c
                          - 2.0 * one_photon * two_photon;
    if (denom == Complex{0, 0})
    {
        throw std::domain_error("rho31: vanishing denominator");
    }
    return two_photon / denom;
}

ProbeResponse probe_response(EitParams const& eit)
{
    Complex const chi = rho31(
        eit.delta_p, eit.delta_c, eit.gamma0, eit.omega_c, eit.gamma);
    return ProbeResponse::from_chi(chi, eit.alpha, eit.gamma);
}

BetaPhi beta0_phi0(EitParams const& eit)
{
    auto const r = probe_response(eit);
    return {r.beta, r.phi};
}

BetaPhi beta0_phi0_approx(EitParams const& eit)
{
    double const a = eit.alpha;
    double const g = eit.gamma;
    double const g0 = eit.gamma0;
    double const d = eit.delta();
    double const dc = eit.delta_c;
    double const oc2 = eit.omega_c * eit.omega_c;
    double const oc4 = oc2 * oc2;

    BetaPhi r;
    r.beta = 2 * a * g0 * g / oc2 - 16 * a * g0 * d * dc * g / oc4;
    r.phi = a * g * d / oc2 - 4 * a * g0 * d * g * g / oc4
            + 4 * a * (g0 * g0 - d * d) * dc * g / oc4;
    return r;
}

double rho22_in(EitParams const& eit, bool exact)
{
    double const op2 = eit.omega_p_in * eit.omega_p_in;
    double const oc2 = eit.omega_c * eit.omega_c;
    if (!exact)
    {
        return op2 / oc2;
    }
    double const d = eit.delta();
    double const shifted = oc2 - 4 * d * eit.delta_p;
    double const denom = 4 * d * d * eit.gamma * eit.gamma
                         + shifted * shifted;
    if (denom == 0)
    {
        throw std::domain_error("rho22_in: vanishing denominator");
    }
    return op2 * oc2 / denom;
}

//---------------------------------------------------------------------------//
/*!
 * Expansion of rho31/Omega_p about gamma0 = delta = 0 with the probe detuning
 * held at -delta_c and the coupling detuning shifted by omega.
 */
SeriesCoeffs
series_coeffs(double omega, double delta_c, double omega_c, double gamma)
{
    if (omega < 0)
    {
        throw std::domain_error("series_coeffs: negative shift");
    }
    double const oc2 = omega_c * omega_c;
    double const lin = 4 * omega * delta_c + oc2;
    double const wg2 = 4 * omega * omega * gamma * gamma;
    double const den = wg2 + lin * lin;
    double const den2 = den * den;

    SeriesCoeffs s;
    s.a0 = 4 * omega * omega * gamma / den;
    s.a1 = 2 * oc2 * (lin * lin - wg2) / den2;
    s.a2 = 8 * omega * gamma * oc2 * lin / den2;
    s.b0 = (8 * delta_c * omega * omega + 2 * omega * oc2) / den;
    s.b1 = -8 * omega * gamma * oc2 * (4 * delta_c * omega + oc2) / den2;
    s.b2 = 2 * oc2 * (lin * lin - wg2) / den2;
    return s;
}

//---------------------------------------------------------------------------//
}  // namespace rydeit
