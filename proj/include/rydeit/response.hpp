//---------------------------------------------------------------------------//
// Copyright 2026 rydeit contributors.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file rydeit/response.hpp
//! Steady-state probe response of a single Rydberg frequency class.
//---------------------------------------------------------------------------//
#pragma once

#include <complex>

#include "params.hpp"

namespace rydeit
{
using Complex = std::complex<double>;

//---------------------------------------------------------------------------//
//! Susceptibility value with the derived attenuation, phase and transmission
struct ProbeResponse
{
    Complex chi;         //!< rho31 / Omega_p [1/gamma]
    double beta{0};      //!< attenuation coefficient
    double phi{0};       //!< phase shift [rad]
    double transmission{1};

    //! Build from a single susceptibility value at optical depth alpha
    static ProbeResponse from_chi(Complex chi, double alpha, double gamma);
};

//---------------------------------------------------------------------------//
//! Attenuation and phase pair
struct BetaPhi
{
    double beta{0};
    double phi{0};
};

//---------------------------------------------------------------------------//
/*!
 * First-order expansion coefficients of rho31/Omega_p in the decoherence
 * (a1, b1) and the two-photon detuning (a2, b2) at shift omega.
 */
struct SeriesCoeffs
{
    double a0{0}, a1{0}, a2{0};
    double b0{0}, b1{0}, b2{0};
};

//---------------------------------------------------------------------------//
// rho31 / Omega_p at the given detunings (lowest order in the probe)
Complex rho31(double delta_p,
              double delta_c,
              double gamma0,
              double omega_c,
              double gamma = 1.0);

ProbeResponse probe_response(EitParams const& eit);

BetaPhi beta0_phi0(EitParams const& eit);

// Leading-order forms valid for omega_c^2 >> gamma0 gamma, delta gamma
BetaPhi beta0_phi0_approx(EitParams const& eit);

// Rydberg population at the medium input
double rho22_in(EitParams const& eit, bool exact);

SeriesCoeffs series_coeffs(double omega,
                           double delta_c,
                           double omega_c,
                           double gamma = 1.0);

//---------------------------------------------------------------------------//
}  // namespace rydeit
