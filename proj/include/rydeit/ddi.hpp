//---------------------------------------------------------------------------//
// Copyright 2026 rydeit contributors.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file rydeit/ddi.hpp
//! Attenuation and phase averaged over the DDI frequency-shift distribution.
//---------------------------------------------------------------------------//
#pragma once

#include "nnd.hpp"
#include "params.hpp"
#include "response.hpp"

namespace rydeit
{
//---------------------------------------------------------------------------//
/*!
 * Mean-field response with quadrature error estimates.
 *
 * delta_beta and delta_phi are the excess over the interaction-free values
 * at the same detunings.
 */
struct DdiResponse
{
    double beta{0};
    double phi{0};
    double delta_beta{0};
    double delta_phi{0};
    double err_beta{0};
    double err_phi{0};
    int panels{0};
    QuadStatus status{QuadStatus::converged};

    bool converged() const { return status == QuadStatus::converged; }
};

//---------------------------------------------------------------------------//
// Average rho31 over the shift distribution with omega_a from derive_scales
DdiResponse beta_phi_ddi(EitParams const& eit,
                         DdiParams const& ddi,
                         ExpectOptions const& opts = {});

// Same average at gamma0 = 0, delta = 0 using the explicit resonance kernels;
// throws std::invalid_argument off two-photon resonance or with decoherence
DdiResponse delta_beta_phi_on_resonance(EitParams const& eit,
                                        DdiParams const& ddi,
                                        ExpectOptions const& opts = {});

// Detunings reflected through zero: the C6 > 0 response equals the C6 < 0
// response at mirrored detunings with the phase negated
EitParams mirrored(EitParams eit);

//---------------------------------------------------------------------------//
}  // namespace rydeit
