//---------------------------------------------------------------------------//
// Copyright 2026 rydeit contributors.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file rydeit/analytic.hpp
//! Closed-form DDI predictions in the weak-interaction limit.
//---------------------------------------------------------------------------//
#pragma once

#include "params.hpp"

namespace rydeit
{
//---------------------------------------------------------------------------//
/*!
 * Closed-form DDI excess attenuation and phase.
 *
 * Both are linear in omega_p_in^2; the slopes are the coefficients. The
 * validity indicators are (omega_a / linewidth)^{3/2} for the attenuation
 * and (omega_a / linewidth)^{1/2} for the phase; both should be << 1.
 */
struct AnalyticPrediction
{
    double delta_beta{0};
    double delta_phi{0};
    double slope_beta{0};  //!< [1/gamma^2]
    double slope_phi{0};   //!< [1/gamma^2]
    double validity_beta{0};
    double validity_phi{0};
};

// Tail-approximated excess at gamma0 = 0, delta = 0
AnalyticPrediction delta_beta_phi_ideal(EitParams const& eit,
                                        DdiParams const& ddi);

// Includes first-order decoherence and two-photon-detuning corrections, with
// the coupling detuning taken as -delta_p
AnalyticPrediction delta_beta_phi_corrected(EitParams const& eit,
                                            DdiParams const& ddi);

// Interaction-induced EIT peak shift when sweeping the probe [gamma]
double peak_shift_probe_sweep(EitParams const& eit, DdiParams const& ddi);

// Interaction-induced EIT peak shift when sweeping the coupling [gamma]
double peak_shift_coupling_sweep(EitParams const& eit, DdiParams const& ddi);

// Curvature of the averaged absorption in delta, with the omega-dependent
// remainder dropped: 4 gamma / omega_c^4
double c2_peak_coefficient(EitParams const& eit);

// Phase-negated copy, the prediction-side half of the C6 sign rule
AnalyticPrediction negate_phase(AnalyticPrediction p);

//---------------------------------------------------------------------------//
}  // namespace rydeit
