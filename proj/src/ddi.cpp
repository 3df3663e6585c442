//---------------------------------------------------------------------------//
// Copyright 2026 rydeit contributors.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file ddi.cpp
//---------------------------------------------------------------------------//
#include "rydeit/ddi.hpp"

#include <cmath>
#include <stdexcept>

namespace rydeit
{
namespace
{
//---------------------------------------------------------------------------//
// Shift at which the real part of the rho31 denominator crosses zero
std::vector<double> resonance_hints(EitParams const& eit)
{
    std::vector<double> hints;
    if (eit.delta_p != 0)
    {
        double const w = eit.omega_c * eit.omega_c / (4 * eit.delta_p)
                         - eit.delta();
        if (w > 0)
            hints.push_back(w);
    }
    return hints;
}

template<class Kernel>
DdiResponse average(EitParams const& eit,
                    DdiParams const& ddi,
                    ExpectOptions opts,
                    Kernel const& kernel)
{
    NndMeasure const measure{omega_a(eit, ddi), std::nullopt};
    auto hints = resonance_hints(eit);
    opts.omega_hints.insert(opts.omega_hints.end(), hints.begin(), hints.end());

    auto const e = expect_n<2>(kernel, measure, opts);
    double const ag = eit.alpha * eit.gamma;

    DdiResponse r;
    r.beta = ag * e.value[0];
    r.phi = 0.5 * ag * e.value[1];
    r.err_beta = ag * e.error[0];
    r.err_phi = 0.5 * ag * e.error[1];
    r.panels = e.panels;
    r.status = e.status;
    return r;
}
}  // namespace

//---------------------------------------------------------------------------//
EitParams mirrored(EitParams eit)
{
    eit.delta_p = -eit.delta_p;
    eit.delta_c = -eit.delta_c;
    return eit;
}

//---------------------------------------------------------------------------//
/*!
 * Integrate Im and Re of rho31(delta_p, delta_c + omega) against the shift
 * density.
 *
 * A positive C6 shifts the Rydberg level down, delta_c - omega. Since
 * rho31(-dp, -dc) = -conj(rho31(dp, dc)) this is evaluated at mirrored
 * detunings with the phase negated.
 */
DdiResponse beta_phi_ddi(EitParams const& eit,
                         DdiParams const& ddi,
                         ExpectOptions const& opts)
{
    eit.validate();
    bool const flip = ddi.c6_sign() > 0;
    EitParams const e = flip ? mirrored(eit) : eit;

    auto kernel = [&e](double w) {
        Complex const chi
            = rho31(e.delta_p, e.delta_c + w, e.gamma0, e.omega_c, e.gamma);
        return std::array<double, 2>{chi.imag(), chi.real()};
    };
    DdiResponse r = average(e, ddi, opts, kernel);
    BetaPhi const bare = beta0_phi0(e);
    r.delta_beta = r.beta - bare.beta;
    r.delta_phi = r.phi - bare.phi;
    if (flip)
    {
        r.phi = -r.phi;
        r.delta_phi = -r.delta_phi;
    }
    return r;
}

//---------------------------------------------------------------------------//
DdiResponse delta_beta_phi_on_resonance(EitParams const& eit,
                                        DdiParams const& ddi,
                                        ExpectOptions const& opts)
{
    eit.validate();
    double const scale = std::max(
        {eit.gamma, std::fabs(eit.delta_p), std::fabs(eit.delta_c)});
    if (eit.gamma0 != 0 || std::fabs(eit.delta()) > 1e-12 * scale)
    {
        throw std::invalid_argument(
            "on-resonance kernels require gamma0 = 0 and delta = 0");
    }
    bool const flip = ddi.c6_sign() > 0;
    EitParams const e = flip ? mirrored(eit) : eit;

    double const g = e.gamma;
    double const dc = e.delta_c;
    double const oc2 = e.omega_c * e.omega_c;
    auto kernel = [g, dc, oc2](double w) {
        double const lin = 4 * w * dc + oc2;
        double const den = 4 * w * w * g * g + lin * lin;
        return std::array<double, 2>{4 * w * w * g / den,
                                     (8 * w * w * dc + 2 * w * oc2) / den};
    };
    DdiResponse r = average(e, ddi, opts, kernel);
    r.delta_beta = r.beta;
    r.delta_phi = r.phi;
    if (flip)
    {
        r.phi = -r.phi;
        r.delta_phi = -r.delta_phi;
    }
    return r;
}

//---------------------------------------------------------------------------//
}  // namespace rydeit
