//---------------------------------------------------------------------------//
// Copyright 2026 rydeit contributors.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file params.cpp
//---------------------------------------------------------------------------//
#include "rydeit/params.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace rydeit
{
namespace
{
void require(bool cond, char const* what)
{
    if (!cond)
    {
        throw std::invalid_argument(what);
    }
}
}  // namespace

//---------------------------------------------------------------------------//
void EitParams::validate() const
{
    require(gamma > 0, "gamma must be positive");
    require(omega_c > 0, "omega_c must be positive");
    require(omega_p_in >= 0, "omega_p_in must be non-negative");
    require(gamma0 >= 0, "gamma0 must be non-negative");
    require(alpha >= 0, "alpha must be non-negative");
    require(gamma2 >= 0, "gamma2 must be non-negative");
    require(std::isfinite(delta_p) && std::isfinite(delta_c),
            "detunings must be finite");
}

//---------------------------------------------------------------------------//
DdiParams DdiParams::from_microscopic(double c6, double n_atom, double epsilon)
{
    require(c6 != 0 && std::isfinite(c6), "c6 must be finite and nonzero");
    require(n_atom > 0, "n_atom must be positive");
    require(epsilon > 0, "epsilon must be positive");
    DdiParams result;
    result.c6_sign_ = c6 < 0 ? -1 : 1;
    result.micro_ = MicroscopicDdi{std::fabs(c6), n_atom, epsilon};
    double const dens = 4 * std::numbers::pi / 3 * n_atom * epsilon;
    result.combined_ = std::fabs(c6) * dens * dens;
    return result;
}

DdiParams DdiParams::from_combined(double strength, int c6_sign)
{
    require(strength >= 0 && std::isfinite(strength),
            "combined strength must be non-negative");
    require(c6_sign == 1 || c6_sign == -1, "c6 sign must be +1 or -1");
    DdiParams result;
    result.c6_sign_ = c6_sign;
    result.combined_ = strength;
    return result;
}

double DdiParams::combined_strength() const
{
    return combined_;
}

double DdiParams::sqrt_c6_n_eps() const
{
    if (micro_)
    {
        return std::sqrt(micro_->c6_abs) * micro_->n_atom * micro_->epsilon;
    }
    return 3 * std::sqrt(combined_) / (4 * std::numbers::pi);
}

MicroscopicDdi const& DdiParams::microscopic() const
{
    if (!micro_)
    {
        throw InsufficientParameters{};
    }
    return *micro_;
}

DdiParams DdiParams::with_epsilon(double epsilon) const
{
    auto const& m = this->microscopic();
    return from_microscopic(c6_sign_ * m.c6_abs, m.n_atom, epsilon);
}

//---------------------------------------------------------------------------//
double DerivedScales::r_a_um() const
{
    if (!r_a)
        throw InsufficientParameters{};
    return *r_a;
}

double DerivedScales::r_b_um() const
{
    if (!r_b)
        throw InsufficientParameters{};
    return *r_b;
}

double DerivedScales::blockade_ratio_value() const
{
    if (!blockade_ratio)
        throw InsufficientParameters{};
    return *blockade_ratio;
}

//---------------------------------------------------------------------------//
double detuning_width(double gamma, double detuning)
{
    return std::hypot(gamma, 2 * detuning);
}

double eit_linewidth(double gamma, double omega_c, double delta_c)
{
    double const g2 = gamma * gamma;
    double const d2 = delta_c * delta_c;
    return omega_c * omega_c * std::sqrt(g2 + 8 * d2) / (g2 + 4 * d2);
}

double s_ddi(EitParams const& eit, DdiParams const& ddi)
{
    constexpr double pi2 = std::numbers::pi * std::numbers::pi;
    return pi2 * eit.alpha * eit.gamma * ddi.sqrt_c6_n_eps()
           / (3 * std::pow(eit.omega_c, 3));
}

double omega_a(EitParams const& eit, DdiParams const& ddi)
{
    double const rho22 = (eit.omega_p_in * eit.omega_p_in)
                         / (eit.omega_c * eit.omega_c);
    return ddi.combined_strength() * rho22 * rho22;
}

//---------------------------------------------------------------------------//
/*!
 * Compute every derived scale.
 *
 * The Rydberg population entering the polariton density uses the
 * near-resonance approximation omega_p_in^2 / omega_c^2.
 */
DerivedScales derive_scales(EitParams const& eit, DdiParams const& ddi)
{
    eit.validate();
    DerivedScales s;
    s.omega_a = omega_a(eit, ddi);
    s.w_c = detuning_width(eit.gamma, eit.delta_c);
    s.w_p = detuning_width(eit.gamma, eit.delta_p);
    s.eit_linewidth = eit_linewidth(eit.gamma, eit.omega_c, eit.delta_c);
    s.s_ddi = s_ddi(eit, ddi);
    s.linewidth_ratio = s.omega_a / s.eit_linewidth;

    if (ddi.has_microscopic())
    {
        auto const& m = ddi.microscopic();
        double const rho22 = (eit.omega_p_in * eit.omega_p_in)
                             / (eit.omega_c * eit.omega_c);
        double const n_r = m.n_atom * m.epsilon * rho22;
        double const rb3 = std::sqrt(2 * m.c6_abs * eit.gamma
                                     / (eit.omega_c * eit.omega_c));
        s.r_b = std::cbrt(rb3);
        if (n_r > 0)
        {
            double const ra3 = 3 / (4 * std::numbers::pi * n_r);
            s.r_a = std::cbrt(ra3);
            s.blockade_ratio = rb3 / ra3;
        }
        else
        {
            s.r_a = std::numeric_limits<double>::infinity();
            s.blockade_ratio = 0.0;
        }
    }
    return s;
}

//---------------------------------------------------------------------------//
}  // namespace rydeit
