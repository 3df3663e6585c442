//---------------------------------------------------------------------------//
// Copyright 2026 rydeit contributors.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file rydeit/params.hpp
//! Drive/medium parameters and the derived interaction scales.
//---------------------------------------------------------------------------//
#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace rydeit
{
//---------------------------------------------------------------------------//
/*!
 * Ladder EIT drive and medium state.
 *
 * Every frequency is expressed in the same unit as \c gamma (the decay rate
 * of the intermediate state). The library works with gamma = 1 by default;
 * physical units are converted at the CLI boundary only.
 */
struct EitParams
{
    double gamma{1.0};       //!< Decay rate of the intermediate state
    double omega_c{1.0};     //!< Coupling Rabi frequency
    double omega_p_in{0.0};  //!< Input probe Rabi frequency
    double delta_p{0.0};     //!< Probe one-photon detuning
    double delta_c{0.0};     //!< Coupling one-photon detuning
    double gamma0{0.0};      //!< Ground-Rydberg decoherence rate
    double alpha{0.0};       //!< Optical depth
    double gamma2{0.0};      //!< Rydberg decay rate (kept at zero by the model)

    //! Two-photon detuning
    double delta() const { return delta_p + delta_c; }

    //! Throws std::invalid_argument on out-of-domain values
    void validate() const;

    //! Whether the probe can be treated to lowest order
    bool is_perturbative() const
    {
        return omega_p_in < omega_c && omega_p_in < gamma;
    }
};

//---------------------------------------------------------------------------//
//! Individually known van der Waals coefficient, density, ensemble factor
struct MicroscopicDdi
{
    double c6_abs{0};   //!< |C6| [frequency unit * um^6]
    double n_atom{0};   //!< Atomic density [um^-3]
    double epsilon{1};  //!< Ensemble-average factor
};

//---------------------------------------------------------------------------//
/*!
 * Dipole-dipole interaction strength.
 *
 * Either the microscopic triple (|C6|, n_atom, epsilon) or only the combined
 * strength |C6| [(4 pi / 3) n_atom epsilon]^2 is authoritative. The sign of
 * C6 is carried separately and defaults to negative.
 */
class DdiParams
{
  public:
    DdiParams() = default;

    static DdiParams from_microscopic(double c6, double n_atom, double epsilon);
    static DdiParams from_combined(double strength, int c6_sign = -1);

    //! +1 or -1
    int c6_sign() const { return c6_sign_; }

    //! |C6| [(4 pi/3) n_atom epsilon]^2
    double combined_strength() const;

    //! sqrt|C6| * n_atom * epsilon, available from either representation
    double sqrt_c6_n_eps() const;

    bool has_microscopic() const { return micro_.has_value(); }
    MicroscopicDdi const& microscopic() const;

    //! Copy with a different ensemble factor (requires microscopic input)
    DdiParams with_epsilon(double epsilon) const;

  private:
    int c6_sign_{-1};
    std::optional<MicroscopicDdi> micro_;
    double combined_{0};
};

//---------------------------------------------------------------------------//
//! Thrown when a length-scale output needs |C6|, n_atom and epsilon
class InsufficientParameters : public std::logic_error
{
  public:
    InsufficientParameters()
        : std::logic_error("insufficient parameters for length-scale output")
    {
    }
};

//---------------------------------------------------------------------------//
/*!
 * Scales shared by every other module.
 *
 * Length scales are in um and only exist when the microscopic DDI triple is
 * known; the accessors throw InsufficientParameters otherwise.
 */
struct DerivedScales
{
    std::optional<double> r_a;             //!< Half mean polariton spacing
    double omega_a{0};                     //!< |C6| / r_a^6
    std::optional<double> r_b;             //!< Blockade radius
    double w_c{0};                         //!< sqrt(G^2 + 4 Dc^2)
    double w_p{0};                         //!< sqrt(G^2 + 4 Dp^2)
    double eit_linewidth{0};
    double s_ddi{0};
    std::optional<double> blockade_ratio;  //!< r_B^3 / r_a^3
    double linewidth_ratio{0};             //!< omega_a / eit_linewidth

    double r_a_um() const;
    double r_b_um() const;
    double blockade_ratio_value() const;
};

//---------------------------------------------------------------------------//
// FREE FUNCTIONS
//---------------------------------------------------------------------------//

// sqrt(gamma^2 + 4 detuning^2)
double detuning_width(double gamma, double detuning);

// EIT linewidth at two-photon resonance for a given coupling detuning
double eit_linewidth(double gamma, double omega_c, double delta_c);

// Composite prefactor of the closed-form DDI attenuation and phase
double s_ddi(EitParams const& eit, DdiParams const& ddi);

// Frequency scale of the shift distribution with rho22 ~ (omega_p_in / omega_c)^2
double omega_a(EitParams const& eit, DdiParams const& ddi);

DerivedScales derive_scales(EitParams const& eit, DdiParams const& ddi);

//---------------------------------------------------------------------------//
}  // namespace rydeit
