//---------------------------------------------------------------------------//
// Copyright 2026 rydeit contributors.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file rydeit/analysis.hpp
//! Spectra, peak finding, slope regression and ensemble-factor fitting.
//---------------------------------------------------------------------------//
#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "ddi.hpp"
#include "nnd.hpp"
#include "params.hpp"

namespace rydeit
{
//---------------------------------------------------------------------------//
enum class SweepAxis
{
    probe,     //!< delta_p = -delta_c + delta, delta_c fixed
    coupling,  //!< delta_c = -delta_p + delta, delta_p fixed
};

char const* to_cstring(SweepAxis axis);

//! Drive parameters at two-photon detuning \c delta along \c axis
EitParams at_two_photon_detuning(EitParams eit, SweepAxis axis, double delta);

//---------------------------------------------------------------------------//
//! Sampled spectrum over a two-photon detuning grid
struct SweepResult
{
    SweepAxis axis{SweepAxis::probe};
    std::vector<double> grid;
    std::vector<double> transmission;
    std::vector<double> phase;
    std::vector<double> beta;
    std::vector<double> error;  //!< quadrature error of beta (0 without DDI)
    std::vector<QuadStatus> status;
    bool with_ddi{false};
    EitParams eit;
    DdiParams ddi;

    bool all_converged() const;
};

SweepResult sweep(EitParams const& eit,
                  DdiParams const& ddi,
                  SweepAxis axis,
                  std::vector<double> grid,
                  bool with_ddi,
                  ExpectOptions const& opts = {});

// count >= 2 evenly spaced points including both ends
std::vector<double> linspace(double start, double stop, std::size_t count);

//---------------------------------------------------------------------------//
class PeakNotBracketed : public std::runtime_error
{
  public:
    PeakNotBracketed() : std::runtime_error("peak not bracketed") {}
};

struct PeakEstimate
{
    double position{0};
    double resolution{0};  //!< local grid spacing
    std::size_t index{0};  //!< grid index of the sampled maximum
};

// Transmission maximum refined by a parabola through ln T at the sampled
// maximum and its two neighbors
PeakEstimate find_peak(std::span<double const> grid,
                       std::span<double const> transmission);
PeakEstimate find_peak(SweepResult const& sweep);

//---------------------------------------------------------------------------//
struct SlopeFit
{
    double slope{0};
    double intercept{0};
    double residual{0};  //!< weighted residual sum of squares
    std::size_t points{0};
};

// Weighted ordinary least squares; empty weights means uniform
SlopeFit fit_line(std::span<double const> x,
                  std::span<double const> y,
                  std::span<double const> weights = {});

enum class SlopeSource
{
    quadrature,
    analytic,
};

struct ProbePowerSlopes
{
    std::vector<double> powers;  //!< omega_p_in^2
    std::vector<double> beta;
    std::vector<double> phi;
    SlopeFit beta_fit;
    SlopeFit phi_fit;
    bool converged{true};
};

// beta and phi against omega_p_in^2. The analytic source adds the corrected
// DDI excess to the leading-order interaction-free values.
ProbePowerSlopes slope_vs_probe_power(EitParams const& eit,
                                      DdiParams const& ddi,
                                      std::vector<double> const& powers,
                                      SlopeSource source,
                                      ExpectOptions const& opts = {});

//---------------------------------------------------------------------------//
struct SlopeObservation
{
    double delta_c{0};
    double slope_beta{0};
    double slope_phi{0};
    double weight{1};
};

struct EpsilonFitOptions
{
    double beta_weight{1};
    double phi_weight{1};
};

struct EpsilonFit
{
    double epsilon{0};
    double std_error{0};
    double strength{0};  //!< sqrt|C6| n_atom epsilon
    double residual{0};  //!< weighted residual sum of squares
    std::size_t equations{0};
    bool clamped{false};  //!< unconstrained solution was negative
};

class Unidentifiable : public std::runtime_error
{
  public:
    explicit Unidentifiable(char const* what) : std::runtime_error(what) {}
};

// Linear least squares for epsilon against closed-form slopes. The drive
// template supplies omega_c, alpha, gamma0, gamma and the two-photon
// detuning; each observation sets the coupling detuning.
EpsilonFit fit_epsilon(std::span<SlopeObservation const> observations,
                       EitParams const& eit,
                       double c6,
                       double n_atom,
                       EpsilonFitOptions const& opts = {});

//---------------------------------------------------------------------------//
struct RegimeReport
{
    std::optional<double> blockade_ratio;
    std::optional<double> r_a;
    std::optional<double> r_b;
    double omega_a{0};
    double eit_linewidth{0};
    double linewidth_ratio{0};
    double validity_beta{0};  //!< linewidth_ratio^{3/2}
    double validity_phi{0};   //!< linewidth_ratio^{1/2}
    bool beta_formula_valid{false};
    bool phi_formula_valid{false};
    bool perturbative_probe{false};
};

inline constexpr double beta_validity_threshold = 0.05;
inline constexpr double phi_validity_threshold = 0.1;

RegimeReport regime_report(EitParams const& eit, DdiParams const& ddi);

//---------------------------------------------------------------------------//
}  // namespace rydeit
