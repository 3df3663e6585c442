//---------------------------------------------------------------------------//
// Copyright 2026 rydeit contributors.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file analysis.cpp
//---------------------------------------------------------------------------//
#include "rydeit/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "rydeit/analytic.hpp"
#include "rydeit/response.hpp"

namespace rydeit
{
//---------------------------------------------------------------------------//
char const* to_cstring(SweepAxis axis)
{
    return axis == SweepAxis::probe ? "probe" : "coupling";
}

EitParams at_two_photon_detuning(EitParams eit, SweepAxis axis, double delta)
{
    if (axis == SweepAxis::probe)
    {
        eit.delta_p = -eit.delta_c + delta;
    }
    else
    {
        eit.delta_c = -eit.delta_p + delta;
    }
    return eit;
}

std::vector<double> linspace(double start, double stop, std::size_t count)
{
    if (count < 2)
    {
        throw std::invalid_argument("linspace: need at least two points");
    }
    std::vector<double> result(count);
    double const step = (stop - start) / static_cast<double>(count - 1);
    for (std::size_t i = 0; i < count; ++i)
    {
        result[i] = start + step * static_cast<double>(i);
    }
    result.back() = stop;
    return result;
}

//---------------------------------------------------------------------------//
bool SweepResult::all_converged() const
{
    return std::all_of(status.begin(), status.end(), [](QuadStatus s) {
        return s == QuadStatus::converged;
    });
}

SweepResult sweep(EitParams const& eit,
                  DdiParams const& ddi,
                  SweepAxis axis,
                  std::vector<double> grid,
                  bool with_ddi,
                  ExpectOptions const& opts)
{
    eit.validate();
    if (grid.empty())
    {
        throw std::invalid_argument("sweep: empty grid");
    }
    for (std::size_t i = 1; i < grid.size(); ++i)
    {
        if (!(grid[i] > grid[i - 1]))
        {
            throw std::invalid_argument("sweep: grid must strictly increase");
        }
    }

    SweepResult r;
    r.axis = axis;
    r.with_ddi = with_ddi;
    r.eit = eit;
    r.ddi = ddi;
    std::size_t const n = grid.size();
    r.transmission.resize(n);
    r.phase.resize(n);
    r.beta.resize(n);
    r.error.resize(n, 0.0);
    r.status.resize(n, QuadStatus::converged);

    for (std::size_t i = 0; i < n; ++i)
    {
        EitParams const point = at_two_photon_detuning(eit, axis, grid[i]);
        if (with_ddi)
        {
            auto const d = beta_phi_ddi(point, ddi, opts);
            r.beta[i] = d.beta;
            r.phase[i] = d.phi;
            r.error[i] = d.err_beta;
            r.status[i] = d.status;
        }
        else
        {
            auto const b = beta0_phi0(point);
            r.beta[i] = b.beta;
            r.phase[i] = b.phi;
        }
        r.transmission[i] = std::exp(-r.beta[i]);
    }
    r.grid = std::move(grid);
    return r;
}

//---------------------------------------------------------------------------//
/*!
 * Three-point refinement of the sampled maximum.
 *
 * The parabola is fit to ln T (i.e. -beta) which is quadratic in delta near
 * the EIT peak, so the vertex is exact for a Gaussian peak shape.
 */
PeakEstimate find_peak(std::span<double const> grid,
                       std::span<double const> transmission)
{
    if (grid.size() != transmission.size() || grid.size() < 3)
    {
        throw std::invalid_argument("find_peak: need >= 3 matching samples");
    }
    auto const it = std::max_element(transmission.begin(), transmission.end());
    std::size_t const i = static_cast<std::size_t>(it - transmission.begin());
    if (i == 0 || i + 1 == grid.size())
    {
        throw PeakNotBracketed{};
    }

    double const x0 = grid[i - 1], x1 = grid[i], x2 = grid[i + 1];
    double const y0 = std::log(transmission[i - 1]);
    double const y1 = std::log(transmission[i]);
    double const y2 = std::log(transmission[i + 1]);

    PeakEstimate p;
    p.index = i;
    p.resolution = 0.5 * (x2 - x0);
    p.position = x1;

    // Vertex of the interpolating parabola (divided differences)
    double const d01 = (y1 - y0) / (x1 - x0);
    double const d12 = (y2 - y1) / (x2 - x1);
    double const curvature = (d12 - d01) / (x2 - x0);
    if (curvature < 0)
    {
        double const vertex = 0.5 * (x0 + x1) - d01 / (2 * curvature);
        p.position = std::clamp(vertex, x0, x2);
    }
    return p;
}

PeakEstimate find_peak(SweepResult const& s)
{
    return find_peak(s.grid, s.transmission);
}

//---------------------------------------------------------------------------//
SlopeFit fit_line(std::span<double const> x,
                  std::span<double const> y,
                  std::span<double const> weights)
{
    if (x.size() != y.size() || (!weights.empty() && weights.size() != x.size()))
    {
        throw std::invalid_argument("fit_line: size mismatch");
    }
    if (x.size() < 2)
    {
        throw std::invalid_argument("fit_line: need at least two points");
    }
    auto w = [&weights](std::size_t i) {
        return weights.empty() ? 1.0 : weights[i];
    };

    double sw = 0, sx = 0, sy = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
    {
        sw += w(i);
        sx += w(i) * x[i];
        sy += w(i) * y[i];
    }
    double const xm = sx / sw;
    double const ym = sy / sw;
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
    {
        sxx += w(i) * (x[i] - xm) * (x[i] - xm);
        sxy += w(i) * (x[i] - xm) * (y[i] - ym);
    }
    if (!(sxx > 0))
    {
        throw std::invalid_argument("fit_line: singular design (equal x)");
    }

    SlopeFit f;
    f.slope = sxy / sxx;
    f.intercept = ym - f.slope * xm;
    f.points = x.size();
    for (std::size_t i = 0; i < x.size(); ++i)
    {
        double const r = y[i] - (f.intercept + f.slope * x[i]);
        f.residual += w(i) * r * r;
    }
    return f;
}

//---------------------------------------------------------------------------//
ProbePowerSlopes slope_vs_probe_power(EitParams const& eit,
                                      DdiParams const& ddi,
                                      std::vector<double> const& powers,
                                      SlopeSource source,
                                      ExpectOptions const& opts)
{
    ProbePowerSlopes r;
    r.powers = powers;
    for (double p : powers)
    {
        if (!(p >= 0))
        {
            throw std::invalid_argument("probe powers must be non-negative");
        }
        EitParams point = eit;
        point.omega_p_in = std::sqrt(p);
        if (source == SlopeSource::quadrature)
        {
            auto const d = beta_phi_ddi(point, ddi, opts);
            r.beta.push_back(d.beta);
            r.phi.push_back(d.phi);
            r.converged = r.converged && d.converged();
        }
        else
        {
            auto const bare = beta0_phi0_approx(point);
            auto const excess = delta_beta_phi_corrected(point, ddi);
            r.beta.push_back(bare.beta + excess.delta_beta);
            r.phi.push_back(bare.phi + excess.delta_phi);
        }
    }
    r.beta_fit = fit_line(r.powers, r.beta);
    r.phi_fit = fit_line(r.powers, r.phi);
    return r;
}

//---------------------------------------------------------------------------//
/*!
 * Both closed-form slopes are proportional to sqrt|C6| n_atom epsilon, so
 * with the slopes a_i evaluated at epsilon = 1 the model y_i = epsilon a_i
 * is solved by weighted linear least squares.
 */
EpsilonFit fit_epsilon(std::span<SlopeObservation const> observations,
                       EitParams const& eit,
                       double c6,
                       double n_atom,
                       EpsilonFitOptions const& opts)
{
    if (observations.empty())
    {
        throw std::invalid_argument("fit_epsilon: no observations");
    }
    DdiParams const unit = DdiParams::from_microscopic(c6, n_atom, 1.0);
    double const delta = eit.delta();

    double saa = 0, say = 0, syy = 0;
    std::vector<double> a, y, w;
    for (auto const& obs : observations)
    {
        if (!(obs.weight >= 0))
        {
            throw std::invalid_argument("fit_epsilon: negative weight");
        }
        EitParams point = eit;
        point.delta_c = obs.delta_c;
        point.delta_p = -obs.delta_c + delta;
        auto const model = delta_beta_phi_corrected(point, unit);

        a.push_back(model.slope_beta);
        y.push_back(obs.slope_beta);
        w.push_back(obs.weight * opts.beta_weight);
        a.push_back(model.slope_phi);
        y.push_back(obs.slope_phi);
        w.push_back(obs.weight * opts.phi_weight);
    }
    for (std::size_t i = 0; i < a.size(); ++i)
    {
        saa += w[i] * a[i] * a[i];
        say += w[i] * a[i] * y[i];
        syy += w[i] * y[i] * y[i];
    }
    if (!(saa > 0) || syy == 0)
    {
        throw Unidentifiable("fit_epsilon: observations do not constrain "
                             "epsilon");
    }

    EpsilonFit f;
    f.epsilon = say / saa;
    if (f.epsilon < 0)
    {
        f.epsilon = 0;
        f.clamped = true;
    }
    std::size_t used = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
    {
        double const r = y[i] - f.epsilon * a[i];
        f.residual += w[i] * r * r;
        used += (w[i] > 0) ? 1 : 0;
    }
    f.equations = used;
    if (used > 1)
    {
        double const variance = f.residual / static_cast<double>(used - 1);
        f.std_error = std::sqrt(variance / saa);
    }
    f.strength = f.epsilon * unit.sqrt_c6_n_eps();
    return f;
}

//---------------------------------------------------------------------------//
RegimeReport regime_report(EitParams const& eit, DdiParams const& ddi)
{
    auto const s = derive_scales(eit, ddi);
    RegimeReport r;
    r.blockade_ratio = s.blockade_ratio;
    r.r_a = s.r_a;
    r.r_b = s.r_b;
    r.omega_a = s.omega_a;
    r.eit_linewidth = s.eit_linewidth;
    r.linewidth_ratio = s.linewidth_ratio;
    r.validity_beta = std::pow(s.linewidth_ratio, 1.5);
    r.validity_phi = std::sqrt(s.linewidth_ratio);
    r.beta_formula_valid = r.validity_beta < beta_validity_threshold;
    r.phi_formula_valid = r.validity_phi < phi_validity_threshold;
    r.perturbative_probe = eit.is_perturbative();
    return r;
}

//---------------------------------------------------------------------------//
}  // namespace rydeit
