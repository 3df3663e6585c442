//---------------------------------------------------------------------------//
// Copyright 2026 rydeit contributors.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file acceptance.cpp
//! Prints one PASS/FAIL line per acceptance criterion.
//---------------------------------------------------------------------------//
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "rydeit/analysis.hpp"
#include "rydeit/analytic.hpp"
#include "rydeit/ddi.hpp"
#include "rydeit/nnd.hpp"
#include "rydeit/params.hpp"
#include "rydeit/response.hpp"
#include "rydeit/table.hpp"

namespace rydeit
{
namespace
{
//---------------------------------------------------------------------------//
struct Outcome
{
    bool pass{true};
    std::ostringstream detail;

    void require(bool cond, std::string const& what)
    {
        if (!cond)
        {
            pass = false;
            detail << " [failed: " << what << "]";
        }
    }
};

struct Criterion
{
    int number;
    char const* name;
    double budget_s;  //!< 0 for no runtime limit
    std::function<void(Outcome&)> check;
};

double rel_dev(double actual, double expected)
{
    return std::fabs(actual / expected - 1);
}

EitParams drive(double omega_p,
                double omega_c = 1.0,
                double delta_c = 0.0,
                double gamma0 = 0.0)
{
    EitParams e;
    e.alpha = 81;
    e.omega_c = omega_c;
    e.omega_p_in = omega_p;
    e.delta_c = delta_c;
    e.delta_p = -delta_c;
    e.gamma0 = gamma0;
    return e;
}

DdiParams const strength = DdiParams::from_combined(0.35);

//---------------------------------------------------------------------------//
void measure(Outcome& o)
{
    double worst = 0;
    for (int k = 0; k <= 28; ++k)
    {
        double const wa = std::pow(10.0, -6 + k / 4.0);
        auto const r = expect([](double) { return 1.0; }, NndMeasure{wa, {}});
        worst = std::max(worst, std::fabs(r.value[0] - 1));
        o.require(r.converged(), "quadrature status");
    }
    o.require(worst < 1e-8, "normalization");

    double const wa = 3.5e-5;
    auto w = sample_shift(1000000, 20260101, wa);
    std::sort(w.begin(), w.end());
    double const n = static_cast<double>(w.size());
    double ks = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
    {
        double const c = cdf_omega(w[i], wa);
        ks = std::max({ks, std::fabs(c - i / n), std::fabs((i + 1) / n - c)});
    }
    o.require(ks < 0.01, "KS distance");
    o.detail << "max |E[1]-1| = " << worst << ", KS = " << ks;
}

//---------------------------------------------------------------------------//
void analytic_vs_quadrature(Outcome& o)
{
    auto const powers = linspace(0.005, 0.04, 8);
    auto dev_at = [](double oc, double p2) {
        auto const e = drive(std::sqrt(p2), oc);
        auto const q = beta_phi_ddi(e, strength);
        auto const a = delta_beta_phi_ideal(e, strength);
        return std::array<double, 3>{rel_dev(a.delta_beta, q.delta_beta),
                                     rel_dev(a.delta_phi, q.delta_phi),
                                     q.converged() ? 1.0 : 0.0};
    };

    double worst = 0;
    for (double oc : {1.4, 2.0})
    {
        for (double p2 : powers)
        {
            auto const d = dev_at(oc, p2);
            worst = std::max({worst, d[0], d[1]});
            o.require(d[2] == 1.0, "quadrature status");
        }
    }
    o.require(worst < 0.1, "agreement within 10% at omega_c 1.4 and 2.0");

    double prev = -1;
    bool monotone = true;
    double last = 0;
    for (double p2 : powers)
    {
        last = dev_at(1.0, p2)[1];
        monotone = monotone && last > prev;
        prev = last;
    }
    double const dev2 = dev_at(2.0, 0.04)[1];
    o.require(monotone, "phase deviation monotone at omega_c 1.0");
    o.require(last > dev2, "omega_c 1.0 deviation exceeds omega_c 2.0");

    // Frozen high-precision oracle at omega_c 1, omega_p_in^2 0.01
    auto const q = beta_phi_ddi(drive(0.1), strength);
    o.require(rel_dev(q.delta_beta, 0.75269646631181) < 1e-8
                  && rel_dev(q.delta_phi, 0.372128725427858) < 1e-8,
              "oracle values");
    o.detail << "worst dev (1.4, 2.0) = " << worst
             << ", phase dev at 0.04: omega_c 1.0 " << last
             << " vs 2.0 " << dev2;
}

//---------------------------------------------------------------------------//
void asymmetry_identity(Outcome& o)
{
    double const target = std::sqrt(5.0) + 2;
    double const analytic
        = delta_beta_phi_ideal(drive(0.1, 1, -1), strength).delta_beta
          / delta_beta_phi_ideal(drive(0.1, 1, 1), strength).delta_beta;
    o.require(rel_dev(analytic, target) < 1e-14, "analytic ratio");

    double prev = 1;
    double dev = 1;
    for (double p2 : {0.04, 0.02, 0.01, 0.005})
    {
        double const op = std::sqrt(p2);
        double const ratio
            = beta_phi_ddi(drive(op, 1, -1), strength).delta_beta
              / beta_phi_ddi(drive(op, 1, 1), strength).delta_beta;
        dev = rel_dev(ratio, target);
        o.require(dev < prev, "quadrature ratio approaches identity");
        prev = dev;
    }
    o.require(dev < 0.05, "quadrature ratio within 5% at 0.005");
    o.detail << "analytic dev = " << rel_dev(analytic, target)
             << ", quadrature dev at 0.005 = " << dev;
}

//---------------------------------------------------------------------------//
void spectral_phenomena(Outcome& o)
{
    auto const grid = linspace(-0.5, 0.5, 401);
    std::vector<double> const probes{0.05, 0.1, 0.2};
    struct Point
    {
        double peak_t, peak_pos, phase0;
    };
    auto measure_at = [&](double op, double dc) {
        auto const e = drive(op, 1.0, dc);
        auto const s = sweep(e, strength, SweepAxis::probe, grid, true);
        o.require(s.all_converged(), "sweep converged");
        auto const bare = sweep(e, strength, SweepAxis::probe, grid, false);
        double const t
            = *std::max_element(s.transmission.begin(), s.transmission.end());
        double const pos = find_peak(s).position - find_peak(bare).position;
        double const phi0
            = beta_phi_ddi(at_two_photon_detuning(e, SweepAxis::probe, 0),
                           strength)
                  .phi;
        return Point{t, pos, phi0};
    };

    std::vector<Point> plus, minus;
    for (double op : probes)
    {
        plus.push_back(measure_at(op, 1.0));
        minus.push_back(measure_at(op, -1.0));
    }
    for (std::size_t i = 0; i < probes.size(); ++i)
    {
        if (i > 0)
        {
            o.require(plus[i].peak_t < plus[i - 1].peak_t
                          && minus[i].peak_t < minus[i - 1].peak_t,
                      "peak transmission decreasing in probe");
            o.require(plus[i].phase0 > plus[i - 1].phase0,
                      "resonant phase increasing in probe");
            o.require(std::fabs(minus[i].peak_pos)
                          > std::fabs(minus[i - 1].peak_pos),
                      "negative-detuning shift growing");
        }
        o.require(plus[i].peak_t > minus[i].peak_t,
                  "peak transmission larger at positive detuning");
        o.require(plus[i].phase0 > minus[i].phase0,
                  "resonant phase larger at positive detuning");
        o.require(std::fabs(minus[i].peak_pos) > std::fabs(plus[i].peak_pos),
                  "shift larger at negative detuning");
        o.require(minus[i].peak_pos < 0, "negative-detuning shift below zero");
    }
    o.detail << "peak T(+1/-1) at 0.2: " << plus.back().peak_t << "/"
             << minus.back().peak_t << ", shifts(-1): " << minus[0].peak_pos
             << " " << minus[1].peak_pos << " " << minus[2].peak_pos;
}

//---------------------------------------------------------------------------//
void peak_shift_formulas(Outcome& o)
{
    auto const search = linspace(-0.5, 0.5, 401);
    auto const xs = linspace(-2, 2, 21);
    int checked = 0;
    double worst = 0;

    auto numerical = [&](EitParams const& e, SweepAxis axis) {
        auto const s = sweep(e, strength, axis, search, true);
        auto const b = sweep(e, strength, axis, search, false);
        o.require(s.all_converged(), "sweep converged");
        return find_peak(s).position - find_peak(b).position;
    };

    for (double oc : {1.0, 1.4, 2.0})
    {
        for (double x : xs)
        {
            auto const probe_e = drive(0.2, oc, x);
            double const f = peak_shift_probe_sweep(probe_e, strength);
            if (std::fabs(f) / eit_linewidth(1, oc, x) < 0.05)
            {
                double const d
                    = rel_dev(numerical(probe_e, SweepAxis::probe), f);
                worst = std::max(worst, d);
                ++checked;
            }

            EitParams coupling_e = drive(0.2, oc, -x);
            coupling_e.delta_p = x;
            double const g = peak_shift_coupling_sweep(coupling_e, strength);
            if (std::fabs(g) / eit_linewidth(1, oc, -x) < 0.05)
            {
                double const d
                    = rel_dev(numerical(coupling_e, SweepAxis::coupling), g);
                worst = std::max(worst, d);
                ++checked;
            }
        }
    }
    o.require(checked > 0, "points inside the validity region");
    o.require(worst < 0.1, "formula within 10% of numerical peak");

    double const sp = numerical(drive(0.2), SweepAxis::probe);
    double const sc = numerical(drive(0.2), SweepAxis::coupling);
    o.require(rel_dev(sp, -0.0186) < 0.1, "probe-sweep spot value");
    o.require(rel_dev(sc, -0.0139) < 0.1, "coupling-sweep spot value");
    o.detail << checked << " points, worst dev = " << worst
             << ", spot shifts = " << sp << " / " << sc;
}

//---------------------------------------------------------------------------//
void experiment_simulation(Outcome& o)
{
    std::vector<double> const powers = linspace(0.005, 0.04, 8);
    std::vector<double> const dcs{-2, -1, 0, 1, 2};
    std::vector<double> qb, qp, ab, ap;
    double rms_beta = 0, rms_phi = 0, max_beta = 0, max_phi = 0;
    double worst_icpt = 0;
    for (double dc : dcs)
    {
        EitParams const e = drive(0.1, 1.0, dc, 0.012);
        auto const q = slope_vs_probe_power(e, strength, powers,
                                            SlopeSource::quadrature);
        auto const a = slope_vs_probe_power(e, strength, powers,
                                            SlopeSource::analytic);
        o.require(q.converged, "quadrature converged");

        double const n = static_cast<double>(powers.size());
        rms_beta = std::max(rms_beta, std::sqrt(q.beta_fit.residual / n));
        rms_phi = std::max(rms_phi, std::sqrt(q.phi_fit.residual / n));
        for (std::size_t i = 0; i < powers.size(); ++i)
        {
            max_beta = std::max(max_beta, std::fabs(q.beta[i]));
            max_phi = std::max(max_phi, std::fabs(q.phi[i]));
        }

        auto const approx = beta0_phi0_approx(e);
        o.require(rel_dev(a.beta_fit.intercept, approx.beta) < 0.03,
                  "attenuation intercept");
        o.require(a.beta_fit.intercept > 0, "nonzero attenuation intercept");
        if (dc != 0)
        {
            o.require(rel_dev(a.phi_fit.intercept, approx.phi) < 0.03,
                      "phase intercept");
            o.require(a.phi_fit.intercept != 0, "nonzero phase intercept");
        }
        if (dc == 0)
        {
            worst_icpt = rel_dev(q.beta_fit.intercept, approx.beta);
            o.require(worst_icpt < 0.03, "quadrature intercept at resonance");
        }
        qb.push_back(q.beta_fit.slope);
        qp.push_back(q.phi_fit.slope);
        ab.push_back(a.beta_fit.slope);
        ap.push_back(a.phi_fit.slope);
    }
    // Straight lines: rms residual against the magnitude of the whole family
    double const worst_lin = std::max(rms_beta / max_beta, rms_phi / max_phi);
    o.require(worst_lin < 0.01, "linear in probe power");

    for (auto const* s : {&qb, &ab})
    {
        o.require(s->front() > s->back(), "attenuation slope trend");
        o.require((*s)[0] > (*s)[4] && (*s)[1] > (*s)[3],
                  "attenuation slope asymmetry");
    }
    for (auto const* s : {&qp, &ap})
    {
        o.require(s->front() < s->back(), "phase slope trend");
        o.require((*s)[0] < (*s)[4] && (*s)[1] < (*s)[3],
                  "phase slope asymmetry");
    }
    auto order = [](std::vector<double> const& v) {
        std::vector<std::size_t> idx(v.size());
        for (std::size_t i = 0; i < idx.size(); ++i)
            idx[i] = i;
        std::sort(idx.begin(), idx.end(), [&v](auto a, auto b) {
            return v[a] < v[b];
        });
        return idx;
    };
    o.require(order(qb) == order(ab), "attenuation slope ordering");
    o.require(order(qp) == order(ap), "phase slope ordering");
    o.detail << "max rel rms = " << worst_lin
             << ", resonant intercept dev = " << worst_icpt
             << ", slope_beta(-2..2) = " << qb[0] << ".." << qb[4]
             << ", slope_phi(-2..2) = " << qp[0] << ".." << qp[4];
}

//---------------------------------------------------------------------------//
void epsilon_round_trip(Outcome& o)
{
    constexpr double c6 = -260.0 / 6.0;
    constexpr double n_atom = 0.05;
    EitParams const tmpl = drive(0.1, 1.0, 0.0, 0.012);

    auto const t = parse_csv(read_file(RYDEIT_TEST_DATA_DIR "/slopes_eps043.csv"));
    auto const dc = t.column("delta_c");
    auto const sb = t.column("slope_beta");
    auto const sp = t.column("slope_phi");
    std::vector<SlopeObservation> obs;
    for (std::size_t i = 0; i < dc.size(); ++i)
    {
        obs.push_back({dc[i], sb[i], sp[i], 1.0});
    }
    double const exact = fit_epsilon(obs, tmpl, c6, n_atom).epsilon;
    o.require(std::fabs(exact - 0.43) < 1e-10, "noiseless recovery");

    std::mt19937_64 rng(4242);
    std::normal_distribution<double> noise(0.0, 0.05);
    std::vector<double> fits;
    for (int trial = 0; trial < 100; ++trial)
    {
        auto noisy = obs;
        for (auto& ob : noisy)
        {
            ob.slope_beta *= 1 + noise(rng);
            ob.slope_phi *= 1 + noise(rng);
        }
        fits.push_back(fit_epsilon(noisy, tmpl, c6, n_atom).epsilon);
    }
    std::nth_element(fits.begin(), fits.begin() + 50, fits.end());
    double const median = fits[50];
    o.require(rel_dev(median, 0.43) < 0.05, "noisy median");
    o.detail << "noiseless error = " << std::fabs(exact - 0.43)
             << ", noisy median = " << median;
}

//---------------------------------------------------------------------------//
void expansion_coefficients(Outcome& o)
{
    std::mt19937_64 rng(808);
    std::uniform_real_distribution<double> shift(0, 3), det(-2, 2),
        coupling(0.5, 2);
    double const h = 1e-4;
    double worst = 0;
    bool identities = true;
    for (int i = 0; i < 1000; ++i)
    {
        double const w = shift(rng);
        double const dc = det(rng);
        double const oc = coupling(rng);
        auto const s = series_coeffs(w, dc, oc);
        auto at = [&](double g0, double delta) {
            return rho31(-dc, dc + w + delta, g0, oc);
        };
        // Richardson-extrapolated central differences
        auto diff = [&](double dg, double dd) {
            auto central = [&](double k) {
                return (at(k * dg, k * dd) - at(-k * dg, -k * dd)) / (2 * k);
            };
            return (4.0 * central(h / 2) - central(h)) / 3.0;
        };
        Complex const d_g0 = diff(1, 0);
        Complex const d_delta = diff(0, 1);
        worst = std::max({worst,
                          rel_dev(d_g0.imag(), s.a1),
                          rel_dev(d_delta.imag(), s.a2),
                          rel_dev(d_g0.real(), s.b1),
                          rel_dev(d_delta.real(), s.b2)});
        identities = identities && s.b1 == -s.a2 && s.a1 == s.b2;
    }
    o.require(worst < 1e-6, "finite differences");
    o.require(identities, "coefficient identities");
    o.detail << "worst relative dev = " << worst;
}

//---------------------------------------------------------------------------//
void passivity(Outcome& o)
{
    std::mt19937_64 rng(909);
    auto uni = [&rng](double a, double b) {
        return std::uniform_real_distribution<double>(a, b)(rng);
    };
    int negative = 0;
    int unconverged = 0;
    for (int i = 0; i < 10000; ++i)
    {
        EitParams e;
        e.alpha = uni(0, 200);
        e.omega_c = uni(0.1, 5);
        e.omega_p_in = uni(0, 0.3);
        e.delta_p = uni(-5, 5);
        e.delta_c = uni(-5, 5);
        e.gamma0 = i % 4 == 0 ? 0.0 : std::pow(10.0, uni(-6, 0));
        if (rho31(e.delta_p, e.delta_c, e.gamma0, e.omega_c).imag() < 0)
            ++negative;
        auto const ddi = DdiParams::from_combined(uni(0, 2),
                                                  i % 2 == 0 ? -1 : 1);
        auto const r = beta_phi_ddi(e, ddi);
        if (r.beta < 0)
            ++negative;
        if (!r.converged())
            ++unconverged;
    }
    o.require(negative == 0, "non-negative attenuation");
    o.detail << "negative cases = " << negative
             << ", unconverged averages = " << unconverged;
}

//---------------------------------------------------------------------------//
void regime_numbers(Outcome& o)
{
    // 2 pi x 260 MHz um^6 with Gamma = 2 pi x 6 MHz; omega_p 1.2 MHz
    auto const ddi = DdiParams::from_microscopic(-260.0 / 6.0, 0.05, 1.0);
    auto const s = derive_scales(drive(0.2, 1.0), ddi);
    double const rb3 = std::pow(s.r_b_um(), 3);
    double const ratio = s.blockade_ratio_value();
    o.require(rel_dev(rb3, 9.3) < 0.02, "blockade radius");
    o.require(rel_dev(ratio, 0.078) < 0.02, "blockade ratio");
    o.detail << "r_B^3 = " << rb3 << " um^3, ratio = " << ratio;
}

//---------------------------------------------------------------------------//
}  // namespace
}  // namespace rydeit

int main()
{
    using namespace rydeit;
    std::vector<Criterion> const criteria{
        {1, "shift measure normalization and sampler", 5, measure},
        {2, "closed form vs quadrature", 30, analytic_vs_quadrature},
        {3, "detuning asymmetry identity", 0, asymmetry_identity},
        {4, "spectral phenomena", 120, spectral_phenomena},
        {5, "peak shift formulas", 0, peak_shift_formulas},
        {6, "probe-power simulation", 0, experiment_simulation},
        {7, "epsilon round trip", 0, epsilon_round_trip},
        {8, "expansion coefficients", 0, expansion_coefficients},
        {9, "passivity", 0, passivity},
        {10, "regime numbers", 0, regime_numbers},
    };

    int failures = 0;
    for (auto const& c : criteria)
    {
        Outcome o;
        auto const start = std::chrono::steady_clock::now();
        try
        {
            c.check(o);
        }
        catch (std::exception const& e)
        {
            o.require(false, std::string("exception: ") + e.what());
        }
        double const secs = std::chrono::duration<double>(
                                std::chrono::steady_clock::now() - start)
                                .count();
        if (c.budget_s > 0)
        {
            o.require(secs < c.budget_s, "runtime budget");
        }
        failures += o.pass ? 0 : 1;
        std::printf("%s %2d %s (%.2f s): %s\n",
                    o.pass ? "PASS" : "FAIL",
                    c.number,
                    c.name,
                    secs,
                    o.detail.str().c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n",
                static_cast<int>(criteria.size()) - failures,
                criteria.size());
    return failures == 0 ? 0 : 1;
}
