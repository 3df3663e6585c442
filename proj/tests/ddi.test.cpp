//---------------------------------------------------------------------------//
// Copyright 2026 rydeit contributors.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file ddi.test.cpp
//---------------------------------------------------------------------------//
#include "rydeit/ddi.hpp"

#include <cmath>
#include <numeric>

#include "rydeit/analytic.hpp"
#include "test_util.hpp"

namespace rydeit
{
namespace test
{
namespace
{
EitParams ref_drive(double omega_p, double omega_c = 1.0, double delta_c = 0.0)
{
    EitParams e;
    e.alpha = 81;
    e.omega_c = omega_c;
    e.omega_p_in = omega_p;
    e.delta_c = delta_c;
    e.delta_p = -delta_c;
    return e;
}

DdiParams const ref_ddi = DdiParams::from_combined(0.35);
}  // namespace

//---------------------------------------------------------------------------//
TEST(BetaPhiDdi, no_interaction)
{
    EitParams e = ref_drive(0.1, 1.2, 0.4);
    e.gamma0 = 0.02;
    e.delta_p = 0.1;
    auto const r = beta_phi_ddi(e, DdiParams::from_combined(0.0));
    auto const b = beta0_phi0(e);
    EXPECT_EQ(b.beta, r.beta);
    EXPECT_EQ(b.phi, r.phi);
    EXPECT_EQ(0.0, r.delta_beta);
    EXPECT_EQ(0.0, r.delta_phi);
}

TEST(BetaPhiDdi, resonant_example)
{
    auto const r = beta_phi_ddi(ref_drive(0.1), ref_ddi);
    EXPECT_TRUE(r.converged());
    // Frozen high-precision oracle values
    EXPECT_REL_NEAR(r.delta_beta, 0.75269646631181, 1e-8);
    EXPECT_REL_NEAR(r.delta_phi, 0.372128725427858, 1e-8);
    EXPECT_EQ(r.beta, r.delta_beta);
    EXPECT_GE(r.err_beta, 0);
    EXPECT_GE(r.err_phi, 0);
    // Close to the closed form at this weak interaction
    auto const a = delta_beta_phi_ideal(ref_drive(0.1), ref_ddi);
    EXPECT_NEAR(0.7528, a.delta_beta, 1e-4);
    EXPECT_NEAR(0.3764, a.delta_phi, 1e-4);
    EXPECT_REL_NEAR(r.delta_beta, a.delta_beta, 1e-3);
    EXPECT_REL_NEAR(r.delta_phi, a.delta_phi, 0.02);
}

TEST(BetaPhiDdi, generic_point)
{
    EitParams e;
    e.alpha = 81;
    e.omega_c = 1.2;
    e.delta_p = 0.3;
    e.delta_c = -0.7;
    e.gamma0 = 0.02;
    e.omega_p_in = 0.15;
    auto const r = beta_phi_ddi(e, ref_ddi);
    EXPECT_TRUE(r.converged());
    EXPECT_REL_NEAR(r.beta, 13.0905355893229, 1e-8);
    EXPECT_REL_NEAR(r.phi, -13.6904408826157, 1e-8);
    auto const b = beta0_phi0(e);
    EXPECT_DOUBLE_EQ(r.beta - b.beta, r.delta_beta);
    EXPECT_DOUBLE_EQ(r.phi - b.phi, r.delta_phi);
}

TEST(BetaPhiDdi, oracle_asymmetry_values)
{
    // Frozen oracle: (omega_p_in^2, delta_c) -> (delta beta, delta phi)
    struct Row
    {
        double p2, dc, db, dphi;
    };
    Row const rows[] = {
        {0.005, 1.0, 0.0817771213439485, 0.17215208371945},
        {0.0025, 1.0, 0.0408893121224005, 0.0863402320695813},
        {0.005, -1.0, 0.346413444029981, 0.0398274348033271},
        {0.0025, -1.0, 0.173209906208894, 0.0201791246718014},
    };
    for (auto const& row : rows)
    {
        auto const r = beta_phi_ddi(
            ref_drive(std::sqrt(row.p2), 1.0, row.dc), ref_ddi);
        EXPECT_REL_NEAR(r.delta_beta, row.db, 1e-8);
        EXPECT_REL_NEAR(r.delta_phi, row.dphi, 1e-8);
    }
}

TEST(BetaPhiDdi, quadratic_probe_scaling)
{
    for (double oc : {1.0, 1.4, 2.0})
    {
        for (double p2 : {0.005, 0.001})
        {
            double const op = std::sqrt(p2);
            double const lo = beta_phi_ddi(ref_drive(op / 2, oc), ref_ddi)
                                  .delta_beta;
            double const hi = beta_phi_ddi(ref_drive(op, oc), ref_ddi)
                                  .delta_beta;
            EXPECT_NEAR(4.0, hi / lo, 0.08) << "omega_c=" << oc;
        }
    }
}

TEST(BetaPhiDdi, positivity)
{
    Gen gen(41);
    for (int i = 0; i < 500; ++i)
    {
        EitParams e;
        e.alpha = gen.uniform(0, 200);
        e.omega_c = gen.uniform(0.3, 3);
        e.omega_p_in = gen.uniform(0, 0.3);
        e.delta_p = gen.uniform(-3, 3);
        e.delta_c = gen.uniform(-3, 3);
        e.gamma0 = i % 3 == 0 ? 0.0 : gen.log_uniform(1e-5, 0.1);
        auto const ddi = DdiParams::from_combined(
            gen.uniform(0, 2), gen.uniform(0, 1) < 0.5 ? -1 : 1);
        auto const r = beta_phi_ddi(e, ddi);
        EXPECT_GE(r.beta, 0.0);
        EXPECT_TRUE(r.converged());
    }
}

TEST(BetaPhiDdi, tolerance_refinement_within_error)
{
    EitParams e = ref_drive(0.2, 1.0, -1.0);
    e.gamma0 = 0.012;
    e.delta_p += 0.01;
    ExpectOptions coarse;
    coarse.rel_tol = 1e-6;
    ExpectOptions fine;
    fine.rel_tol = 5e-7;
    auto const a = beta_phi_ddi(e, ref_ddi, coarse);
    auto const b = beta_phi_ddi(e, ref_ddi, fine);
    EXPECT_LE(std::fabs(a.beta - b.beta), a.err_beta);
    EXPECT_LE(std::fabs(a.phi - b.phi), a.err_phi);
}

TEST(BetaPhiDdi, monte_carlo_agreement)
{
    EitParams e = ref_drive(0.2, 1.0, -1.0);
    e.gamma0 = 0.012;
    auto const r = beta_phi_ddi(e, ref_ddi);
    double const wa = omega_a(e, ref_ddi);
    auto const w = sample_shift(1000000, 99, wa);
    double sum = 0, sum2 = 0;
    for (double x : w)
    {
        double const b
            = e.alpha * rho31(e.delta_p, e.delta_c + x, e.gamma0, e.omega_c)
                            .imag();
        sum += b;
        sum2 += b * b;
    }
    double const n = static_cast<double>(w.size());
    double const mean = sum / n;
    double const se = std::sqrt((sum2 / n - mean * mean) / n);
    EXPECT_NEAR(r.beta, mean, 3 * se);
}

TEST(BetaPhiDdi, positive_c6_uses_downward_shift)
{
    EitParams e = ref_drive(0.2, 1.2, 0.6);
    e.delta_p = -0.5;
    e.gamma0 = 0.01;
    auto const pos = DdiParams::from_combined(0.35, +1);
    auto const r = beta_phi_ddi(e, pos);

    // Direct average with the shift entering as delta_c - omega
    NndMeasure const m{omega_a(e, pos), {}};
    ExpectOptions opts;
    opts.omega_hints = {e.omega_c * e.omega_c / (4 * std::fabs(e.delta_p))
                        + e.delta()};
    auto const direct = expect_n<2>(
        [&e](double w) {
            Complex const c
                = rho31(e.delta_p, e.delta_c - w, e.gamma0, e.omega_c);
            return std::array<double, 2>{c.imag(), c.real()};
        },
        m,
        opts);
    EXPECT_REL_NEAR(r.beta, e.alpha * direct.value[0], 1e-7);
    EXPECT_REL_NEAR(r.phi, e.alpha / 2 * direct.value[1], 1e-7);
}

TEST(BetaPhiDdi, mirrored_detunings)
{
    EitParams e = ref_drive(0.1, 1.0, 0.7);
    e.delta_p = 0.2;
    auto const m = mirrored(e);
    EXPECT_EQ(-0.7, m.delta_c);
    EXPECT_EQ(-0.2, m.delta_p);
    EXPECT_EQ(e.omega_c, m.omega_c);
}

//---------------------------------------------------------------------------//
TEST(OnResonance, matches_general_average)
{
    for (double dc : {-1.0, 0.0, 1.0, 2.0})
    {
        auto const e = ref_drive(0.1, 1.0, dc);
        auto const a = delta_beta_phi_on_resonance(e, ref_ddi);
        auto const b = beta_phi_ddi(e, ref_ddi);
        EXPECT_NEAR(a.delta_beta, b.delta_beta, 1e-6);
        EXPECT_NEAR(a.delta_phi, b.delta_phi, 1e-6);
    }
    EXPECT_NEAR(
        0.75, delta_beta_phi_on_resonance(ref_drive(0.1), ref_ddi).delta_beta,
        0.005);
}

TEST(OnResonance, asymmetry)
{
    auto const plus = delta_beta_phi_on_resonance(ref_drive(0.1, 1, 1), ref_ddi);
    auto const minus
        = delta_beta_phi_on_resonance(ref_drive(0.1, 1, -1), ref_ddi);
    EXPECT_LT(plus.delta_beta, minus.delta_beta);
    EXPECT_GT(plus.delta_phi, minus.delta_phi);
}

TEST(OnResonance, contract)
{
    EitParams e = ref_drive(0.1);
    e.gamma0 = 0.01;
    EXPECT_THROW(delta_beta_phi_on_resonance(e, ref_ddi),
                 std::invalid_argument);
    e = ref_drive(0.1);
    e.delta_p = 0.01;
    EXPECT_THROW(delta_beta_phi_on_resonance(e, ref_ddi),
                 std::invalid_argument);
}

TEST(OnResonance, asymmetry_ratio_near_identity)
{
    double const target = std::sqrt(5.0) + 2;
    for (double p2 : {0.005, 0.0025, 0.00125})
    {
        double const op = std::sqrt(p2);
        double const ratio
            = delta_beta_phi_on_resonance(ref_drive(op, 1, -1), ref_ddi)
                  .delta_beta
              / delta_beta_phi_on_resonance(ref_drive(op, 1, 1), ref_ddi)
                    .delta_beta;
        double const dev = std::fabs(ratio / target - 1);
        EXPECT_LT(dev, 0.05);
    }
}

//---------------------------------------------------------------------------//
}  // namespace test
}  // namespace rydeit
