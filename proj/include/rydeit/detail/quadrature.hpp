//---------------------------------------------------------------------------//
// Copyright 2026 rydeit contributors.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file rydeit/detail/quadrature.hpp
//! Globally adaptive 15-point Gauss-Kronrod integration of vector integrands.
//---------------------------------------------------------------------------//
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <queue>
#include <vector>

namespace rydeit
{
namespace detail
{
//---------------------------------------------------------------------------//
template<std::size_t N>
using Vec = std::array<double, N>;

template<std::size_t N>
struct Panel
{
    double lower{};
    double upper{};
    Vec<N> value{};
    Vec<N> error{};
    Vec<N> abs_value{};  //!< integral of |f|
    double priority{};
};

template<std::size_t N>
struct AdaptiveResult
{
    Vec<N> value{};
    Vec<N> error{};
    Vec<N> abs_value{};
    int panels{0};
    bool converged{false};
};

//---------------------------------------------------------------------------//
// QUADPACK qk15 abscissae and weights
inline constexpr double gk15_nodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};
inline constexpr double gk15_weights[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
inline constexpr double g7_weights[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

//---------------------------------------------------------------------------//
/*!
 * One Gauss-Kronrod panel with the QUADPACK error heuristic.
 */
template<std::size_t N, class F>
Panel<N> gk15_panel(F const& f, double lower, double upper)
{
    double const center = 0.5 * (lower + upper);
    double const half = 0.5 * (upper - lower);

    Vec<N> samples[15];
    samples[7] = f(center);
    for (int j = 0; j < 7; ++j)
    {
        double const dx = half * gk15_nodes[j];
        samples[j] = f(center - dx);
        samples[14 - j] = f(center + dx);
    }

    Panel<N> p;
    p.lower = lower;
    p.upper = upper;
    for (std::size_t c = 0; c < N; ++c)
    {
        double const fc = samples[7][c];
        double kronrod = gk15_weights[7] * fc;
        double gauss = g7_weights[3] * fc;
        double abs_k = gk15_weights[7] * std::fabs(fc);
        for (int j = 0; j < 7; ++j)
        {
            double const pair = samples[j][c] + samples[14 - j][c];
            kronrod += gk15_weights[j] * pair;
            abs_k += gk15_weights[j]
                     * (std::fabs(samples[j][c])
                        + std::fabs(samples[14 - j][c]));
            if (j % 2 == 1)
            {
                gauss += g7_weights[j / 2] * pair;
            }
        }
        double const mean = 0.5 * kronrod;
        double asc = gk15_weights[7] * std::fabs(fc - mean);
        for (int j = 0; j < 7; ++j)
        {
            asc += gk15_weights[j]
                   * (std::fabs(samples[j][c] - mean)
                      + std::fabs(samples[14 - j][c] - mean));
        }

        double err = std::fabs((kronrod - gauss) * half);
        asc *= std::fabs(half);
        if (asc != 0 && err != 0)
        {
            err = asc * std::min(1.0, std::pow(200 * err / asc, 1.5));
        }
        double const abs_int = abs_k * std::fabs(half);
        constexpr double eps = std::numeric_limits<double>::epsilon();
        if (abs_int > std::numeric_limits<double>::min() / (50 * eps))
        {
            err = std::max(50 * eps * abs_int, err);
        }
        p.value[c] = kronrod * half;
        p.error[c] = err;
        p.abs_value[c] = abs_int;
    }
    return p;
}

//---------------------------------------------------------------------------//
/*!
 * Integrate over the partition given by \c breaks, bisecting the panel with
 * the largest scaled error until every component satisfies
 * error <= rel_tol * max(|I|, int |f|) or \c max_panels is reached.
 *
 * The final sums run over panels in ascending position, so the result does
 * not depend on refinement order.
 */
template<std::size_t N, class F>
AdaptiveResult<N> integrate_adaptive(F const& f,
                                     std::vector<double> breaks,
                                     double rel_tol,
                                     int max_panels)
{
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

    std::vector<Panel<N>> done;
    auto cmp = [](Panel<N> const& a, Panel<N> const& b) {
        return a.priority < b.priority;
    };
    std::priority_queue<Panel<N>, std::vector<Panel<N>>, decltype(cmp)> work(
        cmp);

    std::vector<Panel<N>> initial;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i)
    {
        initial.push_back(gk15_panel<N>(f, breaks[i], breaks[i + 1]));
    }

    Vec<N> scale{};
    Vec<N> total_err{};
    for (auto const& p : initial)
    {
        for (std::size_t c = 0; c < N; ++c)
        {
            scale[c] += p.abs_value[c];
            total_err[c] += p.error[c];
        }
    }
    for (auto& s : scale)
    {
        s = (s > 0) ? s : 1.0;
    }
    auto prioritize = [&scale](Panel<N>& p) {
        p.priority = 0;
        for (std::size_t c = 0; c < N; ++c)
        {
            p.priority = std::max(p.priority, p.error[c] / scale[c]);
        }
    };
    for (auto& p : initial)
    {
        prioritize(p);
        work.push(p);
    }

    auto converged_now = [&](Vec<N> const& value, Vec<N> const& abs_value,
                             Vec<N> const& err) {
        for (std::size_t c = 0; c < N; ++c)
        {
            double const target
                = rel_tol * std::max(std::fabs(value[c]), abs_value[c]);
            if (!(err[c] <= target))
                return false;
        }
        return true;
    };

    // Running sums: refinement only replaces one panel by two
    Vec<N> run_value{}, run_abs{};
    for (auto const& p : initial)
    {
        for (std::size_t c = 0; c < N; ++c)
        {
            run_value[c] += p.value[c];
            run_abs[c] += p.abs_value[c];
        }
    }

    int panel_count = static_cast<int>(initial.size());
    bool converged = converged_now(run_value, run_abs, total_err);
    while (!converged && panel_count + 1 <= max_panels && !work.empty())
    {
        Panel<N> worst = work.top();
        work.pop();
        double const mid = 0.5 * (worst.lower + worst.upper);
        if (!(mid > worst.lower && mid < worst.upper))
        {
            // Panel can no longer be split in floating point
            done.push_back(worst);
            continue;
        }
        Panel<N> left = gk15_panel<N>(f, worst.lower, mid);
        Panel<N> right = gk15_panel<N>(f, mid, worst.upper);
        for (std::size_t c = 0; c < N; ++c)
        {
            run_value[c] += left.value[c] + right.value[c] - worst.value[c];
            run_abs[c] += left.abs_value[c] + right.abs_value[c]
                          - worst.abs_value[c];
            total_err[c] += left.error[c] + right.error[c] - worst.error[c];
            total_err[c] = std::max(total_err[c], 0.0);
        }
        prioritize(left);
        prioritize(right);
        work.push(left);
        work.push(right);
        ++panel_count;
        converged = converged_now(run_value, run_abs, total_err);
    }

    while (!work.empty())
    {
        done.push_back(work.top());
        work.pop();
    }
    std::sort(done.begin(), done.end(), [](auto const& a, auto const& b) {
        return a.lower < b.lower;
    });

    AdaptiveResult<N> result;
    for (auto const& p : done)
    {
        for (std::size_t c = 0; c < N; ++c)
        {
            result.value[c] += p.value[c];
            result.error[c] += p.error[c];
            result.abs_value[c] += p.abs_value[c];
        }
    }
    result.panels = panel_count;
    result.converged
        = converged_now(result.value, result.abs_value, result.error);
    return result;
}

//---------------------------------------------------------------------------//
}  // namespace detail
}  // namespace rydeit
