//---------------------------------------------------------------------------//
// Copyright 2026 rydeit contributors.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file svg_plot.cpp
//---------------------------------------------------------------------------//
#include "rydeit/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace rydeit
{
namespace
{
constexpr char const* palette[] = {
    "#000000", "#d62728", "#17becf", "#2ca02c",
    "#1f77b4", "#ff7f0e", "#9467bd", "#8c564b",
};

std::string fmt(char const* spec, double v)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), spec, v);
    return buf;
}

std::string escape(std::string const& s)
{
    std::string out;
    for (char c : s)
    {
        switch (c)
        {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

// Round step of 1, 2 or 5 times a power of ten giving about five ticks
std::vector<double> nice_ticks(double lo, double hi)
{
    double const span = hi - lo;
    double const raw = span / 5;
    double const mag = std::pow(10.0, std::floor(std::log10(raw)));
    double step = mag;
    for (double m : {1.0, 2.0, 5.0, 10.0})
    {
        step = m * mag;
        if (raw <= step)
            break;
    }
    std::vector<double> ticks;
    for (double t = std::ceil(lo / step) * step; t <= hi + 1e-9 * span;
         t += step)
    {
        ticks.push_back(std::fabs(t) < 1e-12 * span ? 0.0 : t);
    }
    return ticks;
}

struct Range
{
    double lo{std::numeric_limits<double>::infinity()};
    double hi{-std::numeric_limits<double>::infinity()};

    void add(double v)
    {
        if (std::isfinite(v))
        {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }
    void pad()
    {
        if (!(hi > lo))
        {
            double const d = (lo == 0 || !std::isfinite(lo)) ? 1 : std::fabs(lo) * 0.1;
            lo = std::isfinite(lo) ? lo - d : -1;
            hi = std::isfinite(hi) ? hi + d : 1;
        }
    }
};
}  // namespace

//---------------------------------------------------------------------------//
std::string emit_plot(Table const& table, PlotStyle const& style)
{
    if (table.rows.size() < 2)
    {
        throw std::invalid_argument("plot needs at least two rows");
    }
    if (style.series.empty())
    {
        throw std::invalid_argument("plot needs at least one series");
    }
    auto const x = table.column(style.x_column);
    std::vector<std::vector<double>> ys;
    for (auto const& s : style.series)
    {
        ys.push_back(table.column(s.column));
    }

    Range xr, yr;
    for (double v : x)
        xr.add(v);
    for (auto const& col : ys)
        for (double v : col)
            yr.add(v);
    xr.pad();
    yr.pad();

    double const left = 70, right = 20, top = 36, bottom = 50;
    double const pw = style.width - left - right;
    double const ph = style.height - top - bottom;
    auto px = [&](double v) { return left + (v - xr.lo) / (xr.hi - xr.lo) * pw; };
    auto py = [&](double v) {
        return top + ph - (v - yr.lo) / (yr.hi - yr.lo) * ph;
    };

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\""
           + std::to_string(style.width) + "\" height=\""
           + std::to_string(style.height) + "\" font-family=\"sans-serif\" "
           "font-size=\"11\">\n";
    svg += "<rect x=\"0\" y=\"0\" width=\"100%\" height=\"100%\" "
           "fill=\"white\"/>\n";
    if (!style.title.empty())
    {
        svg += "<text x=\"" + fmt("%.1f", left + pw / 2)
               + "\" y=\"20\" text-anchor=\"middle\" font-size=\"13\">"
               + escape(style.title) + "</text>\n";
    }
    svg += "<rect x=\"" + fmt("%.1f", left) + "\" y=\"" + fmt("%.1f", top)
           + "\" width=\"" + fmt("%.1f", pw) + "\" height=\""
           + fmt("%.1f", ph) + "\" fill=\"none\" stroke=\"black\"/>\n";

    // Ticks
    for (double t : nice_ticks(xr.lo, xr.hi))
    {
        double const X = px(t);
        svg += "<line x1=\"" + fmt("%.2f", X) + "\" y1=\""
               + fmt("%.2f", top + ph) + "\" x2=\"" + fmt("%.2f", X)
               + "\" y2=\"" + fmt("%.2f", top + ph + 5)
               + "\" stroke=\"black\"/>\n";
        svg += "<text x=\"" + fmt("%.2f", X) + "\" y=\""
               + fmt("%.2f", top + ph + 18) + "\" text-anchor=\"middle\">"
               + fmt("%.4g", t) + "</text>\n";
    }
    for (double t : nice_ticks(yr.lo, yr.hi))
    {
        double const Y = py(t);
        svg += "<line x1=\"" + fmt("%.2f", left - 5) + "\" y1=\""
               + fmt("%.2f", Y) + "\" x2=\"" + fmt("%.2f", left)
               + "\" y2=\"" + fmt("%.2f", Y) + "\" stroke=\"black\"/>\n";
        svg += "<text x=\"" + fmt("%.2f", left - 8) + "\" y=\""
               + fmt("%.2f", Y + 4) + "\" text-anchor=\"end\">"
               + fmt("%.4g", t) + "</text>\n";
    }
    std::string const xl = style.x_label.empty() ? style.x_column
                                                 : style.x_label;
    svg += "<text x=\"" + fmt("%.1f", left + pw / 2) + "\" y=\""
           + fmt("%.1f", static_cast<double>(style.height) - 10)
           + "\" text-anchor=\"middle\">" + escape(xl) + "</text>\n";
    if (!style.y_label.empty())
    {
        svg += "<text x=\"16\" y=\"" + fmt("%.1f", top + ph / 2)
               + "\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
               + fmt("%.1f", top + ph / 2) + ")\">" + escape(style.y_label)
               + "</text>\n";
    }

    // Series
    for (std::size_t s = 0; s < style.series.size(); ++s)
    {
        auto const& ss = style.series[s];
        std::string points;
        for (std::size_t i = 0; i < x.size(); ++i)
        {
            if (!std::isfinite(x[i]) || !std::isfinite(ys[s][i]))
                continue;
            if (!points.empty())
                points += ' ';
            points += fmt("%.2f", px(x[i])) + "," + fmt("%.2f", py(ys[s][i]));
        }
        svg += "<polyline fill=\"none\" stroke=\""
               + std::string(palette[s % std::size(palette)])
               + "\" stroke-width=\"1.5\""
               + (ss.dashed ? " stroke-dasharray=\"6 4\"" : "")
               + " points=\"" + points + "\"/>\n";
    }

    // Legend
    double ly = top + 14;
    for (std::size_t s = 0; s < style.series.size(); ++s)
    {
        auto const& ss = style.series[s];
        double const lx = left + pw - 150;
        svg += "<line x1=\"" + fmt("%.1f", lx) + "\" y1=\"" + fmt("%.1f", ly)
               + "\" x2=\"" + fmt("%.1f", lx + 24) + "\" y2=\""
               + fmt("%.1f", ly) + "\" stroke=\""
               + std::string(palette[s % std::size(palette)])
               + "\" stroke-width=\"1.5\""
               + (ss.dashed ? " stroke-dasharray=\"6 4\"" : "") + "/>\n";
        svg += "<text x=\"" + fmt("%.1f", lx + 30) + "\" y=\""
               + fmt("%.1f", ly + 4) + "\">"
               + escape(ss.label.empty() ? ss.column : ss.label)
               + "</text>\n";
        ly += 16;
    }
    svg += "</svg>\n";
    return svg;
}

//---------------------------------------------------------------------------//
}  // namespace rydeit
