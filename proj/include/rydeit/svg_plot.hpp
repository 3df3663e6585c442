//---------------------------------------------------------------------------//
// Copyright 2026 rydeit contributors.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file rydeit/svg_plot.hpp
//---------------------------------------------------------------------------//
#pragma once

#include <string>
#include <vector>

#include "table.hpp"

namespace rydeit
{
//---------------------------------------------------------------------------//
struct SeriesStyle
{
    std::string column;
    std::string label;  //!< defaults to the column name
    bool dashed{false};
};

struct PlotStyle
{
    std::string x_column;
    std::vector<SeriesStyle> series;
    std::string title;
    std::string x_label;
    std::string y_label;
    int width{640};
    int height{420};
};

// Static line plot with axes, ticks and a legend. Output depends only on the
// inputs. Non-finite samples are skipped.
std::string emit_plot(Table const& table, PlotStyle const& style);

//---------------------------------------------------------------------------//
}  // namespace rydeit
