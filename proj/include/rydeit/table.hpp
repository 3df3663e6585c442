//---------------------------------------------------------------------------//
// Copyright 2026 rydeit contributors.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file rydeit/table.hpp
//! Numeric tables with CSV and JSON serialization.
//---------------------------------------------------------------------------//
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace rydeit
{
//---------------------------------------------------------------------------//
struct Table
{
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    //! Index of a named column, throws std::invalid_argument if absent
    std::size_t column_index(std::string_view name) const;
    std::vector<double> column(std::string_view name) const;
};

// 17 significant digits; nan and inf spelled out
std::string format_number(double value);

// Comma separated, header row first, one line per row
std::string to_csv(Table const& table);

// {"params": ..., "columns": [...], "rows": [[...], ...]}; non-finite as null
std::string to_json(Table const& table);

// Inverse of to_csv; blank lines are skipped
Table parse_csv(std::string_view text);

// Write through a temporary file in the same directory and rename
void write_file_atomic(std::string const& path, std::string const& content);

std::string read_file(std::string const& path);

//---------------------------------------------------------------------------//
}  // namespace rydeit
