//---------------------------------------------------------------------------//
// Copyright 2026 rydeit contributors.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file table.cpp
//---------------------------------------------------------------------------//
#include "rydeit/table.hpp"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace rydeit
{
//---------------------------------------------------------------------------//
std::size_t Table::column_index(std::string_view name) const
{
    for (std::size_t i = 0; i < columns.size(); ++i)
    {
        if (columns[i] == name)
            return i;
    }
    throw std::invalid_argument("no column named '" + std::string(name) + "'");
}

std::vector<double> Table::column(std::string_view name) const
{
    std::size_t const idx = this->column_index(name);
    std::vector<double> result;
    result.reserve(rows.size());
    for (auto const& row : rows)
    {
        result.push_back(row.at(idx));
    }
    return result;
}

//---------------------------------------------------------------------------//
std::string format_number(double value)
{
    if (std::isnan(value))
        return "nan";
    if (std::isinf(value))
        return value > 0 ? "inf" : "-inf";
    char buf[64];
    auto const res = std::to_chars(
        buf, buf + sizeof(buf), value, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

std::string to_csv(Table const& table)
{
    std::string out;
    for (std::size_t i = 0; i < table.columns.size(); ++i)
    {
        out += (i ? "," : "") + table.columns[i];
    }
    out += '\n';
    for (auto const& row : table.rows)
    {
        for (std::size_t i = 0; i < row.size(); ++i)
        {
            if (i)
                out += ',';
            out += format_number(row[i]);
        }
        out += '\n';
    }
    return out;
}

std::string to_json(Table const& table)
{
    nlohmann::ordered_json j;
    j["params"] = table.params;
    j["columns"] = table.columns;
    auto rows = nlohmann::ordered_json::array();
    for (auto const& row : table.rows)
    {
        auto jr = nlohmann::ordered_json::array();
        for (double v : row)
        {
            if (std::isfinite(v))
                jr.push_back(v);
            else
                jr.push_back(nullptr);
        }
        rows.push_back(std::move(jr));
    }
    j["rows"] = std::move(rows);
    return j.dump(2) + "\n";
}

//---------------------------------------------------------------------------//
namespace
{
std::vector<std::string_view> split(std::string_view line, char sep)
{
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true)
    {
        auto const pos = line.find(sep, start);
        parts.push_back(line.substr(start, pos - start));
        if (pos == std::string_view::npos)
            break;
        start = pos + 1;
    }
    return parts;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty()
           && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

double parse_number(std::string_view s)
{
    s = trim(s);
    if (s == "nan" || s.empty())
        return std::numeric_limits<double>::quiet_NaN();
    if (s == "inf")
        return std::numeric_limits<double>::infinity();
    if (s == "-inf")
        return -std::numeric_limits<double>::infinity();
    double value{};
    auto const res = std::from_chars(s.data(), s.data() + s.size(), value);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
    {
        throw std::invalid_argument("not a number: '" + std::string(s) + "'");
    }
    return value;
}
}  // namespace

Table parse_csv(std::string_view text)
{
    Table table;
    bool header = true;
    for (auto line : split(text, '\n'))
    {
        line = trim(line);
        if (line.empty())
            continue;
        auto const fields = split(line, ',');
        if (header)
        {
            for (auto f : fields)
                table.columns.emplace_back(trim(f));
            header = false;
            continue;
        }
        if (fields.size() != table.columns.size())
        {
            throw std::invalid_argument("csv row has wrong number of fields");
        }
        std::vector<double> row;
        for (auto f : fields)
            row.push_back(parse_number(f));
        table.rows.push_back(std::move(row));
    }
    if (header)
    {
        throw std::invalid_argument("csv input has no header row");
    }
    return table;
}

//---------------------------------------------------------------------------//
void write_file_atomic(std::string const& path, std::string const& content)
{
    std::string const tmp = path + ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os)
        {
            throw std::runtime_error("cannot open '" + tmp + "' for writing");
        }
        os << content;
        if (!os.flush())
        {
            throw std::runtime_error("failed writing '" + tmp + "'");
        }
    }
    std::filesystem::rename(tmp, path);
}

std::string read_file(std::string const& path)
{
    std::ifstream is(path, std::ios::binary);
    if (!is)
    {
        throw std::runtime_error("cannot open '" + path + "'");
    }
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

//---------------------------------------------------------------------------//
}  // namespace rydeit
