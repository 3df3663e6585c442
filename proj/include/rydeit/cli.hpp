//---------------------------------------------------------------------------//
// Copyright 2026 rydeit contributors.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file rydeit/cli.hpp
//---------------------------------------------------------------------------//
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rydeit
{
//---------------------------------------------------------------------------//
//! Process exit codes of the command-line tool
enum ExitCode : int
{
    exit_ok = 0,
    exit_failure = 1,
    exit_usage = 2,
    exit_not_converged = 3,
    exit_unidentifiable = 4,
};

/*!
 * Run one command-line invocation.
 *
 * \c args excludes the program name. Tables go to \c out unless an output
 * path is given; diagnostics go to \c err.
 */
int run_cli(std::vector<std::string> const& args,
            std::ostream& out,
            std::ostream& err);

//---------------------------------------------------------------------------//
}  // namespace rydeit
