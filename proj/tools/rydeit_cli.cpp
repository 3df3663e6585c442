//---------------------------------------------------------------------------//
// Copyright 2026 rydeit contributors.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file rydeit_cli.cpp
//---------------------------------------------------------------------------//
#include <iostream>
#include <string>
#include <vector>

#include "rydeit/cli.hpp"

int main(int argc, char* argv[])
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return rydeit::run_cli(args, std::cout, std::cerr);
}
