// cli.hpp
// Copyright (c) 2026, the skc authors
// Licensed under the Apache License Version 2.0.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace skc {

/// Runs one CLI invocation (argv without the program name). Exit code 0 on
/// success, 1 on bad input, 2 when a definite answer was requested but the
/// verdict stayed unknown or inconclusive. `in` backs "-" inputs.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::istream& in);

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace skc
