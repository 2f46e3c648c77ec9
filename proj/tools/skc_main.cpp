// skc_main.cpp
// Copyright (c) 2026, the skc authors
// Licensed under the Apache License Version 2.0.

#include <iostream>
#include <string>
#include <vector>

#include "skc/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return skc::run(args, std::cout, std::cerr);
}
