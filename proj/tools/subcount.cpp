//
// Project subcount - Copyright 2026 The subcount Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <iostream>

#include "subcount/cli.hpp"

int main(int argc, char** argv) { return subcount::cli::run(argc, argv, std::cout, std::cerr); }
