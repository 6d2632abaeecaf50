//
// Project subcount - Copyright 2026 The subcount Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "subcount/counting.hpp"

namespace subcount::cli {

/// Exit codes shared by all subcommands.
enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kInputError = 2,
  kPrecondition = 3,
  kOverflow = 4,
};

/// Entry point of the `subcount` tool; argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
/// Same, with the arguments after the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// CSV report shared by `count` and `oracle`:
///   # schema=subcount.report/1 substructure=<kind> level=<node|graph>
///   node,<kind>[,p0,...]      or      <kind>
std::string format_report(const CountReport& report, std::string_view kind_name, bool graph_level, bool verbose);

}  // namespace subcount::cli
