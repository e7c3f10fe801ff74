#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hmlf::cli {

/// Runs the hmlf command line. args excludes the program name.
/// Exit codes: 0 success, 1 usage error, 2 numerical failure (or a failed
/// verification check).
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hmlf::cli
