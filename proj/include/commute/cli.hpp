#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace commute::cli {

/// Exit codes: 0 success, 2 domain/validation errors (JSON on stderr),
/// 64 usage errors, 65 malformed input files, 70 internal faults.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace commute::cli
