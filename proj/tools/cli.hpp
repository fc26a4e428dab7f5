#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace weylcount::cli {

/// Runs one CLI invocation. `args` excludes the program name. Returns the
/// process exit code: 0 on success / verification pass, 1 on a verification
/// or --expect mismatch, 2 on usage errors (bad flags, malformed vectors,
/// enumeration caps exceeded).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace weylcount::cli
