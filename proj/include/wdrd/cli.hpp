#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wdrd {

/// Entry point of the `wdrd` command line; `args` excludes the program name.
/// Returns 0 whenever a result was computed (including negative verdicts),
/// nonzero for usage, IO and parse faults.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wdrd
