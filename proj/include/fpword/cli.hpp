#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fpw {

/// Runs one CLI invocation. Exit codes: 0 = success / property verified,
/// 1 = witness or mismatch found, 2 = usage error.
int dispatch(std::vector<std::string> args, std::ostream& out);

}  // namespace fpw
