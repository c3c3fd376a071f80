#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace regtri {

/// Runs one CLI invocation (argv without the program name) against explicit
/// streams. Exit codes: 0 success, 1 failed check or refused operation,
/// 2 usage error, 3 unreadable or unsuitable input.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace regtri
