#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace badderlocks::cli {

/// Exit statuses, stable for scripting.
enum ExitStatus : int {
    kSuccess = 0,
    kMismatch = 1,  // verification failure or vector mismatch
    kUsage = 2,     // bad flags or unknown size; also unreadable input
};

/// Runs one command line. args excludes the program name. Message bytes come
/// from `in` unless --in names a file.
int dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace badderlocks::cli
